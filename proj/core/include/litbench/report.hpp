#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace litbench {

// Aggregated metric values for one group of samples. Values are in [0, 1];
// rendering scales them to percentages.
struct MetricRow {
    std::size_t count = 0;
    std::map<std::string, double> metrics;

    friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

// Evaluation output: per-category rows plus an overall row that is the
// unweighted mean over all per-sample scores (not a mean of category means).
struct EvalReport {
    std::string task;
    std::map<std::string, MetricRow> per_category;
    MetricRow overall;
    std::vector<std::string> diagnostics;
    std::map<std::string, std::string> aggregation;  // rule name -> description
    nlohmann::json config = nlohmann::json::object();
    std::string version;

    nlohmann::json to_json() const;

    // Plain-text table, one category per row, metric cells scaled x100 with
    // one decimal ("98.3 / 74.4 / 95.6"). A metric absent from a row renders
    // as "-".
    std::string to_text() const;
};

}  // namespace litbench
