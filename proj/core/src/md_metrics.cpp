#include "litbench/md_metrics.hpp"

#include <set>
#include <vector>

#include "litbench/errors.hpp"
#include "litbench/markdown.hpp"
#include "litbench/textdist.hpp"
#include "litbench/version.hpp"
#include "litbench/zss.hpp"
#include "parallel_for.hpp"

namespace litbench {

MdScores score_md_sample(const MarkdownDocument& pred, const MarkdownDocument& gt) {
    MdScores s;
    s.ned = ned_pair(pred.source(), gt.source()).similarity;
    s.nted = nted_pair(parse_markdown(pred), parse_markdown(gt));
    return s;
}

EvalReport evaluate_markdown(
    std::span<const Sample> samples,
    const std::map<std::string, MarkdownDocument>& predictions, int jobs) {
    std::set<std::string> known;
    for (const Sample& s : samples) {
        if (s.task() != Task::markdown) {
            throw Error("sample \"" + s.id + "\" is not a markdown sample");
        }
        known.insert(s.id);
    }
    std::string orphans;
    for (const auto& [id, md] : predictions) {
        if (known.count(id)) continue;
        if (!orphans.empty()) orphans += ", ";
        orphans += id;
    }
    if (!orphans.empty()) {
        throw Error("prediction ids not in manifest: " + orphans);
    }

    struct Row {
        MdScores scores;
        bool missing = false;
    };
    std::vector<Row> rows(samples.size());
    detail::parallel_index(samples.size(), jobs, [&](std::size_t i) {
        const auto it = predictions.find(samples[i].id);
        if (it == predictions.end()) {
            rows[i].missing = true;
            return;
        }
        rows[i].scores = score_md_sample(it->second, samples[i].markdown());
    });

    EvalReport report;
    report.task = "markdown";
    report.version = kVersion;
    struct Sums {
        std::size_t count = 0;
        double ned = 0.0, nted = 0.0;
    };
    std::map<std::string, Sums> by_category;
    Sums overall;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (rows[i].missing) {
            report.diagnostics.push_back("no prediction for id \"" +
                                         samples[i].id + "\"; scored 0");
        }
        const std::string cat(to_string(samples[i].category));
        for (Sums* sums : {&by_category[cat], &overall}) {
            sums->count += 1;
            sums->ned += rows[i].scores.ned;
            sums->nted += rows[i].scores.nted;
        }
    }
    const auto to_row = [](const Sums& sums) {
        MetricRow row;
        row.count = sums.count;
        const double n = sums.count ? static_cast<double>(sums.count) : 1.0;
        row.metrics["ned"] = sums.ned / n;
        row.metrics["nted"] = sums.nted / n;
        return row;
    };
    for (const auto& [cat, sums] : by_category) report.per_category[cat] = to_row(sums);
    report.overall = to_row(overall);
    report.aggregation = {
        {"ned", "1 - edit distance / max length over raw markdown source"},
        {"nted", "1 - tree edit distance / max node count over parsed trees"},
        {"overall", "unweighted mean over all samples (not a mean of category means)"},
    };
    return report;
}

}  // namespace litbench
