#include "litbench/report.hpp"

#include <algorithm>
#include <cstdio>

namespace litbench {

namespace {

nlohmann::json row_to_json(const MetricRow& row) {
    nlohmann::json j;
    j["count"] = row.count;
    j["metrics"] = row.metrics;
    return j;
}

std::string format_cell(const MetricRow& row, const std::vector<std::string>& order) {
    std::string cell;
    for (const std::string& name : order) {
        if (!cell.empty()) cell += " / ";
        const auto it = row.metrics.find(name);
        if (it == row.metrics.end()) {
            cell += "-";
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", it->second * 100.0);
            cell += buf;
        }
    }
    return cell;
}

}  // namespace

nlohmann::json EvalReport::to_json() const {
    nlohmann::json j;
    j["version"] = version;
    j["task"] = task;
    j["config"] = config;
    j["aggregation"] = aggregation;
    nlohmann::json cats = nlohmann::json::object();
    for (const auto& [name, row] : per_category) cats[name] = row_to_json(row);
    j["per_category"] = cats;
    j["overall"] = row_to_json(overall);
    j["diagnostics"] = diagnostics;
    return j;
}

std::string EvalReport::to_text() const {
    const std::vector<std::string> order =
        task == "ocr" ? std::vector<std::string>{"f1", "iou", "ned"}
                      : std::vector<std::string>{"ned", "nted"};
    std::string header;
    for (const std::string& name : order) {
        if (!header.empty()) header += " / ";
        std::string upper = name;
        std::transform(upper.begin(), upper.end(), upper.begin(),
                       [](unsigned char c) { return std::toupper(c); });
        header += upper;
    }

    std::size_t name_w = std::string("overall").size();
    for (const auto& [name, row] : per_category) name_w = std::max(name_w, name.size());

    std::string out = "task: " + task + "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%-*s  %7s  %s\n", static_cast<int>(name_w),
                  "category", "samples", header.c_str());
    out += line;
    for (const auto& [name, row] : per_category) {
        std::snprintf(line, sizeof line, "%-*s  %7zu  %s\n", static_cast<int>(name_w),
                      name.c_str(), row.count, format_cell(row, order).c_str());
        out += line;
    }
    std::snprintf(line, sizeof line, "%-*s  %7zu  %s\n", static_cast<int>(name_w),
                  "overall", overall.count, format_cell(overall, order).c_str());
    out += line;
    if (!diagnostics.empty()) {
        out += "\ndiagnostics:\n";
        for (const std::string& d : diagnostics) out += "  " + d + "\n";
    }
    return out;
}

}  // namespace litbench
