#include "litbench/ocr_metrics.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "litbench/assignment.hpp"
#include "litbench/errors.hpp"
#include "litbench/textdist.hpp"
#include "litbench/unicode.hpp"
#include "litbench/version.hpp"
#include "parallel_for.hpp"

namespace litbench {

namespace {

std::vector<std::size_t> boxed_indices(const PageDocument& doc) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
        if (doc.lines[i].bbox) out.push_back(i);
    }
    return out;
}

std::string joined_text(const PageDocument& doc) {
    std::string out;
    for (std::size_t i = 0; i < doc.lines.size(); ++i) {
        if (i) out += '\n';
        out += doc.lines[i].text;
    }
    return out;
}

}  // namespace

double box_iou(const BoundingBox& a, const BoundingBox& b) {
    const std::int64_t uni = union_area(a, b);
    if (uni == 0) return a == b ? 1.0 : 0.0;
    return static_cast<double>(intersection_area(a, b)) / static_cast<double>(uni);
}

Matching match_lines(const PageDocument& pred, const PageDocument& gt) {
    const std::vector<std::size_t> pi = boxed_indices(pred);
    const std::vector<std::size_t> gi = boxed_indices(gt);

    std::vector<std::vector<double>> weight(pi.size(),
                                            std::vector<double>(gi.size(), 0.0));
    for (std::size_t r = 0; r < pi.size(); ++r) {
        for (std::size_t c = 0; c < gi.size(); ++c) {
            weight[r][c] = box_iou(*pred.lines[pi[r]].bbox, *gt.lines[gi[c]].bbox);
        }
    }
    const std::vector<int> row_match = max_weight_assignment(weight);

    Matching m;
    std::vector<bool> gt_taken(gt.lines.size(), false);
    std::vector<bool> pred_taken(pred.lines.size(), false);
    for (std::size_t r = 0; r < pi.size(); ++r) {
        const int c = row_match[r];
        if (c < 0 || weight[r][static_cast<std::size_t>(c)] <= 0.0) continue;
        m.pairs.push_back(
            {pi[r], gi[static_cast<std::size_t>(c)], weight[r][static_cast<std::size_t>(c)]});
        pred_taken[pi[r]] = true;
        gt_taken[gi[static_cast<std::size_t>(c)]] = true;
    }
    for (std::size_t i = 0; i < pred.lines.size(); ++i) {
        if (!pred_taken[i]) m.unmatched_pred.push_back(i);
    }
    for (std::size_t i = 0; i < gt.lines.size(); ++i) {
        if (!gt_taken[i]) m.unmatched_gt.push_back(i);
    }
    return m;
}

double page_iou(const Matching& matching, std::size_t n_pred, std::size_t n_gt) {
    const std::size_t denom = std::max(n_pred, n_gt);
    if (denom == 0) return 1.0;
    double total = 0.0;
    for (const MatchedPair& p : matching.pairs) total += p.iou;
    return total / static_cast<double>(denom);
}

F1Score word_f1(std::string_view pred_text, std::string_view gt_text) {
    const std::vector<std::string> pred_words = uni::split_ws(pred_text);
    const std::vector<std::string> gt_words = uni::split_ws(gt_text);
    if (pred_words.empty() && gt_words.empty()) return {1.0, 1.0, 1.0};
    if (pred_words.empty() || gt_words.empty()) return {0.0, 0.0, 0.0};

    std::unordered_map<std::string, std::size_t> gt_counts;
    for (const std::string& w : gt_words) ++gt_counts[w];
    std::size_t tp = 0;
    for (const std::string& w : pred_words) {
        const auto it = gt_counts.find(w);
        if (it != gt_counts.end() && it->second > 0) {
            --it->second;
            ++tp;
        }
    }
    const double precision = static_cast<double>(tp) / pred_words.size();
    const double recall = static_cast<double>(tp) / gt_words.size();
    const double f1 = precision + recall > 0.0
                          ? 2.0 * precision * recall / (precision + recall)
                          : 0.0;
    return {precision, recall, f1};
}

double page_ned(const PageDocument& pred, const PageDocument& gt) {
    return ned_pair(joined_text(pred), joined_text(gt)).similarity;
}

OcrScores score_ocr_sample(const PageDocument& pred, const PageDocument& gt) {
    OcrScores s;
    const std::string pred_text = joined_text(pred);
    const std::string gt_text = joined_text(gt);
    s.f1 = word_f1(pred_text, gt_text).f1;
    s.ned = ned_pair(pred_text, gt_text).similarity;

    const std::size_t n_pred = boxed_indices(pred).size();
    if (n_pred > 0) {
        const std::size_t n_gt = boxed_indices(gt).size();
        s.iou = page_iou(match_lines(pred, gt), n_pred, n_gt);
    }
    return s;
}

EvalReport evaluate_ocr(std::span<const Sample> samples,
                        const std::map<std::string, PageDocument>& predictions,
                        int jobs) {
    std::set<std::string> known;
    for (const Sample& s : samples) {
        if (s.task() != Task::ocr) {
            throw Error("sample \"" + s.id + "\" is not an ocr sample");
        }
        known.insert(s.id);
    }
    std::string orphans;
    for (const auto& [id, page] : predictions) {
        if (known.count(id)) continue;
        if (!orphans.empty()) orphans += ", ";
        orphans += id;
    }
    if (!orphans.empty()) {
        throw Error("prediction ids not in manifest: " + orphans);
    }

    struct Row {
        OcrScores scores;
        bool missing = false;
    };
    std::vector<Row> rows(samples.size());
    detail::parallel_index(samples.size(), jobs, [&](std::size_t i) {
        const auto it = predictions.find(samples[i].id);
        if (it == predictions.end()) {
            rows[i].missing = true;
            return;
        }
        rows[i].scores = score_ocr_sample(it->second, samples[i].page());
    });

    const bool any_iou =
        std::any_of(rows.begin(), rows.end(),
                    [](const Row& r) { return r.scores.iou.has_value(); });

    EvalReport report;
    report.task = "ocr";
    report.version = kVersion;
    struct Sums {
        std::size_t count = 0;
        double f1 = 0.0, iou = 0.0, ned = 0.0;
    };
    std::map<std::string, Sums> by_category;
    Sums overall;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (rows[i].missing) {
            report.diagnostics.push_back("no prediction for id \"" +
                                         samples[i].id + "\"; scored 0");
        }
        const OcrScores& s = rows[i].scores;
        const std::string cat(to_string(samples[i].category));
        for (Sums* sums : {&by_category[cat], &overall}) {
            sums->count += 1;
            sums->f1 += s.f1;
            sums->iou += s.iou.value_or(0.0);
            sums->ned += s.ned;
        }
    }
    const auto to_row = [&](const Sums& sums) {
        MetricRow row;
        row.count = sums.count;
        const double n = sums.count ? static_cast<double>(sums.count) : 1.0;
        row.metrics["f1"] = sums.f1 / n;
        row.metrics["ned"] = sums.ned / n;
        if (any_iou) row.metrics["iou"] = sums.iou / n;
        return row;
    };
    for (const auto& [cat, sums] : by_category) report.per_category[cat] = to_row(sums);
    report.overall = to_row(overall);
    report.aggregation = {
        {"f1", "per-sample word-multiset f1, case-sensitive, averaged unweighted"},
        {"iou", "optimal line assignment; matched iou sum / max(pred lines, gt lines)"},
        {"ned", "1 - edit distance / max length over newline-joined page text"},
        {"overall", "unweighted mean over all samples (not a mean of category means)"},
    };
    return report;
}

}  // namespace litbench
