#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "litbench/box.hpp"
#include "litbench/page.hpp"
#include "litbench/report.hpp"
#include "litbench/sample.hpp"

namespace litbench {

// Intersection over union. Two equal boxes score 1 even at zero area; unequal
// boxes with zero union score 0.
double box_iou(const BoundingBox& a, const BoundingBox& b);

struct MatchedPair {
    std::size_t pred = 0;  // line indices into the source documents
    std::size_t gt = 0;
    double iou = 0.0;
};

// One-to-one line assignment; every paired IoU is > 0, all other line indices
// land in the unmatched lists (ascending).
struct Matching {
    std::vector<MatchedPair> pairs;
    std::vector<std::size_t> unmatched_pred;
    std::vector<std::size_t> unmatched_gt;
};

// Globally optimal assignment maximizing total IoU over the boxed lines of
// each side (boxless lines are unmatched). Exact, not greedy.
Matching match_lines(const PageDocument& pred, const PageDocument& gt);

// Sum of matched IoU divided by max(n_pred, n_gt); 1.0 when both counts are
// zero. The divisor penalizes over- and under-detection symmetrically.
double page_iou(const Matching& matching, std::size_t n_pred, std::size_t n_gt);

struct F1Score {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

// Order-free multiset match of whitespace-separated words, case-sensitive.
// Both sides empty score 1; exactly one side empty scores 0.
F1Score word_f1(std::string_view pred_text, std::string_view gt_text);

// NED similarity of the two pages' line texts joined with "\n" in stored
// order (reading order is part of the score).
double page_ned(const PageDocument& pred, const PageDocument& gt);

// iou is absent when the prediction carries no boxed line, mirroring models
// that emit only text.
struct OcrScores {
    double f1 = 0.0;
    std::optional<double> iou;
    double ned = 0.0;
};

OcrScores score_ocr_sample(const PageDocument& pred, const PageDocument& gt);

// Scores every OCR-task sample against `predictions` (keyed by sample id) and
// aggregates unweighted per-category and overall means. Samples without a
// prediction score 0 everywhere, with a diagnostic. The iou metric appears
// only when at least one prediction carried boxes; absent per-sample iou
// counts as 0 toward the mean once the column exists. Prediction ids not in
// the samples are an error.
EvalReport evaluate_ocr(std::span<const Sample> samples,
                        const std::map<std::string, PageDocument>& predictions,
                        int jobs = 1);

}  // namespace litbench
