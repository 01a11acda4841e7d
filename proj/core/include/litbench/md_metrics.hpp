#pragma once

#include <map>
#include <span>
#include <string>

#include "litbench/page.hpp"
#include "litbench/report.hpp"
#include "litbench/sample.hpp"

namespace litbench {

struct MdScores {
    double ned = 0.0;   // raw-source character similarity
    double nted = 0.0;  // parsed-tree structural similarity
};

MdScores score_md_sample(const MarkdownDocument& pred, const MarkdownDocument& gt);

// Markdown-task counterpart of evaluate_ocr: per-category and overall
// unweighted means of NED (over raw markdown) and NTED (over parsed trees).
// Missing predictions score 0 with a diagnostic; unknown ids are an error.
EvalReport evaluate_markdown(
    std::span<const Sample> samples,
    const std::map<std::string, MarkdownDocument>& predictions, int jobs = 1);

}  // namespace litbench
