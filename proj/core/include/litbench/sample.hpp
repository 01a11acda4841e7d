#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "litbench/page.hpp"

namespace litbench {

enum class Task { ocr, markdown };

enum class Category {
    handwritten,
    design,
    receipt,
    general,
    academic,
    web,
    math,
    table,
    readme,
    docx,
    arxiv,
};

std::string_view to_string(Task t);
std::string_view to_string(Category c);
std::optional<Task> task_from_string(std::string_view s);
std::optional<Category> category_from_string(std::string_view s);

// One benchmark record: an id, a category, and the ground truth for exactly
// one task. The task is derived from which alternative is held, so it cannot
// disagree with the payload. `extra` carries unrecognized manifest fields so
// a read/write cycle does not lose them.
struct Sample {
    std::string id;
    Category category = Category::general;
    std::variant<PageDocument, MarkdownDocument> ground_truth;
    nlohmann::json extra = nlohmann::json::object();

    Task task() const {
        return std::holds_alternative<PageDocument>(ground_truth) ? Task::ocr
                                                                  : Task::markdown;
    }
    const PageDocument& page() const { return std::get<PageDocument>(ground_truth); }
    const MarkdownDocument& markdown() const {
        return std::get<MarkdownDocument>(ground_truth);
    }

    friend bool operator==(const Sample&, const Sample&) = default;
};

}  // namespace litbench
