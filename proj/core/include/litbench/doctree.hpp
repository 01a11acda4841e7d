#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace litbench {

struct TreeNode {
    std::string label;
    std::vector<TreeNode> children;

    friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

// Rooted, ordered, labeled tree. Markdown parsing produces a root labeled
// "root" whose structural nodes come from a closed tag set and whose leaves
// are "text:<content>" nodes; hand-built trees may use any labels.
struct DocTree {
    TreeNode root;

    std::size_t node_count() const;

    // Debug dumps for fixture authoring: two-space-indented labels, and JSON
    // of the form {"label": ..., "children": [...]}.
    std::string to_text() const;
    nlohmann::json to_json() const;

    friend bool operator==(const DocTree&, const DocTree&) = default;
};

// Convenience for test fixtures: node("p", {node("text:hi")}).
inline TreeNode node(std::string label, std::vector<TreeNode> children = {}) {
    return {std::move(label), std::move(children)};
}

}  // namespace litbench
