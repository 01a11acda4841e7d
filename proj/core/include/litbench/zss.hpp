#pragma once

#include <span>
#include <string>
#include <utility>

#include "litbench/doctree.hpp"

namespace litbench {

// Unit-cost edit model: inserting or deleting a node costs 1, relabeling
// costs 1 when the labels differ and 0 when they match.
struct EditCosts {
    int insert_cost = 1;
    int delete_cost = 1;
    int relabel_mismatch = 1;

    int relabel(const std::string& a, const std::string& b) const {
        return a == b ? 0 : relabel_mismatch;
    }
};

// Guard against adversarial inputs; the DP tables are quadratic in this.
inline constexpr std::size_t kMaxTreeNodes = 20000;

// Exact ordered tree edit distance: postorder numbering, leftmost-leaf
// table, keyroots, forest-distance DP. Throws Error when either tree has
// more than kMaxTreeNodes nodes.
long long zss_distance(const DocTree& a, const DocTree& b,
                       const EditCosts& costs = {});

// 1 - distance / max(node counts), clamped into [0, 1]. The clamp matters:
// under unit costs the distance can exceed the larger node count (a 3-node
// star against a 3-node chain with disjoint labels costs 4).
double nted_pair(const DocTree& pred, const DocTree& gt);

// Mean pairwise NTED. The corpus must be non-empty.
double corpus_nted(std::span<const std::pair<DocTree, DocTree>> pairs);

}  // namespace litbench
