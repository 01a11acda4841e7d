#include "litbench/zss.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "litbench/errors.hpp"

namespace litbench {

namespace {

// Tree flattened to postorder, 1-based: labels[i] is an interned label id,
// lml[i] the postorder index of node i's leftmost leaf.
struct FlatTree {
    int n = 0;
    std::vector<int> labels;
    std::vector<int> lml;
    std::vector<int> keyroots;  // ascending
};

int intern(std::unordered_map<std::string, int>& ids, const std::string& label) {
    const auto [it, inserted] = ids.emplace(label, static_cast<int>(ids.size()));
    return it->second;
}

FlatTree flatten(const TreeNode& root, std::unordered_map<std::string, int>& ids) {
    FlatTree ft;
    ft.labels.push_back(-1);  // index 0 unused
    ft.lml.push_back(0);

    // Returns the postorder index assigned to `node`.
    const auto walk = [&](const auto& self, const TreeNode& node) -> int {
        int first_leaf = 0;
        for (std::size_t c = 0; c < node.children.size(); ++c) {
            const int child_leaf_anchor = self(self, node.children[c]);
            if (c == 0) first_leaf = ft.lml[static_cast<std::size_t>(child_leaf_anchor)];
        }
        ++ft.n;
        ft.labels.push_back(intern(ids, node.label));
        ft.lml.push_back(node.children.empty() ? ft.n : first_leaf);
        return ft.n;
    };
    walk(walk, root);

    // Keyroots: for each distinct leftmost leaf, the highest node owning it.
    std::map<int, int> highest;
    for (int i = 1; i <= ft.n; ++i) highest[ft.lml[static_cast<std::size_t>(i)]] = i;
    for (const auto& [leaf, node] : highest) ft.keyroots.push_back(node);
    std::sort(ft.keyroots.begin(), ft.keyroots.end());
    return ft;
}

void check_size(const DocTree& t, std::size_t count) {
    if (count > kMaxTreeNodes) {
        throw Error("tree has " + std::to_string(count) + " nodes, above the " +
                    std::to_string(kMaxTreeNodes) + "-node limit");
    }
    (void)t;
}

}  // namespace

long long zss_distance(const DocTree& a, const DocTree& b,
                       const EditCosts& costs) {
    check_size(a, a.node_count());
    check_size(b, b.node_count());

    std::unordered_map<std::string, int> ids;
    const FlatTree t1 = flatten(a.root, ids);
    const FlatTree t2 = flatten(b.root, ids);
    const int n1 = t1.n;
    const int n2 = t2.n;

    const auto rel = [&](int i, int j) -> std::int64_t {
        return t1.labels[static_cast<std::size_t>(i)] ==
                       t2.labels[static_cast<std::size_t>(j)]
                   ? 0
                   : costs.relabel_mismatch;
    };

    const std::size_t stride = static_cast<std::size_t>(n2) + 1;
    std::vector<std::int64_t> td(static_cast<std::size_t>(n1 + 1) * stride, 0);
    const auto td_at = [&](int i, int j) -> std::int64_t& {
        return td[static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j)];
    };

    std::vector<std::int64_t> fd(static_cast<std::size_t>(n1 + 2) *
                                 (static_cast<std::size_t>(n2) + 2));
    for (const int x : t1.keyroots) {
        const int lx = t1.lml[static_cast<std::size_t>(x)];
        const int w = x - lx + 1;
        for (const int y : t2.keyroots) {
            const int ly = t2.lml[static_cast<std::size_t>(y)];
            const int h = y - ly + 1;

            const std::size_t fstride = static_cast<std::size_t>(h) + 1;
            const auto fd_at = [&](int i, int j) -> std::int64_t& {
                return fd[static_cast<std::size_t>(i) * fstride +
                          static_cast<std::size_t>(j)];
            };
            fd_at(0, 0) = 0;
            for (int i = 1; i <= w; ++i) fd_at(i, 0) = fd_at(i - 1, 0) + costs.delete_cost;
            for (int j = 1; j <= h; ++j) fd_at(0, j) = fd_at(0, j - 1) + costs.insert_cost;

            for (int i = 1; i <= w; ++i) {
                const int node1 = lx + i - 1;
                for (int j = 1; j <= h; ++j) {
                    const int node2 = ly + j - 1;
                    const std::int64_t del = fd_at(i - 1, j) + costs.delete_cost;
                    const std::int64_t ins = fd_at(i, j - 1) + costs.insert_cost;
                    if (t1.lml[static_cast<std::size_t>(node1)] == lx &&
                        t2.lml[static_cast<std::size_t>(node2)] == ly) {
                        const std::int64_t sub =
                            fd_at(i - 1, j - 1) + rel(node1, node2);
                        const std::int64_t best = std::min({del, ins, sub});
                        td_at(node1, node2) = best;
                        fd_at(i, j) = best;
                    } else {
                        const std::int64_t sub =
                            fd_at(t1.lml[static_cast<std::size_t>(node1)] - lx,
                                  t2.lml[static_cast<std::size_t>(node2)] - ly) +
                            td_at(node1, node2);
                        fd_at(i, j) = std::min({del, ins, sub});
                    }
                }
            }
        }
    }
    return td_at(n1, n2);
}

double nted_pair(const DocTree& pred, const DocTree& gt) {
    const auto larger =
        static_cast<double>(std::max(pred.node_count(), gt.node_count()));
    const auto td = static_cast<double>(zss_distance(pred, gt));
    return std::clamp(1.0 - td / larger, 0.0, 1.0);
}

double corpus_nted(std::span<const std::pair<DocTree, DocTree>> pairs) {
    if (pairs.empty()) throw std::invalid_argument("corpus_nted: empty corpus");
    double total = 0.0;
    for (const auto& [pred, gt] : pairs) total += nted_pair(pred, gt);
    return total / static_cast<double>(pairs.size());
}

}  // namespace litbench
