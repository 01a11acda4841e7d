#include "litbench/doctree.hpp"

namespace litbench {

namespace {

std::size_t count_nodes(const TreeNode& n) {
    std::size_t total = 1;
    for (const TreeNode& c : n.children) total += count_nodes(c);
    return total;
}

void dump_text(const TreeNode& n, int depth, std::string& out) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    out += n.label;
    out += '\n';
    for (const TreeNode& c : n.children) dump_text(c, depth + 1, out);
}

nlohmann::json dump_json(const TreeNode& n) {
    nlohmann::json children = nlohmann::json::array();
    for (const TreeNode& c : n.children) children.push_back(dump_json(c));
    return {{"label", n.label}, {"children", std::move(children)}};
}

}  // namespace

std::size_t DocTree::node_count() const {
    return count_nodes(root);
}

std::string DocTree::to_text() const {
    std::string out;
    dump_text(root, 0, out);
    return out;
}

nlohmann::json DocTree::to_json() const {
    return dump_json(root);
}

}  // namespace litbench
