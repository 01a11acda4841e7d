#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "litbench/doctree.hpp"
#include "litbench/markdown.hpp"
#include "litbench/zss.hpp"

namespace {

// Random ordered tree grown by attaching each node under a uniformly chosen
// earlier node; labels repeat so matches and relabels both happen.
litbench::DocTree random_tree(std::mt19937_64& rng, int nodes) {
    std::vector<litbench::TreeNode*> flat;
    litbench::DocTree tree{{"r", {}}};
    flat.push_back(&tree.root);
    for (int i = 1; i < nodes; ++i) {
        litbench::TreeNode* parent = flat[rng() % flat.size()];
        parent->children.push_back(
            {std::string(1, static_cast<char>('a' + rng() % 4)), {}});
        // Children of other nodes never move, so only the touched parent's
        // child pointers need refreshing.
        flat.clear();
        flat.push_back(&tree.root);
        for (std::size_t k = 0; k < flat.size(); ++k) {
            for (litbench::TreeNode& c : flat[k]->children) flat.push_back(&c);
        }
    }
    return tree;
}

void BM_zss_distance(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const int n = static_cast<int>(state.range(0));
    const litbench::DocTree a = random_tree(rng, n);
    const litbench::DocTree b = random_tree(rng, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(litbench::zss_distance(a, b));
    }
    state.SetComplexityN(n);
}

void BM_markdown_nted(benchmark::State& state) {
    // End-to-end shape: parse two markdown documents and score them.
    std::string md_a = "# Title\n\n";
    std::string md_b = "# Title\n\n";
    for (int i = 0; i < state.range(0); ++i) {
        md_a += "- item " + std::to_string(i) + " with **bold** text\n";
        md_b += "- item " + std::to_string(i) + " with plain text\n";
    }
    const litbench::MarkdownDocument da(md_a);
    const litbench::MarkdownDocument db(md_b);
    for (auto _ : state) {
        benchmark::DoNotOptimize(litbench::nted_pair(litbench::parse_markdown(da),
                                                     litbench::parse_markdown(db)));
    }
}

}  // namespace

BENCHMARK(BM_zss_distance)->Range(8, 256)->Complexity();
BENCHMARK(BM_markdown_nted)->Range(8, 128);
