#include "litbench/dedup.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "parallel_for.hpp"

namespace litbench {

namespace {

void validate(const DedupParams& p) {
    if (!(p.threshold > 0.0 && p.threshold <= 1.0)) {
        throw std::invalid_argument("dedup threshold must be in (0, 1]");
    }
    if (p.shingle_n < 1) throw std::invalid_argument("shingle size must be >= 1");
    if (p.k < 1 || p.bands < 1 || p.rows < 1 || p.bands * p.rows != p.k) {
        throw std::invalid_argument("lsh layout must satisfy bands * rows = k");
    }
    if (p.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
}

std::uint64_t band_key(const MinHashSignature& sig, int band, int rows) {
    // FNV-1a over the band's minima, mixed with the band index so equal
    // minima in different bands never collide into one bucket.
    std::uint64_t h = 1469598103934665603ull;
    const auto mix = [&h](std::uint64_t v) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (v >> (byte * 8)) & 0xFF;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(band));
    for (int r = 0; r < rows; ++r) {
        mix(sig.minima[static_cast<std::size_t>(band * rows + r)]);
    }
    return h;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    std::vector<double> min_sim;  // per root: smallest confirming edge

    explicit UnionFind(std::size_t n) : parent(n), min_sim(n, 1.0) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b, double sim) {
        std::size_t ra = find(a);
        std::size_t rb = find(b);
        if (ra == rb) {
            min_sim[ra] = std::min(min_sim[ra], sim);
            return;
        }
        if (rb < ra) std::swap(ra, rb);  // smaller index wins, keep-first friendly
        parent[rb] = ra;
        min_sim[ra] = std::min({min_sim[ra], min_sim[rb], sim});
    }
};

}  // namespace

DedupResult dedup(std::span<const DedupRecord> records, const DedupParams& params) {
    validate(params);
    {
        std::unordered_set<std::string> ids;
        for (const DedupRecord& r : records) {
            if (!ids.insert(r.id).second) {
                throw std::invalid_argument("duplicate record id \"" + r.id + "\"");
            }
        }
    }

    std::vector<MinHashSignature> sigs(records.size());
    detail::parallel_index(records.size(), params.jobs, [&](std::size_t i) {
        sigs[i] = signature(shingle(records[i].text, params.shingle_n), params.k,
                            params.seed);
    });

    // Group record indices by source (or all together in global scope).
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < records.size(); ++i) {
        groups[params.global_scope ? std::string{} : records[i].source].push_back(i);
    }

    UnionFind uf(records.size());
    for (const auto& [source, members] : groups) {
        // LSH: records agreeing on any full band become candidate pairs.
        std::set<std::pair<std::size_t, std::size_t>> candidates;
        for (int band = 0; band < params.bands; ++band) {
            std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
            for (const std::size_t i : members) {
                buckets[band_key(sigs[i], band, params.rows)].push_back(i);
            }
            for (const auto& [key, bucket] : buckets) {
                for (std::size_t a = 0; a < bucket.size(); ++a) {
                    for (std::size_t b = a + 1; b < bucket.size(); ++b) {
                        candidates.emplace(std::min(bucket[a], bucket[b]),
                                           std::max(bucket[a], bucket[b]));
                    }
                }
            }
        }
        for (const auto& [a, b] : candidates) {
            const double sim = estimate_jaccard(sigs[a], sigs[b]);
            if (sim >= params.threshold) uf.unite(a, b, sim);
        }
    }

    std::map<std::size_t, std::vector<std::size_t>> clusters;  // root -> members
    for (std::size_t i = 0; i < records.size(); ++i) {
        clusters[uf.find(i)].push_back(i);
    }

    DedupResult result;
    std::vector<bool> dropped(records.size(), false);
    for (const auto& [root, members] : clusters) {
        if (members.size() < 2) continue;
        DuplicateCluster c;
        c.kept = records[members.front()].id;  // members are in input order
        c.similarity = uf.min_sim[root];
        for (std::size_t m = 1; m < members.size(); ++m) {
            c.dropped.push_back(records[members[m]].id);
            dropped[members[m]] = true;
        }
        result.clusters.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!dropped[i]) result.kept_ids.push_back(records[i].id);
    }
    return result;
}

}  // namespace litbench
