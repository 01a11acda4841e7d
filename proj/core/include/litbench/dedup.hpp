#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "litbench/minhash.hpp"

namespace litbench {

// One document entering deduplication. Records sharing a `source` are
// compared with each other; records from different sources are not (the
// corpus was deduplicated within each source), unless global scope is on.
struct DedupRecord {
    std::string id;
    std::string text;
    std::string source;  // empty = the single default source
};

struct DedupParams {
    double threshold = 0.8;  // signature similarity at or above marks a duplicate
    int shingle_n = 5;
    int k = 128;
    int bands = 32;  // bands * rows must equal k
    int rows = 4;
    std::uint64_t seed = kDefaultMinHashSeed;
    bool global_scope = false;
    int jobs = 1;
};

// A connected group of near-duplicates: the first record in input order is
// kept, the rest dropped. `similarity` is the smallest confirming edge in
// the group, so it is always >= the threshold.
struct DuplicateCluster {
    std::string kept;
    std::vector<std::string> dropped;
    double similarity = 0.0;
};

struct DedupResult {
    std::vector<std::string> kept_ids;  // input order
    std::vector<DuplicateCluster> clusters;
};

// LSH-banded candidate generation over MinHash signatures, then pairwise
// signature-similarity confirmation at the threshold. Deterministic given
// the seed; record ids must be unique.
DedupResult dedup(std::span<const DedupRecord> records,
                  const DedupParams& params = {});

}  // namespace litbench
