#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "litbench/minhash.hpp"

namespace litbench::harness {

// Process exit contract, frozen for CI use.
inline constexpr int kExitOk = 0;       // clean run, outputs written
inline constexpr int kExitFatal = 1;    // unreadable input, I/O failure, internal error
inline constexpr int kExitLenient = 2;  // run finished but some predictions were repaired or skipped
inline constexpr int kExitUsage = 64;   // bad flags or out-of-range parameters
inline constexpr int kExitParse = 65;   // malformed input in a strictly parsed format

// Every run_* function writes its outputs under the options' out path (or the
// given stream), reports problems on `err`, and returns one of the exit codes
// above. Nothing throws across this boundary.

struct EvalOptions {
    std::string task;  // "ocr" or "markdown"
    std::filesystem::path manifest;
    std::filesystem::path predictions;
    std::filesystem::path out_dir;
    int bins = 4096;
    std::uint64_t seed = 0;
    int jobs = 1;
};

// Scores predictions against the manifest and writes report.json + report.txt.
// Malformed prediction lines are skipped with a diagnostic and turn the exit
// code to kExitLenient; a sample without a prediction scores zero but is not
// an error. Unknown prediction ids and unreadable files are fatal.
int run_eval(const EvalOptions& opt, std::ostream& err);

struct DedupOptions {
    std::filesystem::path input;
    std::filesystem::path out_dir;
    double threshold = 0.8;
    int k = 128;
    int bands = 32;
    int rows = 4;
    std::uint64_t seed = kDefaultMinHashSeed;
    bool global_scope = false;
    int jobs = 1;
};

// Near-duplicate removal over JSONL records. Writes kept.jsonl (the surviving
// input lines, original bytes and order) and clusters.jsonl (one duplicate
// cluster per line: kept id, dropped ids, smallest confirming similarity).
int run_dedup(const DedupOptions& opt, std::ostream& err);

struct AlignOptions {
    std::filesystem::path input;
    std::filesystem::path out_dir;
    double min_ratio = 0.95;
};

// Image-text/markdown alignment filter. Writes kept.jsonl and dropped.jsonl
// (id plus the ratio that fell at or below the bar).
int run_align(const AlignOptions& opt, std::ostream& err);

struct LangOptions {
    std::filesystem::path input;
    std::filesystem::path out_dir;
    double threshold = 0.5;
};

// English-language filter using the bundled trigram classifier. Writes
// kept.jsonl and dropped.jsonl (id, detected language, confidence).
int run_lang(const LangOptions& opt, std::ostream& err);

struct MixOptions {
    std::filesystem::path spec;  // mixture spec JSON file
    std::filesystem::path out_dir;
    std::size_t total = 0;
    std::uint64_t seed = 0;
};

// Seeded mixture sampling across JSONL sources. Writes mixture.jsonl (the
// drawn records, with replacement) and counts.json (per-source draw counts
// plus the exact configuration for reproduction).
int run_mix(const MixOptions& opt, std::ostream& err);

struct CodecOptions {
    bool encode = true;   // false = decode
    std::string format;   // "tokens" or "bracketed"
    std::filesystem::path input;
    std::filesystem::path output;  // "-" writes to stdout
    int bins = 4096;
};

// Wire-format round-trip tool. decode turns a token-stream JSON file or a
// bracketed text file into a quantized page JSON ({"qlines": [...]}); encode
// goes the other way and also accepts a pixel page JSON, quantizing it first.
// decode-then-encode reproduces canonical wire input byte-exactly.
int run_codec(const CodecOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace litbench::harness
