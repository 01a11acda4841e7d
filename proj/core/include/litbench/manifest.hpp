#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "litbench/sample.hpp"

namespace litbench {

// Page <-> JSON conversion shared by the manifest reader and the prediction
// reader. Parsing validates the page; errors cite `line_no` as the offending
// source line. page_from_json(page_to_json(p)) == p.
PageDocument page_from_json(const nlohmann::json& j, std::size_t line_no = 0);
nlohmann::json page_to_json(const PageDocument& page);

// Reads a JSONL manifest: one sample object per line, blank lines ignored.
// Rejects malformed records, invalid pages, and duplicate ids; errors carry
// the 1-based line number. Samples come back in file order.
std::vector<Sample> read_manifest(std::istream& in);
std::vector<Sample> read_manifest_file(const std::filesystem::path& path);

// Writes one JSON object per line. read_manifest(write_manifest(s)) == s.
void write_manifest(std::ostream& out, std::span<const Sample> samples);
void write_manifest_file(const std::filesystem::path& path,
                         std::span<const Sample> samples);

}  // namespace litbench
