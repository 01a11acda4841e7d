#include "litbench/harness.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "litbench/align.hpp"
#include "litbench/codec.hpp"
#include "litbench/dedup.hpp"
#include "litbench/errors.hpp"
#include "litbench/langid.hpp"
#include "litbench/manifest.hpp"
#include "litbench/md_metrics.hpp"
#include "litbench/mixture.hpp"
#include "litbench/ocr_metrics.hpp"
#include "litbench/unicode.hpp"

namespace litbench::harness {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void write_file(const fs::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
    out.flush();
    if (!out) throw Error("cannot write " + path.string());
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
}

nlohmann::json parse_jsonl_object(const std::string& line, std::size_t line_no) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        fail_line(line_no, std::string("not valid JSON (") + e.what() + ")");
    }
    if (!j.is_object()) fail_line(line_no, "record must be a JSON object");
    return j;
}

std::string require_id(const nlohmann::json& j, std::size_t line_no) {
    if (!j.contains("id") || !j.at("id").is_string()) {
        fail_line(line_no, "missing string \"id\"");
    }
    std::string id = j.at("id").get<std::string>();
    if (id.empty()) fail_line(line_no, "\"id\" must be non-empty");
    return id;
}

// Curation records carry their text as "text", as "markdown", or as a page
// whose line texts are joined in reading order.
std::string text_payload(const nlohmann::json& j, std::size_t line_no) {
    if (j.contains("text")) {
        if (!j.at("text").is_string()) fail_line(line_no, "\"text\" must be a string");
        return j.at("text").get<std::string>();
    }
    if (j.contains("markdown")) {
        if (!j.at("markdown").is_string()) {
            fail_line(line_no, "\"markdown\" must be a string");
        }
        return j.at("markdown").get<std::string>();
    }
    if (j.contains("page")) {
        const PageDocument page = page_from_json(j.at("page"), line_no);
        std::string joined;
        for (std::size_t i = 0; i < page.lines.size(); ++i) {
            if (i) joined += '\n';
            joined += page.lines[i].text;
        }
        return joined;
    }
    fail_line(line_no, "record needs \"text\", \"markdown\", or \"page\"");
}

struct InputRecord {
    std::string id;
    std::string text;
    std::string source;
    std::string raw;  // original line, preserved byte for byte in kept output
};

// Reads id + text (+ optional source) JSONL records; `unique_ids` adds the
// duplicate check deduplication needs.
std::vector<InputRecord> read_input_records(const fs::path& path, bool unique_ids) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::vector<InputRecord> records;
    std::unordered_map<std::string, std::size_t> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const nlohmann::json j = parse_jsonl_object(line, line_no);
        InputRecord rec;
        rec.id = require_id(j, line_no);
        rec.text = text_payload(j, line_no);
        if (j.contains("source")) {
            if (!j.at("source").is_string()) {
                fail_line(line_no, "\"source\" must be a string");
            }
            rec.source = j.at("source").get<std::string>();
        }
        if (unique_ids) {
            const auto [it, inserted] = seen.emplace(rec.id, line_no);
            if (!inserted) {
                fail_line(line_no, "duplicate id \"" + rec.id +
                                       "\" (first seen on line " +
                                       std::to_string(it->second) + ")");
            }
        }
        rec.raw = line;
        records.push_back(std::move(rec));
    }
    return records;
}

int report_and_code(std::ostream& err, const std::exception& e, int code) {
    err << "error: " << e.what() << '\n';
    return code;
}

}  // namespace

int run_eval(const EvalOptions& opt, std::ostream& err) {
    try {
        const auto task = task_from_string(opt.task);
        if (!task) {
            err << "error: task must be \"ocr\" or \"markdown\", got \"" << opt.task
                << "\"\n";
            return kExitUsage;
        }
        if (opt.bins < 1) {
            err << "error: --bins must be >= 1\n";
            return kExitUsage;
        }
        if (opt.jobs < 1) {
            err << "error: --jobs must be >= 1\n";
            return kExitUsage;
        }

        const std::vector<Sample> all = read_manifest_file(opt.manifest);
        std::vector<Sample> samples;
        std::copy_if(all.begin(), all.end(), std::back_inserter(samples),
                     [&](const Sample& s) { return s.task() == *task; });
        if (samples.empty()) {
            err << "error: manifest has no \"" << opt.task << "\" samples\n";
            return kExitFatal;
        }
        std::map<std::string, const Sample*> by_id;
        for (const Sample& s : samples) by_id.emplace(s.id, &s);

        std::ifstream in(opt.predictions, std::ios::binary);
        if (!in) {
            err << "error: cannot open predictions: " << opt.predictions.string()
                << '\n';
            return kExitFatal;
        }

        const CodecConfig cfg{opt.bins};
        std::map<std::string, PageDocument> pages;
        std::map<std::string, MarkdownDocument> mds;
        std::vector<std::string> diags;
        bool lenient = false;
        const auto complain = [&](std::string message) {
            diags.push_back(std::move(message));
            lenient = true;
        };

        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            const std::string where = "prediction line " + std::to_string(line_no);

            nlohmann::json j;
            try {
                j = nlohmann::json::parse(line);
            } catch (const nlohmann::json::exception& e) {
                complain(where + ": not valid JSON (" + e.what() + ")");
                continue;
            }
            if (!j.is_object() || !j.contains("id") || !j.at("id").is_string()) {
                complain(where + ": record needs a string \"id\"");
                continue;
            }
            const std::string id = j.at("id").get<std::string>();
            const auto sample_it = by_id.find(id);
            if (sample_it == by_id.end()) {
                err << "error: " << where << ": prediction id \"" << id
                    << "\" not in manifest\n";
                return kExitFatal;
            }
            if (pages.count(id) || mds.count(id)) {
                complain(where + ": duplicate id \"" + id +
                         "\" ignored (first prediction wins)");
                continue;
            }
            const std::string tag = where + " (id \"" + id + "\")";

            if (*task == Task::markdown) {
                if (!j.contains("markdown") || !j.at("markdown").is_string()) {
                    complain(tag + ": needs a string \"markdown\"");
                    continue;
                }
                try {
                    mds.emplace(id,
                                MarkdownDocument(j.at("markdown").get<std::string>()));
                } catch (const std::invalid_argument& e) {
                    complain(tag + ": " + e.what());
                }
                continue;
            }

            // OCR predictions arrive as a pixel page, as bracketed layout text,
            // or as a token stream; the latter two borrow the ground-truth page
            // dimensions.
            const PageDocument& gt = sample_it->second->page();
            const int n_payloads = int(j.contains("page")) +
                                   int(j.contains("layout")) +
                                   int(j.contains("tokens"));
            if (n_payloads != 1) {
                complain(tag +
                         ": needs exactly one of \"page\", \"layout\", \"tokens\"");
                continue;
            }
            if (j.contains("page")) {
                try {
                    pages.emplace(id, page_from_json(j.at("page"), line_no));
                } catch (const ParseError& e) {
                    complain(tag + ": " + e.what());
                }
            } else if (j.contains("layout")) {
                if (!j.at("layout").is_string()) {
                    complain(tag + ": \"layout\" must be a string");
                    continue;
                }
                const LenientBracketed lb =
                    decode_bracketed_lenient(j.at("layout").get<std::string>());
                for (const std::string& issue : lb.issues) {
                    complain(tag + ": " + issue);
                }
                PageDocument doc{gt.width, gt.height, {}};
                for (const QuantizedLine& q : lb.lines) {
                    try {
                        doc.lines.push_back(
                            {uni::nfc(q.text),
                             dequantize(q.box, gt.width, gt.height, cfg)});
                    } catch (const std::exception& e) {
                        complain(tag + ": dropped line (" + std::string(e.what()) +
                                 ")");
                    }
                }
                pages.emplace(id, std::move(doc));
            } else {
                TokenStream stream;
                try {
                    stream = tokens_from_json(j.at("tokens"));
                } catch (const ParseError& e) {
                    complain(tag + ": " + e.what());
                    continue;
                }
                LenientLayout ll =
                    decode_layout_lenient(stream, gt.width, gt.height, cfg);
                for (const std::string& issue : ll.issues) {
                    complain(tag + ": " + issue);
                }
                pages.emplace(id, std::move(ll.doc));
            }
        }

        EvalReport report = *task == Task::ocr
                                ? evaluate_ocr(samples, pages, opt.jobs)
                                : evaluate_markdown(samples, mds, opt.jobs);
        report.diagnostics.insert(report.diagnostics.begin(), diags.begin(),
                                  diags.end());
        // The config echo deliberately leaves out --jobs: worker count must not
        // influence report bytes.
        report.config = {{"task", opt.task},
                         {"manifest", opt.manifest.string()},
                         {"pred", opt.predictions.string()},
                         {"out", opt.out_dir.string()},
                         {"bins", opt.bins},
                         {"seed", opt.seed}};

        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir / "report.json", report.to_json().dump(2) + "\n");
        write_file(opt.out_dir / "report.txt", report.to_text());
        return lenient ? kExitLenient : kExitOk;
    } catch (const std::exception& e) {
        return report_and_code(err, e, kExitFatal);
    }
}

int run_dedup(const DedupOptions& opt, std::ostream& err) {
    try {
        const std::vector<InputRecord> input =
            read_input_records(opt.input, /*unique_ids=*/true);
        std::vector<DedupRecord> records;
        records.reserve(input.size());
        for (const InputRecord& r : input) {
            records.push_back({r.id, r.text, r.source});
        }
        DedupParams params;
        params.threshold = opt.threshold;
        params.k = opt.k;
        params.bands = opt.bands;
        params.rows = opt.rows;
        params.seed = opt.seed;
        params.global_scope = opt.global_scope;
        params.jobs = opt.jobs;
        const DedupResult result = dedup(records, params);

        std::unordered_map<std::string, const InputRecord*> by_id;
        for (const InputRecord& r : input) by_id.emplace(r.id, &r);
        std::string kept;
        for (const std::string& id : result.kept_ids) {
            kept += by_id.at(id)->raw;
            kept += '\n';
        }
        std::string clusters;
        for (const DuplicateCluster& c : result.clusters) {
            clusters += nlohmann::json{{"kept", c.kept},
                                       {"dropped", c.dropped},
                                       {"similarity", c.similarity}}
                            .dump();
            clusters += '\n';
        }
        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir / "kept.jsonl", kept);
        write_file(opt.out_dir / "clusters.jsonl", clusters);
        return kExitOk;
    } catch (const ParseError& e) {
        return report_and_code(err, e, kExitParse);
    } catch (const std::invalid_argument& e) {
        return report_and_code(err, e, kExitUsage);
    } catch (const std::exception& e) {
        return report_and_code(err, e, kExitFatal);
    }
}

int run_align(const AlignOptions& opt, std::ostream& err) {
    try {
        if (!(opt.min_ratio >= 0.0 && opt.min_ratio <= 1.0)) {
            throw std::invalid_argument("--min-ratio must be within [0, 1]");
        }
        std::ifstream in(opt.input, std::ios::binary);
        if (!in) throw Error("cannot open " + opt.input.string());

        std::string kept;
        std::string dropped;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty()) continue;
            const nlohmann::json j = parse_jsonl_object(line, line_no);
            const std::string id = require_id(j, line_no);
            const auto field = [&](const char* name) {
                if (!j.contains(name) || !j.at(name).is_string()) {
                    fail_line(line_no,
                              std::string("missing string \"") + name + "\"");
                }
                return j.at(name).get<std::string>();
            };
            const std::string image_text = field("image_text");
            const std::string markdown_text = field("markdown_text");
            const double ratio = alignment_ratio(image_text, markdown_text);
            if (ratio > opt.min_ratio) {
                kept += line;
                kept += '\n';
            } else {
                dropped += nlohmann::json{{"id", id}, {"ratio", ratio}}.dump();
                dropped += '\n';
            }
        }
        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir / "kept.jsonl", kept);
        write_file(opt.out_dir / "dropped.jsonl", dropped);
        return kExitOk;
    } catch (const ParseError& e) {
        return report_and_code(err, e, kExitParse);
    } catch (const std::invalid_argument& e) {
        return report_and_code(err, e, kExitUsage);
    } catch (const std::exception& e) {
        return report_and_code(err, e, kExitFatal);
    }
}

int run_lang(const LangOptions& opt, std::ostream& err) {
    try {
        if (!(opt.threshold >= 0.0 && opt.threshold <= 1.0)) {
            throw std::invalid_argument("--threshold must be within [0, 1]");
        }
        const std::vector<InputRecord> input =
            read_input_records(opt.input, /*unique_ids=*/false);
        const LanguageClassifier& classifier = TrigramClassifier::bundled();

        std::string kept;
        std::string dropped;
        for (const InputRecord& r : input) {
            if (language_keep(r.text, classifier, opt.threshold)) {
                kept += r.raw;
                kept += '\n';
            } else {
                const LangScore score = classifier.score(r.text);
                dropped += nlohmann::json{{"id", r.id},
                                          {"language", score.language},
                                          {"confidence", score.confidence}}
                               .dump();
                dropped += '\n';
            }
        }
        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir / "kept.jsonl", kept);
        write_file(opt.out_dir / "dropped.jsonl", dropped);
        return kExitOk;
    } catch (const ParseError& e) {
        return report_and_code(err, e, kExitParse);
    } catch (const std::invalid_argument& e) {
        return report_and_code(err, e, kExitUsage);
    } catch (const std::exception& e) {
        return report_and_code(err, e, kExitFatal);
    }
}

int run_mix(const MixOptions& opt, std::ostream& err) {
    try {
        const std::string content = read_file(opt.spec);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(content);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(
                "mixture spec is not valid JSON (" + std::string(e.what()) + ")",
                0);
        }
        const MixtureSpec spec = MixtureSpec::from_json(j);
        const std::vector<std::pair<std::string, std::string>> draws =
            sample_mixture(spec, opt.total, opt.seed);

        std::map<std::string, std::size_t> per_source;
        for (const MixtureSource& s : spec.sources) per_source[s.name] = 0;
        std::string sampled;
        for (const auto& [source, record] : draws) {
            ++per_source[source];
            sampled += record;
            sampled += '\n';
        }
        nlohmann::json sources = nlohmann::json::object();
        for (const MixtureSource& s : spec.sources) {
            sources[s.name] = {{"ratio", s.ratio}, {"draws", per_source[s.name]}};
        }
        const nlohmann::json counts = {
            {"seed", opt.seed}, {"total", opt.total}, {"sources", sources}};

        fs::create_directories(opt.out_dir);
        write_file(opt.out_dir / "mixture.jsonl", sampled);
        write_file(opt.out_dir / "counts.json", counts.dump(2) + "\n");
        return kExitOk;
    } catch (const ParseError& e) {
        return report_and_code(err, e, kExitParse);
    } catch (const std::invalid_argument& e) {
        return report_and_code(err, e, kExitUsage);
    } catch (const std::exception& e) {
        return report_and_code(err, e, kExitFatal);
    }
}

namespace {

nlohmann::json qlines_to_json(std::span<const QuantizedLine> lines) {
    nlohmann::json arr = nlohmann::json::array();
    for (const QuantizedLine& q : lines) {
        arr.push_back({{"qbox", {q.box.x_tl, q.box.y_tl, q.box.x_br, q.box.y_br}},
                       {"text", q.text}});
    }
    return nlohmann::json{{"qlines", std::move(arr)}};
}

std::vector<QuantizedLine> qlines_from_json(const nlohmann::json& j) {
    if (!j.contains("qlines") || !j.at("qlines").is_array()) {
        throw ParseError("\"qlines\" must be an array", 0);
    }
    std::vector<QuantizedLine> out;
    const nlohmann::json& arr = j.at("qlines");
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const nlohmann::json& e = arr[i];
        const std::string where = "qline " + std::to_string(i) + ": ";
        if (!e.is_object() || !e.contains("qbox") || !e.contains("text") ||
            !e.at("text").is_string()) {
            throw ParseError(where + "needs \"qbox\" and string \"text\"", i);
        }
        const nlohmann::json& b = e.at("qbox");
        if (!b.is_array() || b.size() != 4 ||
            !std::all_of(b.begin(), b.end(),
                         [](const nlohmann::json& v) {
                             return v.is_number_integer();
                         })) {
            throw ParseError(where + "\"qbox\" must be four integers", i);
        }
        QuantizedLine q;
        q.box = {b[0].get<int>(), b[1].get<int>(), b[2].get<int>(),
                 b[3].get<int>()};
        q.text = e.at("text").get<std::string>();
        out.push_back(std::move(q));
    }
    return out;
}

// Bin range and corner order for quantized lines that did not come out of the
// strict token decoder (bracketed text and qlines JSON defer these checks).
void check_qlines(std::span<const QuantizedLine> lines, int bins) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const QuantizedBox& b = lines[i].box;
        const std::string where = "line " + std::to_string(i + 1) + ": ";
        for (const int bin : {b.x_tl, b.y_tl, b.x_br, b.y_br}) {
            if (bin < 0 || bin >= bins) {
                throw ParseError(where + "bin index " + std::to_string(bin) +
                                     " outside [0, " + std::to_string(bins) + ")",
                                 i + 1);
            }
        }
        if (b.x_br < b.x_tl || b.y_br < b.y_tl) {
            throw ParseError(where + "box bins out of order", i + 1);
        }
    }
}

}  // namespace

int run_codec(const CodecOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.bins < 1) {
            err << "error: --bins must be >= 1\n";
            return kExitUsage;
        }
        if (opt.format != "tokens" && opt.format != "bracketed") {
            err << "error: --format must be \"tokens\" or \"bracketed\"\n";
            return kExitUsage;
        }
        const std::string content = read_file(opt.input);
        const CodecConfig cfg{opt.bins};
        std::string result;

        if (opt.encode) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(content);
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(
                    "input is not valid JSON (" + std::string(e.what()) + ")", 0);
            }
            std::vector<QuantizedLine> qlines;
            if (j.is_object() && j.contains("qlines")) {
                qlines = qlines_from_json(j);
                check_qlines(qlines, cfg.bins);
            } else {
                // A pixel page quantizes on the way in. Shape or box problems
                // in the page are input errors here, not usage errors.
                try {
                    qlines = quantize_lines(page_from_json(j), cfg);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what(), 0);
                } catch (const std::out_of_range& e) {
                    throw ParseError(e.what(), 0);
                }
            }
            if (opt.format == "tokens") {
                result = tokens_to_json(encode_layout(
                                            std::span<const QuantizedLine>(qlines)))
                             .dump(2) +
                         "\n";
            } else {
                result = encode_bracketed(std::span<const QuantizedLine>(qlines));
            }
        } else {
            std::vector<QuantizedLine> qlines;
            if (opt.format == "tokens") {
                nlohmann::json j;
                try {
                    j = nlohmann::json::parse(content);
                } catch (const nlohmann::json::exception& e) {
                    throw ParseError("input is not valid JSON (" +
                                         std::string(e.what()) + ")",
                                     0);
                }
                qlines = decode_layout(tokens_from_json(j), cfg);
            } else {
                qlines = decode_bracketed(content);
                check_qlines(qlines, cfg.bins);
            }
            result = qlines_to_json(qlines).dump(2) + "\n";
        }

        if (opt.output == "-") {
            out << result;
            out.flush();
        } else {
            write_file(opt.output, result);
        }
        return kExitOk;
    } catch (const ParseError& e) {
        return report_and_code(err, e, kExitParse);
    } catch (const std::exception& e) {
        return report_and_code(err, e, kExitFatal);
    }
}

}  // namespace litbench::harness
