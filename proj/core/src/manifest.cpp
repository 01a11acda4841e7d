#include "litbench/manifest.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "litbench/errors.hpp"
#include "litbench/unicode.hpp"

namespace litbench {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 11> kCategoryNames{{
    {Category::handwritten, "handwritten"},
    {Category::design, "design"},
    {Category::receipt, "receipt"},
    {Category::general, "general"},
    {Category::academic, "academic"},
    {Category::web, "web"},
    {Category::math, "math"},
    {Category::table, "table"},
    {Category::readme, "readme"},
    {Category::docx, "docx"},
    {Category::arxiv, "arxiv"},
}};

// line_no 0 means "no line context" (a page parsed outside any JSONL file).
[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
    if (line_no == 0) throw ParseError(what, 0);
    throw ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
}

// Accepts integral JSON numbers and floors fractional ones; upstream layout
// tools emit sub-pixel boxes, and the codec needs whole pixels.
int to_pixel(const nlohmann::json& v, std::size_t line_no, const char* what) {
    if (!v.is_number()) fail(line_no, std::string(what) + " must be a number");
    const double d = std::floor(v.get<double>());
    if (d < -2147483648.0 || d > 2147483647.0) {
        fail(line_no, std::string(what) + " out of range");
    }
    return static_cast<int>(d);
}

}  // namespace

PageDocument page_from_json(const nlohmann::json& p, std::size_t line_no) {
    if (!p.is_object()) fail(line_no, "\"page\" must be an object");
    if (!p.contains("width") || !p.contains("height") || !p.contains("lines")) {
        fail(line_no, "\"page\" needs \"width\", \"height\", and \"lines\"");
    }
    PageDocument doc;
    doc.width = to_pixel(p.at("width"), line_no, "page width");
    doc.height = to_pixel(p.at("height"), line_no, "page height");
    const nlohmann::json& lines = p.at("lines");
    if (!lines.is_array()) fail(line_no, "\"lines\" must be an array");
    for (const nlohmann::json& l : lines) {
        if (!l.is_object() || !l.contains("text") || !l.at("text").is_string()) {
            fail(line_no, "each line needs a string \"text\"");
        }
        TextLine tl;
        tl.text = uni::nfc(l.at("text").get<std::string>());
        if (l.contains("bbox") && !l.at("bbox").is_null()) {
            const nlohmann::json& b = l.at("bbox");
            if (!b.is_array() || b.size() != 4) {
                fail(line_no, "\"bbox\" must be null or [x_tl, y_tl, x_br, y_br]");
            }
            tl.bbox = BoundingBox{to_pixel(b[0], line_no, "bbox x_tl"),
                                  to_pixel(b[1], line_no, "bbox y_tl"),
                                  to_pixel(b[2], line_no, "bbox x_br"),
                                  to_pixel(b[3], line_no, "bbox y_br")};
        }
        doc.lines.push_back(std::move(tl));
    }
    const std::vector<Violation> violations = validate_page(doc);
    if (!violations.empty()) {
        const Violation& v = violations.front();
        std::string where = v.line ? " at line index " + std::to_string(*v.line) : "";
        fail(line_no, "invalid page: " + v.rule + where + " (" + v.detail + ")");
    }
    return doc;
}

namespace {

Sample parse_record(const nlohmann::json& j, std::size_t line_no) {
    if (!j.is_object()) fail(line_no, "record must be a JSON object");
    if (!j.contains("id") || !j.at("id").is_string()) {
        fail(line_no, "missing string \"id\"");
    }
    Sample s;
    s.id = j.at("id").get<std::string>();
    if (s.id.empty()) fail(line_no, "\"id\" must be non-empty");

    if (!j.contains("category") || !j.at("category").is_string()) {
        fail(line_no, "missing string \"category\"");
    }
    const std::string cat = j.at("category").get<std::string>();
    const auto category = category_from_string(cat);
    if (!category) fail(line_no, "unknown category \"" + cat + "\"");
    s.category = *category;

    if (!j.contains("task") || !j.at("task").is_string()) {
        fail(line_no, "missing string \"task\"");
    }
    const std::string task_name = j.at("task").get<std::string>();
    const auto task = task_from_string(task_name);
    if (!task) fail(line_no, "unknown task \"" + task_name + "\"");

    if (*task == Task::ocr) {
        if (!j.contains("page")) fail(line_no, "task \"ocr\" needs a \"page\"");
        if (j.contains("markdown")) {
            fail(line_no, "task \"ocr\" must not carry \"markdown\"");
        }
        s.ground_truth = page_from_json(j.at("page"), line_no);
    } else {
        if (!j.contains("markdown") || !j.at("markdown").is_string()) {
            fail(line_no, "task \"markdown\" needs a string \"markdown\"");
        }
        if (j.contains("page")) {
            fail(line_no, "task \"markdown\" must not carry \"page\"");
        }
        s.ground_truth = MarkdownDocument(j.at("markdown").get<std::string>());
    }

    for (const auto& [key, value] : j.items()) {
        if (key == "id" || key == "category" || key == "task" || key == "page" ||
            key == "markdown") {
            continue;
        }
        s.extra[key] = value;
    }
    return s;
}

}  // namespace

nlohmann::json page_to_json(const PageDocument& page) {
    nlohmann::json lines = nlohmann::json::array();
    for (const TextLine& l : page.lines) {
        nlohmann::json jl;
        jl["text"] = l.text;
        if (l.bbox) {
            jl["bbox"] = {l.bbox->x_tl, l.bbox->y_tl, l.bbox->x_br, l.bbox->y_br};
        } else {
            jl["bbox"] = nullptr;
        }
        lines.push_back(std::move(jl));
    }
    nlohmann::json p;
    p["width"] = page.width;
    p["height"] = page.height;
    p["lines"] = std::move(lines);
    return p;
}

std::string_view to_string(Task t) {
    return t == Task::ocr ? "ocr" : "markdown";
}

std::string_view to_string(Category c) {
    for (const auto& [value, name] : kCategoryNames) {
        if (value == c) return name;
    }
    return "general";
}

std::optional<Task> task_from_string(std::string_view s) {
    if (s == "ocr") return Task::ocr;
    if (s == "markdown") return Task::markdown;
    return std::nullopt;
}

std::optional<Category> category_from_string(std::string_view s) {
    for (const auto& [value, name] : kCategoryNames) {
        if (name == s) return value;
    }
    return std::nullopt;
}

std::vector<Sample> read_manifest(std::istream& in) {
    std::vector<Sample> out;
    std::unordered_map<std::string, std::size_t> seen;  // id -> line number
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            fail(line_no, std::string("not valid JSON (") + e.what() + ")");
        }
        Sample s = parse_record(j, line_no);
        const auto [it, inserted] = seen.emplace(s.id, line_no);
        if (!inserted) {
            fail(line_no, "duplicate id \"" + s.id + "\" (first seen on line " +
                              std::to_string(it->second) + ")");
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Sample> read_manifest_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open manifest: " + path.string());
    return read_manifest(in);
}

void write_manifest(std::ostream& out, std::span<const Sample> samples) {
    for (const Sample& s : samples) {
        nlohmann::json j =
            s.extra.is_object() ? s.extra : nlohmann::json::object();
        j.erase("page");
        j.erase("markdown");
        j["id"] = s.id;
        j["category"] = to_string(s.category);
        j["task"] = to_string(s.task());
        if (s.task() == Task::ocr) {
            j["page"] = page_to_json(s.page());
        } else {
            j["markdown"] = s.markdown().source();
        }
        out << j.dump() << '\n';
    }
}

void write_manifest_file(const std::filesystem::path& path,
                         std::span<const Sample> samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write manifest: " + path.string());
    write_manifest(out, samples);
}

}  // namespace litbench
