#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "litbench/align.hpp"
#include "litbench/dedup.hpp"
#include "litbench/errors.hpp"
#include "litbench/langid.hpp"
#include "litbench/minhash.hpp"
#include "litbench/mixture.hpp"

using namespace litbench;

TEST_CASE("shingling is case-insensitive with a short-text fallback") {
    CHECK(shingle("The Quick Brown Fox Jumps", 5) ==
          shingle("the quick brown fox jumps", 5));

    // Fewer words than n: one whole-text shingle, never an empty set.
    const ShingleSet tiny = shingle("just three words", 5);
    CHECK(tiny.hashes.size() == 1);
    CHECK(exact_jaccard(tiny, shingle("just three words", 5)) == 1.0);
    CHECK(shingle("", 5).hashes.size() == 1);

    // Six words at n=5 yield two 5-gram shingles.
    CHECK(shingle("a b c d e f", 5).hashes.size() == 2);
}

TEST_CASE("exact_jaccard on hand-counted sets") {
    // "a b c d e f" -> shingles {abcde, bcdef}; "a b c d e g" -> {abcde, bcdeg}.
    const ShingleSet s1 = shingle("a b c d e f", 5);
    const ShingleSet s2 = shingle("a b c d e g", 5);
    CHECK(exact_jaccard(s1, s2) == doctest::Approx(1.0 / 3.0));
    CHECK(exact_jaccard(s1, s1) == 1.0);
    CHECK(exact_jaccard(s1, shingle("q r s t u v", 5)) == 0.0);
    CHECK(exact_jaccard(ShingleSet{}, ShingleSet{}) == 1.0);
}

TEST_CASE("minhash signatures are deterministic and comparable") {
    const ShingleSet s = shingle("pack my box with five dozen liquor jugs", 3);
    const MinHashSignature a = signature(s);
    const MinHashSignature b = signature(s);
    CHECK(a.minima == b.minima);
    CHECK(a.minima.size() == 128);
    CHECK(estimate_jaccard(a, b) == 1.0);

    CHECK_THROWS_AS(estimate_jaccard(signature(s, 64), signature(s, 128)),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_jaccard(signature(s, 128, 1), signature(s, 128, 2)),
                    std::invalid_argument);
}

TEST_CASE("estimate_jaccard tracks the exact value") {
    // Two 30-word texts sharing a 20-word core. The estimate will not be
    // exact at k = 128, but it has to be in the neighborhood.
    std::string core, left, right;
    for (int i = 0; i < 20; ++i) core += "w" + std::to_string(i) + " ";
    left = core;
    right = core;
    for (int i = 0; i < 10; ++i) {
        left += "l" + std::to_string(i) + " ";
        right += "r" + std::to_string(i) + " ";
    }
    const ShingleSet a = shingle(left, 5);
    const ShingleSet b = shingle(right, 5);
    const double exact = exact_jaccard(a, b);
    CHECK(exact > 0.2);
    CHECK(exact < 0.8);
    const double est = estimate_jaccard(signature(a), signature(b));
    CHECK(std::abs(est - exact) < 0.15);
}

TEST_CASE("dedup clusters near-duplicates and keeps the first") {
    std::vector<DedupRecord> records{
        {"d1", "the quick brown fox jumps over the lazy dog again and again", ""},
        {"d2", "the quick brown fox jumps over the lazy dog again and again", ""},
        {"d3", "completely different content about cooking pasta tonight", ""},
    };
    const DedupResult r = dedup(records);
    CHECK(r.kept_ids == std::vector<std::string>{"d1", "d3"});
    REQUIRE(r.clusters.size() == 1);
    CHECK(r.clusters[0].kept == "d1");
    CHECK(r.clusters[0].dropped == std::vector<std::string>{"d2"});
    CHECK(r.clusters[0].similarity == 1.0);
}

TEST_CASE("dedup scope: per-source by default, global on request") {
    const std::string text =
        "the quick brown fox jumps over the lazy dog again and again";
    std::vector<DedupRecord> records{
        {"a1", text, "src_a"},
        {"b1", text, "src_b"},
    };
    const DedupResult scoped = dedup(records);
    CHECK(scoped.kept_ids == std::vector<std::string>{"a1", "b1"});
    CHECK(scoped.clusters.empty());

    DedupParams global;
    global.global_scope = true;
    const DedupResult merged = dedup(records, global);
    CHECK(merged.kept_ids == std::vector<std::string>{"a1"});
    REQUIRE(merged.clusters.size() == 1);
    CHECK(merged.clusters[0].dropped == std::vector<std::string>{"b1"});
}

TEST_CASE("dedup validates parameters and ids") {
    std::vector<DedupRecord> records{{"x", "some text", ""}};
    DedupParams bad_layout;
    bad_layout.bands = 10;  // 10 * 4 != 128
    CHECK_THROWS_AS(dedup(records, bad_layout), std::invalid_argument);

    DedupParams bad_threshold;
    bad_threshold.threshold = 0.0;
    CHECK_THROWS_AS(dedup(records, bad_threshold), std::invalid_argument);

    std::vector<DedupRecord> dup_ids{{"x", "a", ""}, {"x", "b", ""}};
    CHECK_THROWS_AS(dedup(dup_ids), std::invalid_argument);
}

TEST_CASE("dedup worker count does not change the outcome") {
    std::vector<DedupRecord> records;
    for (int i = 0; i < 40; ++i) {
        const std::string fill = (i % 3 == 0) ? "shared body of text here"
                                              : "record number " + std::to_string(i);
        records.push_back({"id" + std::to_string(i),
                           fill + " the quick brown fox jumps over the lazy dog",
                           ""});
    }
    DedupParams one, four;
    four.jobs = 4;
    const DedupResult a = dedup(records, one);
    const DedupResult b = dedup(records, four);
    CHECK(a.kept_ids == b.kept_ids);
    REQUIRE(a.clusters.size() == b.clusters.size());
    for (std::size_t i = 0; i < a.clusters.size(); ++i) {
        CHECK(a.clusters[i].kept == b.clusters[i].kept);
        CHECK(a.clusters[i].dropped == b.clusters[i].dropped);
    }
}

TEST_CASE("alignment_ratio counts word multisets") {
    // Image {a b c d}, markdown {a b c e}: 3 shared over union of 5.
    CHECK(alignment_ratio("a b c d", "a b c e") == doctest::Approx(3.0 / 5.0));

    // Duplicates matter: min/max per word.
    CHECK(alignment_ratio("a a b", "a b b") == doctest::Approx(0.5));

    // Markdown decoration is stripped to spaces before tokenizing.
    CHECK(alignment_ratio("Title", "# Title") == 1.0);
    CHECK(alignment_ratio("cell one", "| cell | one |") == 1.0);
    CHECK(alignment_ratio("bold words", "**bold** words") == 1.0);

    CHECK(alignment_ratio("", "") == 1.0);
    CHECK(alignment_ratio("word", "") == 0.0);
}

TEST_CASE("filter_aligned is strict at the boundary") {
    // 19 shared words of 20: ratio exactly 0.95, which is not > 0.95.
    std::string common;
    for (int i = 0; i < 19; ++i) common += "w" + std::to_string(i) + " ";
    const AlignPair boundary{"edge", common + "extra", common};
    CHECK(alignment_ratio(boundary.image_text, boundary.markdown_text) ==
          doctest::Approx(0.95));

    // 951 shared of 1000: 0.951 clears the bar.
    std::string big;
    for (int i = 0; i < 951; ++i) big += "w" + std::to_string(i) + " ";
    std::string noisy = big;
    for (int i = 0; i < 49; ++i) noisy += "x" + std::to_string(i) + " ";
    const AlignPair above{"fine", noisy, big};
    CHECK(alignment_ratio(above.image_text, above.markdown_text) ==
          doctest::Approx(0.951));

    const std::vector<AlignPair> pairs{boundary, above};
    const std::vector<AlignPair> kept = filter_aligned(pairs, 0.95);
    REQUIRE(kept.size() == 1);
    CHECK(kept[0].id == "fine");

    CHECK_THROWS_AS(filter_aligned(pairs, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(filter_aligned(pairs, -0.1), std::invalid_argument);
}

TEST_CASE("bundled language classifier on typical inputs") {
    const LanguageClassifier& c = TrigramClassifier::bundled();

    const LangScore en = c.score(
        "Reading models convert page images into structured text so that "
        "search engines and screen readers can use the content. The quality "
        "of the output depends on the training data and on how carefully the "
        "layout is preserved during conversion.");
    CHECK(en.language == "en");
    CHECK(en.confidence == doctest::Approx(0.574).epsilon(0.05));

    const LangScore en2 = c.score(
        "The committee will meet on Thursday to review the budget proposal "
        "and decide whether the library can extend its opening hours during "
        "the summer months.");
    CHECK(en2.language == "en");
    CHECK(en2.confidence > 0.5);

    const LangScore de = c.score(
        "Die Ergebnisse zeigen, dass das Modell die Struktur der Seite "
        "deutlich besser erkennt, wenn die Trainingsdaten sorgfältig "
        "gefiltert wurden. Außerdem verbessert sich die Lesereihenfolge.");
    CHECK(de.language == "de");

    const LangScore fr = c.score(
        "Les résultats montrent que le modèle reconnaît mieux "
        "la structure de la page lorsque les données d'entraînement "
        "ont été soigneusement filtrées avant l'apprentissage.");
    CHECK(fr.language == "fr");

    const LangScore es = c.score(
        "Los resultados muestran que el modelo reconoce mejor la estructura "
        "de la página cuando los datos de entrenamiento se filtraron "
        "cuidadosamente antes del aprendizaje.");
    CHECK(es.language == "es");

    // No latin trigram signal at all: undetermined with zero confidence.
    const LangScore el = c.score(
        "Τα αποτελέσμ"
        "ατα δείχνουν "
        "ότι το μοντέλ"
        "ο αναγνωρίζει.");
    CHECK(el.language == "und");
    CHECK(el.confidence == 0.0);

    // Markup soup has next to no signal in any language.
    CHECK(c.score("| col | col | 12 34 | # ## ###").confidence < 0.1);

    CHECK(c.score("").language == "und");
}

TEST_CASE("language_keep applies the threshold to English only") {
    const LanguageClassifier& c = TrigramClassifier::bundled();
    CHECK(language_keep(
        "Reading models convert page images into structured text so that "
        "search engines and screen readers can use the content. The quality "
        "of the output depends on the training data and on how carefully the "
        "layout is preserved during conversion.",
        c));
    // Short English text scores well under the default threshold.
    CHECK_FALSE(language_keep("Hello world, this is a test.", c));
    // Confidently German is never kept, whatever the threshold.
    CHECK_FALSE(language_keep(
        "Die Ergebnisse zeigen, dass das Modell die Struktur der Seite "
        "deutlich besser erkennt, wenn die Trainingsdaten sorgfältig "
        "gefiltert wurden.",
        c, 0.0));
}

TEST_CASE("mixture spec validation") {
    MixtureSpec spec;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);  // no sources

    spec.sources = {{"a", "a.jsonl", 0.5}, {"b", "b.jsonl", 0.5}};
    CHECK_NOTHROW(spec.validate());

    MixtureSpec bad_sum = spec;
    bad_sum.sources[0].ratio = 0.6;
    CHECK_THROWS_AS(bad_sum.validate(), std::invalid_argument);

    MixtureSpec dup_names = spec;
    dup_names.sources[1].name = "a";
    CHECK_THROWS_AS(dup_names.validate(), std::invalid_argument);

    MixtureSpec negative = spec;
    negative.sources[0].ratio = -0.5;
    negative.sources[1].ratio = 1.5;
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);

    CHECK_THROWS_AS(MixtureSpec::from_json(nlohmann::json::parse("{}")),
                    std::invalid_argument);
    const MixtureSpec parsed = MixtureSpec::from_json(nlohmann::json::parse(
        R"({"sources":[{"name":"a","path":"p.jsonl","ratio":1.0}]})"));
    REQUIRE(parsed.sources.size() == 1);
    CHECK(parsed.sources[0].name == "a");
    CHECK(parsed.sources[0].ratio == 1.0);
}

TEST_CASE("sample_mixture_draws is deterministic and respects ratios") {
    const std::vector<double> ratios{0.2, 0.3, 0.5};
    const std::vector<std::size_t> sizes{10, 20, 30};

    const auto a = sample_mixture_draws(ratios, sizes, 5000, 42);
    const auto b = sample_mixture_draws(ratios, sizes, 5000, 42);
    REQUIRE(a.size() == 5000);
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].source == b[i].source);
        REQUIRE(a[i].record == b[i].record);
    }

    // Every record index stays inside its source.
    std::vector<std::size_t> counts(3, 0);
    for (const MixtureDraw& d : a) {
        REQUIRE(d.source < 3);
        REQUIRE(d.record < sizes[d.source]);
        ++counts[d.source];
    }
    // 3 sigma binomial bounds at n = 5000.
    for (std::size_t s = 0; s < 3; ++s) {
        const double expect = 5000.0 * ratios[s];
        const double sigma = std::sqrt(5000.0 * ratios[s] * (1.0 - ratios[s]));
        CAPTURE(s);
        CHECK(std::abs(static_cast<double>(counts[s]) - expect) <= 3.0 * sigma);
    }

    // A different seed reorders the draws.
    const auto c = sample_mixture_draws(ratios, sizes, 5000, 43);
    bool any_diff = false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (a[i].source != c[i].source || a[i].record != c[i].record) {
            any_diff = true;
            break;
        }
    }
    CHECK(any_diff);

    // Single source: everything lands there.
    const auto solo = sample_mixture_draws(std::vector<double>{1.0},
                                           std::vector<std::size_t>{7}, 100, 1);
    for (const MixtureDraw& d : solo) REQUIRE(d.source == 0);
}

TEST_CASE("sample_mixture reads JSONL sources") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "litbench_mix_test";
    fs::create_directories(dir);
    {
        std::ofstream a(dir / "a.jsonl");
        a << R"({"id":"a0"})" << "\n\n" << R"({"id":"a1"})" << "\n";
        std::ofstream b(dir / "b.jsonl");
        b << R"({"id":"b0"})" << "\n";
    }
    MixtureSpec spec;
    spec.sources = {{"alpha", dir / "a.jsonl", 0.5}, {"beta", dir / "b.jsonl", 0.5}};

    const auto out = sample_mixture(spec, 200, 9);
    REQUIRE(out.size() == 200);
    std::size_t alpha = 0;
    for (const auto& [name, line] : out) {
        if (name == "alpha") {
            ++alpha;
            CHECK((line == R"({"id":"a0"})" || line == R"({"id":"a1"})"));
        } else {
            REQUIRE(name == "beta");
            CHECK(line == R"({"id":"b0"})");
        }
    }
    CHECK(alpha > 50);
    CHECK(alpha < 150);

    MixtureSpec missing = spec;
    missing.sources[0].path = dir / "nope.jsonl";
    CHECK_THROWS_AS(sample_mixture(missing, 10, 1), Error);

    {
        std::ofstream empty(dir / "empty.jsonl");
        empty << "\n\n";
    }
    MixtureSpec hollow = spec;
    hollow.sources[1].path = dir / "empty.jsonl";
    try {
        sample_mixture(hollow, 10, 1);
        FAIL("empty source accepted");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("beta") != std::string::npos);
        CHECK(std::string(e.what()).find("no records") != std::string::npos);
    }
}
