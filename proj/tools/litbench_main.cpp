#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "litbench/harness.hpp"
#include "litbench/version.hpp"

int main(int argc, char** argv) {
    namespace harness = litbench::harness;

    CLI::App app{
        "literate-bench: location-token codec, OCR and markdown metrics, and "
        "data curation"};
    app.set_version_flag("--version", std::string(litbench::kVersion));
    app.require_subcommand(1);

    harness::EvalOptions eval_opt;
    CLI::App* eval = app.add_subcommand("eval", "Score predictions against a manifest");
    eval->add_option("--task", eval_opt.task, "Task to score")
        ->required()
        ->check(CLI::IsMember({"ocr", "markdown"}));
    eval->add_option("--manifest", eval_opt.manifest, "Ground-truth manifest (JSONL)")
        ->required();
    eval->add_option("--pred", eval_opt.predictions, "Predictions (JSONL)")
        ->required();
    eval->add_option("--out", eval_opt.out_dir,
                     "Directory for report.json and report.txt")
        ->required();
    eval->add_option("--bins", eval_opt.bins, "Coordinate bins per axis")
        ->capture_default_str();
    eval->add_option("--seed", eval_opt.seed, "Seed echoed into the report")
        ->envname("LITERATE_BENCH_SEED")
        ->capture_default_str();
    eval->add_option("--jobs", eval_opt.jobs, "Worker threads")
        ->capture_default_str();

    CLI::App* curate = app.add_subcommand("curate", "Data curation filters");
    curate->require_subcommand(1);

    harness::DedupOptions dedup_opt;
    CLI::App* dedup = curate->add_subcommand("dedup", "Drop near-duplicate records");
    dedup->add_option("--manifest", dedup_opt.input, "Input records (JSONL)")
        ->required();
    dedup->add_option("--out", dedup_opt.out_dir, "Output directory")->required();
    dedup->add_option("--threshold", dedup_opt.threshold,
                      "Similarity at or above this marks a duplicate")
        ->capture_default_str();
    dedup->add_option("--k", dedup_opt.k, "Signature permutations")
        ->capture_default_str();
    dedup->add_option("--bands", dedup_opt.bands, "LSH bands")->capture_default_str();
    dedup->add_option("--rows", dedup_opt.rows, "Rows per band")
        ->capture_default_str();
    dedup->add_option("--seed", dedup_opt.seed, "Permutation seed")
        ->envname("LITERATE_BENCH_SEED")
        ->capture_default_str();
    dedup->add_flag("--global", dedup_opt.global_scope,
                    "Compare across sources instead of within each");
    dedup->add_option("--jobs", dedup_opt.jobs, "Worker threads")
        ->capture_default_str();

    harness::AlignOptions align_opt;
    CLI::App* align =
        curate->add_subcommand("align", "Drop weakly aligned image/markdown pairs");
    align->add_option("--manifest", align_opt.input, "Input pairs (JSONL)")
        ->required();
    align->add_option("--out", align_opt.out_dir, "Output directory")->required();
    align->add_option("--min-ratio", align_opt.min_ratio,
                      "Keep pairs with ratio strictly above this")
        ->capture_default_str();

    harness::LangOptions lang_opt;
    CLI::App* lang = curate->add_subcommand("lang", "Keep English records");
    lang->add_option("--manifest", lang_opt.input, "Input records (JSONL)")
        ->required();
    lang->add_option("--out", lang_opt.out_dir, "Output directory")->required();
    lang->add_option("--threshold", lang_opt.threshold, "Minimum English confidence")
        ->capture_default_str();

    harness::MixOptions mix_opt;
    CLI::App* mix =
        curate->add_subcommand("mix", "Sample a weighted mixture of sources");
    mix->add_option("--manifest", mix_opt.spec, "Mixture spec (JSON)")->required();
    mix->add_option("--out", mix_opt.out_dir, "Output directory")->required();
    mix->add_option("--total", mix_opt.total, "Number of draws")->required();
    mix->add_option("--seed", mix_opt.seed, "Sampling seed")
        ->envname("LITERATE_BENCH_SEED")
        ->capture_default_str();

    harness::CodecOptions codec_opt;
    codec_opt.output = "-";
    CLI::App* codec =
        app.add_subcommand("codec", "Location-token wire format round-trips");
    codec->require_subcommand(1);
    CLI::App* enc = codec->add_subcommand("encode", "Page JSON to wire format");
    CLI::App* dec =
        codec->add_subcommand("decode", "Wire format to quantized page JSON");
    for (CLI::App* sub : {enc, dec}) {
        sub->add_option("--format", codec_opt.format, "Wire format")
            ->required()
            ->check(CLI::IsMember({"tokens", "bracketed"}));
        sub->add_option("--in", codec_opt.input, "Input file")->required();
        sub->add_option("--out", codec_opt.output, "Output file, - for stdout")
            ->capture_default_str();
        sub->add_option("--bins", codec_opt.bins, "Coordinate bins per axis")
            ->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? harness::kExitOk : harness::kExitUsage;
    }

    if (eval->parsed()) return harness::run_eval(eval_opt, std::cerr);
    if (dedup->parsed()) return harness::run_dedup(dedup_opt, std::cerr);
    if (align->parsed()) return harness::run_align(align_opt, std::cerr);
    if (lang->parsed()) return harness::run_lang(lang_opt, std::cerr);
    if (mix->parsed()) return harness::run_mix(mix_opt, std::cerr);
    if (enc->parsed() || dec->parsed()) {
        codec_opt.encode = enc->parsed();
        return harness::run_codec(codec_opt, std::cout, std::cerr);
    }
    return harness::kExitUsage;
}
