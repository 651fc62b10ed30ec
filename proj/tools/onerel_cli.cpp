#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "onerel/criteria.hpp"
#include "onerel/embed.hpp"
#include "onerel/experiments.hpp"
#include "onerel/hull.hpp"
#include "onerel/magnus.hpp"
#include "onerel/serialize.hpp"
#include "onerel/svg.hpp"

namespace {

using onerel::json;

int cmd_analyze(const std::string& text, int rank, int pivot) {
    onerel::Word w = onerel::parse_word(text, rank);
    onerel::Word reduced = onerel::free_reduce(w);
    onerel::CyclicReduction cyc = onerel::cyclic_reduce(w);

    json out;
    out["input"] = onerel::to_json(w);
    out["reduced"] = onerel::format_word(reduced);
    out["core"] = onerel::format_word(cyc.core);
    out["conjugator"] = onerel::format_word(cyc.conjugator);
    out["exponent_sums"] = onerel::exponent_sums(reduced);

    if (!cyc.core.empty()) {
        onerel::Walk walk = onerel::trace_walk(cyc.core);
        out["displacement"] = walk.displacement();
        try {
            out["hull"]["whole_walk"] = onerel::to_json(onerel::corners(walk));
            json per_letter = json::object();
            for (int g = 1; g <= walk.rank(); ++g) {
                onerel::LetterTrace lt = onerel::letter_trace(walk, onerel::Generator(g));
                if (lt.edges.empty()) continue;
                per_letter["x" + std::to_string(g)] =
                    onerel::to_json(onerel::corners(walk, onerel::Generator(g)));
            }
            out["hull"]["per_letter"] = per_letter;
        } catch (const onerel::zero_displacement_error&) {
            out["hull"] = nullptr;
            out["note"] = "displacement is zero; hull analysis is not applicable";
        }
    }
    if (w.rank() == 2 && !w.empty()) out["brown"] = onerel::to_json(onerel::brown_criterion(w));
    if (w.rank() >= 2 && !w.empty())
        out["embeddable"] = onerel::to_json(onerel::embeddable_criterion(w));
    if (pivot > 0) {
        onerel::IndexedWord iw = onerel::magnus_rewrite(reduced, onerel::Generator(pivot));
        out["magnus"] = onerel::to_json(iw);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_embed(const std::string& text, int rank, bool emit_presentation) {
    onerel::Word w = onerel::parse_word(text, rank);
    onerel::EmbeddingWitness wit = onerel::embed_to_two_generators(w);
    std::string why;
    if (!onerel::verify_witness(wit, &why))
        throw onerel::verification_error("witness failed re-verification: " + why);
    if (emit_presentation) {
        std::cout << "< a, b | " << onerel::format_word(wit.final_relator) << " >\n";
        return 0;
    }
    json out = onerel::to_json(wit);
    out["verified"] = true;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_sample(const std::string& model_name, int n, int k, int count, std::uint64_t seed) {
    onerel::Model model = onerel::parse_model(model_name);
    onerel::warm_cr_tables(n, k);
    for (int trial = 0; trial < count; ++trial) {
        onerel::SeededRng rng(seed, static_cast<std::uint64_t>(trial));
        std::cout << onerel::format_word(onerel::sample_word(model, n, k, rng)) << '\n';
    }
    return 0;
}

int cmd_experiment(const std::string& config_path) {
    onerel::ExperimentConfig cfg = onerel::parse_config_file(config_path);
    std::vector<onerel::EstimateRow> rows = onerel::run_experiment(cfg);
    if (cfg.out.empty()) {
        std::cout << onerel::csv_header() << '\n';
        for (const auto& r : rows) std::cout << onerel::csv_row(r) << '\n';
    } else {
        for (const auto& r : rows)
            std::cerr << "n=" << r.n << " " << r.event << " estimate=" << r.estimate << " ["
                      << r.ci_low << ", " << r.ci_high << "]\n";
        std::cerr << "wrote " << cfg.out << '\n';
    }
    return 0;
}

int cmd_render(const std::string& text, const std::string& out_path) {
    onerel::Word w = onerel::parse_word(text, 2);
    std::string svg = onerel::render_trace_svg(w);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << svg;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact criteria, embeddings and experiments for one-relator groups"};
    app.require_subcommand(1);

    std::string word_text, model_name = "cr", config_path, out_path;
    int rank = 0, pivot = 0, n = 10, k = 2, count = 1;
    std::uint64_t seed = 0;
    bool emit_presentation = false;

    auto* analyze = app.add_subcommand("analyze", "criteria verdicts and hull reports for a word");
    analyze->add_option("word", word_text, "word, compact (abAB) or indexed (x1 X2)")->required();
    analyze->add_option("--rank", rank, "alphabet rank (default: inferred)");
    analyze->add_option("--pivot", pivot, "also print the Magnus index table for this pivot");

    auto* embed = app.add_subcommand("embed", "embed into a rank-2 relator detected ascending");
    embed->add_option("word", word_text)->required();
    embed->add_option("--rank", rank, "alphabet rank (default: inferred)");
    embed->add_flag("--emit-presentation", emit_presentation,
                    "print the final 2-generator presentation instead of the witness");

    auto* sample = app.add_subcommand("sample", "sample words from the nr/nb/cr models");
    sample->add_option("--model", model_name, "nr | nb | cr")->required();
    sample->add_option("--n", n, "word length")->required();
    sample->add_option("--k", k, "alphabet rank")->required();
    sample->add_option("--count", count, "number of words");
    sample->add_option("--seed", seed, "master seed (one RNG stream per word index)");

    auto* experiment = app.add_subcommand("experiment", "run a seeded Monte Carlo experiment");
    experiment->add_option("--config", config_path, "key=value config file")->required();

    auto* render = app.add_subcommand("render", "deterministic SVG of a rank-2 trace");
    render->add_option("word", word_text)->required();
    render->add_option("--out", out_path, "output .svg path")->required();

    CLI11_PARSE(app, argc, argv);
    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(word_text, rank, pivot);
        if (app.got_subcommand(embed)) return cmd_embed(word_text, rank, emit_presentation);
        if (app.got_subcommand(sample)) return cmd_sample(model_name, n, k, count, seed);
        if (app.got_subcommand(experiment)) return cmd_experiment(config_path);
        if (app.got_subcommand(render)) return cmd_render(word_text, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
