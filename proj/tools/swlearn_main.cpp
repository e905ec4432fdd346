#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swlearn/cli.hpp"

namespace {

swlearn::EquivalenceMode parse_mode(const std::string& text) {
    if (text == "strict") return swlearn::EquivalenceMode::strict;
    if (text == "whitebox") return swlearn::EquivalenceMode::whitebox;
    if (text == "auto") return swlearn::EquivalenceMode::automatic;
    throw CLI::ValidationError("--mode must be strict, whitebox, or auto");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Active learner for polynomial switched systems with automaton-restricted switching"};
    app.require_subcommand(1);

    std::string spec_path;
    std::string out_path = "models.json";
    std::string dot_path = "automaton.dot";
    std::string trace_path = "trace.log";
    std::string out_dir = "out";
    std::string mode = "strict";
    swlearn::LearnerOptions options;

    auto add_learner_flags = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode, "Equivalence check: strict, whitebox, or auto")
            ->capture_default_str();
        cmd->add_option("--budget", options.enumeration_budget,
                        "Word budget for strict enumeration")
            ->capture_default_str();
        cmd->add_option("--max-iter", options.max_iterations, "Learning-loop guard")
            ->capture_default_str();
    };

    auto* learn_models = app.add_subcommand("learn-models", "Recover subsystem coefficients");
    learn_models->add_option("spec", spec_path, "Ground-truth spec JSON")->required();
    learn_models->add_option("-o,--out", out_path, "Report path")->capture_default_str();

    auto* learn_automaton =
        app.add_subcommand("learn-automaton", "Learn the minimal restriction automaton");
    learn_automaton->add_option("spec", spec_path, "Ground-truth spec JSON")->required();
    learn_automaton->add_option("--dot", dot_path, "Hypothesis DOT path")->capture_default_str();
    learn_automaton->add_option("--trace", trace_path, "Trace log path")->capture_default_str();
    add_learner_flags(learn_automaton);

    auto* learn_all = app.add_subcommand("learn-all", "Run both learning phases");
    learn_all->add_option("spec", spec_path, "Ground-truth spec JSON")->required();
    learn_all->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
    add_learner_flags(learn_all);

    swlearn::RandomSpecParams params;
    std::uint64_t seed = 0;
    std::string gen_out = "spec.json";
    auto* gen = app.add_subcommand("gen", "Generate a random ground-truth spec");
    gen->add_option("--seed", seed, "Generator seed")->capture_default_str();
    gen->add_option("--nodes", params.node_count, "Automaton node count")->capture_default_str();
    gen->add_option("--alphabet", params.alphabet_size, "Number of subsystems")
        ->capture_default_str();
    gen->add_option("--dim", params.dimension, "State dimension")->capture_default_str();
    gen->add_option("--order", params.order, "Polynomial order")->capture_default_str();
    gen->add_option("--max-len", params.max_word_length, "Language length bound")
        ->capture_default_str();
    gen->add_option("--extra-edges", params.extra_edges, "Edges beyond the connecting cycle")
        ->capture_default_str();
    gen->add_option("-o,--out", gen_out, "Spec path")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        options.mode = parse_mode(mode);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return swlearn::cli::kExitParseError;
    }

    if (learn_models->parsed()) {
        return swlearn::cli::cmd_learn_models(spec_path, out_path, std::cout, std::cerr);
    }
    if (learn_automaton->parsed()) {
        return swlearn::cli::cmd_learn_automaton(spec_path, dot_path, trace_path, options,
                                                 std::cout, std::cerr);
    }
    if (learn_all->parsed()) {
        return swlearn::cli::cmd_learn_all(spec_path, out_dir, options, std::cout, std::cerr);
    }
    return swlearn::cli::cmd_generate(params, seed, gen_out, std::cout, std::cerr);
}
