#include "swlearn/cli.hpp"

#include <ostream>

#include "swlearn/dot.hpp"
#include "swlearn/spec_io.hpp"

namespace swlearn::cli {

namespace {

int run_guarded(std::ostream& err, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}

} // namespace

int cmd_learn_models(const std::filesystem::path& spec_path,
                     const std::filesystem::path& out_path, std::ostream& out,
                     std::ostream& err) {
    return run_guarded(err, [&] {
        const SimulationOracle oracle(load_spec(spec_path));
        const auto fields = learn_all_subsystems(
            oracle, {}, [&err](const std::string& msg) { err << "warning: " << msg << "\n"; });
        write_text_file(out_path, models_report(fields, oracle.stats()).dump(2) + "\n");
        out << "learned " << fields.size() << " subsystems with "
            << oracle.stats().eval_queries << " evaluator queries -> " << out_path.string()
            << "\n";
    });
}

int cmd_learn_automaton(const std::filesystem::path& spec_path,
                        const std::filesystem::path& dot_path,
                        const std::filesystem::path& trace_path,
                        const LearnerOptions& options, std::ostream& out,
                        std::ostream& err) {
    return run_guarded(err, [&] {
        const SwitchedSystemSpec spec = load_spec(spec_path);
        const SimulationOracle oracle(spec);
        const auto result = learn_automaton(oracle, options, &spec.automaton);
        write_text_file(dot_path, to_dot(result.automaton));
        write_text_file(trace_path, result.trace.to_text());
        out << "learned automaton: " << result.automaton.node_count() << " nodes, "
            << result.automaton.edge_count() << " edges, "
            << oracle.stats().membership_queries << " membership queries -> "
            << dot_path.string() << "\n";
    });
}

int cmd_learn_all(const std::filesystem::path& spec_path,
                  const std::filesystem::path& out_dir, const LearnerOptions& options,
                  std::ostream& out, std::ostream& err) {
    return run_guarded(err, [&] {
        const SwitchedSystemSpec spec = load_spec(spec_path);
        const SimulationOracle oracle(spec);
        std::filesystem::create_directories(out_dir);
        const auto result = learn_switched_system(
            oracle, options, &spec.automaton,
            [&err](const std::string& msg) { err << "warning: " << msg << "\n"; });
        write_text_file(out_dir / "models.json",
                        models_report(result.fields, oracle.stats()).dump(2) + "\n");
        write_text_file(out_dir / "automaton.dot", to_dot(result.automaton));
        write_text_file(out_dir / "trace.log", result.trace.to_text());
        const OracleStats stats = oracle.stats();
        out << "learned " << result.fields.size() << " subsystems ("
            << stats.eval_queries << " evaluator queries) and a "
            << result.automaton.node_count() << "-node automaton ("
            << stats.membership_queries << " membership queries) -> "
            << out_dir.string() << "\n";
    });
}

int cmd_generate(const RandomSpecParams& params, std::uint64_t seed,
                 const std::filesystem::path& out_path, std::ostream& out,
                 std::ostream& err) {
    return run_guarded(err, [&] {
        std::mt19937_64 rng(seed);
        const SwitchedSystemSpec spec = random_spec(rng, params);
        write_text_file(out_path, spec_to_json(spec).dump(2) + "\n");
        out << "generated spec with N=" << spec.subsystem_count << " d=" << spec.dimension
            << " m=" << spec.order << " M=" << spec.max_word_length << " |V|="
            << spec.automaton.node_count() << " -> " << out_path.string() << "\n";
    });
}

} // namespace swlearn::cli
