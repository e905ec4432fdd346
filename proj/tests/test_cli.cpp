#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "swlearn/cli.hpp"
#include "swlearn/dot.hpp"
#include "swlearn/spec_io.hpp"

using namespace swlearn;
namespace fs = std::filesystem;

namespace {

const fs::path kDataDir = SWLEARN_DATA_DIR;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("swlearn-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("cli::learn_models") {
    TempDir tmp;
    std::ostringstream out, err;
    const fs::path report = tmp.path / "models.json";
    CHECK(cli::cmd_learn_models(kDataDir / "example1.json", report, out, err) == cli::kExitOk);
    CHECK(err.str().empty());

    nlohmann::json doc = nlohmann::json::parse(slurp(report));
    CHECK(doc["eval_queries"] == 12);
    CHECK(doc["N"] == 3);
    // The learned coefficients round-trip the spec file to solver precision.
    const SwitchedSystemSpec spec = load_spec(kDataDir / "example1.json");
    REQUIRE(doc["subsystems"].size() == 3);
    for (std::size_t p = 0; p < 3; ++p) {
        CHECK(doc["subsystems"][p]["p"] == static_cast<int>(p) + 1);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t k = 0; k <= 3; ++k) {
                const double got = doc["subsystems"][p]["coeffs"][i][k].get<double>();
                CHECK(std::fabs(got - spec.fields[p].coeffs[i][k]) <= 1e-9);
            }
        }
    }
}

TEST_CASE("cli::learn_models_reports_parse_errors") {
    TempDir tmp;
    const fs::path bad = tmp.path / "bad.json";
    write_text_file(bad, "{\"N\": 3, \"d\": 3}\n");
    std::ostringstream out, err;
    CHECK(cli::cmd_learn_models(bad, tmp.path / "report.json", out, err) ==
          cli::kExitParseError);
    CHECK(err.str().find("\"m\"") != std::string::npos);
}

TEST_CASE("cli::learn_automaton") {
    TempDir tmp;
    std::ostringstream out, err;
    LearnerOptions options;
    options.mode = EquivalenceMode::automatic;
    const fs::path dot = tmp.path / "hypothesis.dot";
    const fs::path trace = tmp.path / "trace.log";
    CHECK(cli::cmd_learn_automaton(kDataDir / "example1.json", dot, trace, options, out,
                                   err) == cli::kExitOk);

    const HypothesisAutomaton h = hypothesis_from_dot(slurp(dot));
    CHECK(h.node_count() == 2);
    CHECK(h.edge_count() == 4);

    const std::string log = slurp(trace);
    std::size_t cex_lines = 0, at = 0;
    while ((at = log.find("\ncounterexample ", at)) != std::string::npos) {
        ++cex_lines;
        ++at;
    }
    CHECK(cex_lines == 1);
    CHECK(log.find("counterexample 12\n") != std::string::npos);

    // Determinism: a second run writes byte-identical outputs.
    const std::string first_dot = slurp(dot);
    const std::string first_trace = log;
    CHECK(cli::cmd_learn_automaton(kDataDir / "example1.json", dot, trace, options, out,
                                   err) == cli::kExitOk);
    CHECK(slurp(dot) == first_dot);
    CHECK(slurp(trace) == first_trace);
}

TEST_CASE("cli::learn_automaton_strict_over_budget") {
    TempDir tmp;
    std::ostringstream out, err;
    LearnerOptions options; // strict; the golden spec has M = 100
    CHECK(cli::cmd_learn_automaton(kDataDir / "example1.json", tmp.path / "h.dot",
                                   tmp.path / "t.log", options, out,
                                   err) == cli::kExitBudgetExceeded);
    CHECK(err.str().find("budget") != std::string::npos);
}

TEST_CASE("cli::learn_all") {
    TempDir tmp;
    std::ostringstream out, err;
    LearnerOptions options;
    options.mode = EquivalenceMode::automatic;
    const fs::path out_dir = tmp.path / "result";
    CHECK(cli::cmd_learn_all(kDataDir / "example1.json", out_dir, options, out, err) ==
          cli::kExitOk);
    CHECK(fs::exists(out_dir / "models.json"));
    CHECK(fs::exists(out_dir / "automaton.dot"));
    CHECK(fs::exists(out_dir / "trace.log"));
}

TEST_CASE("cli::learn_models_constant_order") {
    TempDir tmp;
    const fs::path spec_path = tmp.path / "constant.json";
    write_text_file(spec_path,
                    "{\"N\":1,\"d\":2,\"m\":0,\"M\":3,"
                    "\"subsystems\":[{\"p\":1,\"coeffs\":[[2.5],[-0.5]]}],"
                    "\"automaton\":{\"nodes\":[\"v0\"],\"initial\":\"v0\","
                    "\"edges\":[{\"src\":\"v0\",\"dst\":\"v0\",\"label\":1}]}}\n");
    std::ostringstream out, err;
    const fs::path report = tmp.path / "models.json";
    CHECK(cli::cmd_learn_models(spec_path, report, out, err) == cli::kExitOk);
    nlohmann::json doc = nlohmann::json::parse(slurp(report));
    CHECK(doc["m"] == 0);
    CHECK(doc["eval_queries"] == 1);
    CHECK(doc["subsystems"][0]["coeffs"] == nlohmann::json({{2.5}, {-0.5}}));
}

TEST_CASE("cli::learn_automaton_single_self_loop") {
    TempDir tmp;
    const fs::path spec_path = tmp.path / "loop.json";
    write_text_file(spec_path,
                    "{\"N\":1,\"d\":1,\"m\":0,\"M\":5,"
                    "\"subsystems\":[{\"p\":1,\"coeffs\":[[0.0]]}],"
                    "\"automaton\":{\"nodes\":[\"v0\"],\"initial\":\"v0\","
                    "\"edges\":[{\"src\":\"v0\",\"dst\":\"v0\",\"label\":1}]}}\n");
    std::ostringstream out, err;
    const fs::path dot = tmp.path / "h.dot";
    CHECK(cli::cmd_learn_automaton(spec_path, dot, tmp.path / "t.log", LearnerOptions{},
                                   out, err) == cli::kExitOk);
    const HypothesisAutomaton h = hypothesis_from_dot(slurp(dot));
    CHECK(h.node_count() == 1);
    CHECK(h.edge_count() == 1);
}

TEST_CASE("cli::generate_round_trips_and_is_seed_stable") {
    TempDir tmp;
    std::ostringstream out, err;
    RandomSpecParams params;
    params.node_count = 4;
    params.alphabet_size = 3;
    const fs::path a = tmp.path / "a.json";
    const fs::path b = tmp.path / "b.json";
    CHECK(cli::cmd_generate(params, 42, a, out, err) == cli::kExitOk);
    CHECK(cli::cmd_generate(params, 42, b, out, err) == cli::kExitOk);
    CHECK(slurp(a) == slurp(b));

    const SwitchedSystemSpec spec = load_spec(a);
    CHECK(spec.subsystem_count == 3);
    CHECK(spec.automaton.node_count() == 4);

    CHECK(cli::cmd_generate(params, 43, b, out, err) == cli::kExitOk);
    CHECK(slurp(a) != slurp(b));
}
