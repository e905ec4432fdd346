#include <doctest.h>

#include "support/fixtures.hpp"
#include "swlearn/hypothesis.hpp"
#include "swlearn/oracle.hpp"

using namespace swlearn;

namespace {

ObservationTable golden_table(const SimulationOracle& oracle, int stage) {
    ObservationTable table(3, [&oracle](const Word& w) { return oracle.member(w); });
    if (stage >= 2) table.fix_closedness(*table.closedness_violation());
    if (stage >= 3) table.add_counterexample(Word::parse("12"));
    if (stage >= 4) table.fix_consistency(*table.consistency_violation());
    return table;
}

ObservationTable repaired(ObservationTable table) {
    for (;;) {
        if (auto w = table.closedness_violation()) {
            table.fix_closedness(*w);
        } else if (auto w = table.consistency_violation()) {
            table.fix_consistency(*w);
        } else {
            return table;
        }
    }
}

} // namespace

TEST_CASE("hypothesis::build_from_single_row_table") {
    const SimulationOracle oracle(testing::cubic_triple_spec());
    const HypothesisAutomaton h = build_hypothesis(golden_table(oracle, 2));
    CHECK(h.node_count() == 1);
    CHECK(h.initial() == 0);
    CHECK(h.edges() == std::vector<LabeledEdge>{{0, 0, 1}});
}

TEST_CASE("hypothesis::build_from_final_table") {
    const SimulationOracle oracle(testing::cubic_triple_spec());
    const HypothesisAutomaton h = build_hypothesis(golden_table(oracle, 4));
    CHECK(h.node_count() == 2);
    CHECK(h.initial() == 0);
    CHECK(h.node_ids() == std::vector<std::string>{"10", "11"});
    CHECK(h.edges() ==
          std::vector<LabeledEdge>{{0, 1, 1}, {1, 1, 1}, {1, 0, 2}, {1, 0, 3}});

    // Determinism is structural: one next-slot per label.
    for (int v = 0; v < h.node_count(); ++v) {
        for (int p = 1; p <= 3; ++p) CHECK_NOTHROW(h.next(v, p));
    }
    CHECK(strongly_connected(h));
}

TEST_CASE("hypothesis::build_rejects_bad_tables") {
    const SimulationOracle oracle(testing::cubic_triple_spec());
    CHECK_THROWS_WITH_AS(build_hypothesis(golden_table(oracle, 1)),
                         doctest::Contains("non-closed"), Error);
    CHECK_THROWS_WITH_AS(build_hypothesis(golden_table(oracle, 3)),
                         doctest::Contains("inconsistent"), Error);

    ObservationTable empty_language(2, [](const Word&) { return false; });
    CHECK_THROWS_WITH_AS(build_hypothesis(empty_language), doctest::Contains("all-zero"),
                         Error);
}

TEST_CASE("hypothesis::zero_rows_produce_no_node_and_no_edge") {
    // Language {λ}: after repair the table is closed and the only surviving
    // row is row(λ), with every extension dead.
    ObservationTable table =
        repaired(ObservationTable(2, [](const Word& w) { return w.empty(); }));
    const HypothesisAutomaton h = build_hypothesis(table);
    CHECK(h.node_count() == 1);
    CHECK(h.edge_count() == 0);
    CHECK(h.accepts(Word()));
    CHECK_FALSE(h.accepts(Word::parse("1")));
}

TEST_CASE("hypothesis::accepts") {
    const SimulationOracle oracle(testing::cubic_triple_spec());
    const HypothesisAutomaton h = build_hypothesis(golden_table(oracle, 4));
    CHECK(h.accepts(Word()));
    CHECK(h.accepts(Word::parse("121")));
    CHECK_FALSE(h.accepts(Word::parse("23")));
    CHECK_FALSE(h.accepts(Word::parse("2")));
    CHECK(h.accepts(Word::parse("11131211")));
}

TEST_CASE("hypothesis::strong_connectivity_checker") {
    HypothesisAutomaton chain({"a", "b"}, 0, 2);
    chain.add_edge(0, 1, 1);
    chain.add_edge(1, 1, 1);
    CHECK_FALSE(strongly_connected(chain)); // no way back to the start

    HypothesisAutomaton loop({"a"}, 0, 1);
    loop.add_edge(0, 0, 1);
    CHECK(strongly_connected(loop));
}

TEST_CASE("hypothesis::determinism_guard") {
    HypothesisAutomaton h({"a", "b"}, 0, 2);
    h.add_edge(0, 1, 1);
    CHECK_THROWS_WITH_AS(h.add_edge(0, 0, 1), doctest::Contains("conflicting"), Error);
    CHECK_NOTHROW(h.add_edge(0, 1, 1)); // repeating the same edge is fine
}

TEST_CASE("hypothesis::isomorphic") {
    const SimulationOracle oracle(testing::cubic_triple_spec());
    const HypothesisAutomaton h = build_hypothesis(golden_table(oracle, 4));

    HypothesisAutomaton twin({"x", "y"}, 1, 3); // same shape, different labels/ids
    twin.add_edge(1, 0, 1);
    twin.add_edge(0, 0, 1);
    twin.add_edge(0, 1, 2);
    twin.add_edge(0, 1, 3);
    CHECK(isomorphic(h, twin));
    CHECK(isomorphic(twin, h));

    HypothesisAutomaton other({"x", "y"}, 1, 3);
    other.add_edge(1, 0, 1);
    other.add_edge(0, 0, 1);
    other.add_edge(0, 1, 2); // missing the label-3 edge
    CHECK_FALSE(isomorphic(h, other));

    const HypothesisAutomaton single = build_hypothesis(golden_table(oracle, 2));
    CHECK_FALSE(isomorphic(h, single));
}
