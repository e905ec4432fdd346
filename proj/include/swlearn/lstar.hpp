#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "swlearn/equivalence.hpp"
#include "swlearn/hypothesis.hpp"
#include "swlearn/observation_table.hpp"
#include "swlearn/oracle.hpp"
#include "swlearn/poly_learner.hpp"

namespace swlearn {

enum class EquivalenceMode {
    strict,    // exhaustive bounded enumeration through the oracle only
    whitebox,  // product search against the ground truth (test/CLI use)
    automatic, // strict unless the enumeration budget would be exceeded
};

std::string to_string(EquivalenceMode mode);

struct LearnerOptions {
    EquivalenceMode mode = EquivalenceMode::strict;
    std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
    int max_iterations = 10'000;  // guard on main-loop rounds and table fixes
};

namespace trace {

struct Init {
    int alphabet_size;
    int max_word_length;
    EquivalenceMode mode;
};
struct Seed {
    std::vector<std::pair<Word, bool>> bits;  // λ first, then each symbol
};
struct Table {
    int index;  // 1-based, T1, T2, ...
    ObservationTable::Snapshot snapshot;
};
struct ClosednessFix {
    Word access;
    int symbol;
};
struct ConsistencyFix {
    Word first, second;
    int symbol;
    Word suffix;
    Word added;  // symbol·suffix
};
struct Hypothesis {
    int index;  // 1-based conjecture counter
    HypothesisAutomaton automaton;
};
struct Counterexample {
    Word word;
};
struct NoCounterexample {};
struct Done {
    int iterations;
    std::uint64_t membership_queries;  // raw oracle calls
    std::uint64_t unique_words;        // distinct words the table asked about
};

using Event = std::variant<Init, Seed, Table, ClosednessFix, ConsistencyFix, Hypothesis,
                           Counterexample, NoCounterexample, Done>;

} // namespace trace

/// Ordered event log of one learning run; serializes to one line per event
/// with a stable field order, for diffing.
struct LearnerTrace {
    std::vector<trace::Event> events;

    std::vector<ObservationTable::Snapshot> table_snapshots() const;
    std::vector<HypothesisAutomaton> hypotheses() const;
    std::vector<Word> counterexamples() const;

    std::string to_text() const;
};

struct AutomatonLearnResult {
    HypothesisAutomaton automaton;
    LearnerTrace trace;
};

/// The modified L* loop: seeds Q = R = {λ}, repairs the table until closed
/// and consistent, conjectures, and searches for counterexamples until none
/// exists. whitebox_truth is only consulted in whitebox/automatic modes.
AutomatonLearnResult learn_automaton(const SimulationOracle& oracle,
                                     const LearnerOptions& options = {},
                                     const RestrictionAutomaton* whitebox_truth = nullptr);

struct SwitchedSystemLearnResult {
    std::vector<PolynomialVectorField> fields;
    HypothesisAutomaton automaton;
    LearnerTrace trace;
};

/// The combined pipeline: subsystem recovery followed by automaton learning.
SwitchedSystemLearnResult learn_switched_system(
    const SimulationOracle& oracle, const LearnerOptions& options = {},
    const RestrictionAutomaton* whitebox_truth = nullptr,
    const SolverWarningSink& warn = nullptr);

} // namespace swlearn
