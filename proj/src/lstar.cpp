#include "swlearn/lstar.hpp"

#include <sstream>

namespace swlearn {

std::string to_string(EquivalenceMode mode) {
    switch (mode) {
        case EquivalenceMode::strict: return "strict";
        case EquivalenceMode::whitebox: return "whitebox";
        case EquivalenceMode::automatic: return "auto";
    }
    throw Error("unknown equivalence mode");
}

std::vector<ObservationTable::Snapshot> LearnerTrace::table_snapshots() const {
    std::vector<ObservationTable::Snapshot> out;
    for (const auto& e : events) {
        if (const auto* t = std::get_if<trace::Table>(&e)) out.push_back(t->snapshot);
    }
    return out;
}

std::vector<HypothesisAutomaton> LearnerTrace::hypotheses() const {
    std::vector<HypothesisAutomaton> out;
    for (const auto& e : events) {
        if (const auto* h = std::get_if<trace::Hypothesis>(&e)) out.push_back(h->automaton);
    }
    return out;
}

std::vector<Word> LearnerTrace::counterexamples() const {
    std::vector<Word> out;
    for (const auto& e : events) {
        if (const auto* c = std::get_if<trace::Counterexample>(&e)) out.push_back(c->word);
    }
    return out;
}

namespace {

std::string word_list(const std::vector<Word>& words) {
    std::string out = "{";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ",";
        out += words[i].str();
    }
    return out + "}";
}

std::string edge_list(const HypothesisAutomaton& h) {
    std::string out = "{";
    bool first = true;
    for (const auto& e : h.edges()) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(e.src) + "-" + std::to_string(e.label) + "->" +
               std::to_string(e.dst);
    }
    return out + "}";
}

struct EventPrinter {
    std::ostringstream& out;

    void operator()(const trace::Init& e) const {
        out << "init N=" << e.alphabet_size << " M=" << e.max_word_length
            << " mode=" << to_string(e.mode);
    }
    void operator()(const trace::Seed& e) const {
        out << "seed";
        for (const auto& [w, bit] : e.bits) out << " " << w.str() << "=" << (bit ? 1 : 0);
    }
    void operator()(const trace::Table& e) const {
        out << "table " << e.index << " closed=" << (e.snapshot.closed ? 1 : 0)
            << " consistent=" << (e.snapshot.consistent ? 1 : 0)
            << " Q=" << word_list(e.snapshot.access_words)
            << " R=" << word_list(e.snapshot.suffixes) << " T={";
        for (std::size_t i = 0; i < e.snapshot.rows.size(); ++i) {
            if (i) out << ",";
            out << e.snapshot.rows[i].first.str() << ":" << e.snapshot.rows[i].second;
        }
        out << "}";
    }
    void operator()(const trace::ClosednessFix& e) const {
        out << "fix-closedness q=" << e.access.str() << " p=" << e.symbol;
    }
    void operator()(const trace::ConsistencyFix& e) const {
        out << "fix-consistency q1=" << e.first.str() << " q2=" << e.second.str()
            << " p=" << e.symbol << " r=" << e.suffix.str() << " add=" << e.added.str();
    }
    void operator()(const trace::Hypothesis& e) const {
        out << "hypothesis " << e.index << " nodes=" << e.automaton.node_count()
            << " initial=" << e.automaton.initial() << " edges=" << edge_list(e.automaton);
    }
    void operator()(const trace::Counterexample& e) const {
        out << "counterexample " << e.word.str();
    }
    void operator()(const trace::NoCounterexample&) const { out << "no-counterexample"; }
    void operator()(const trace::Done& e) const {
        out << "done iterations=" << e.iterations
            << " membership-queries=" << e.membership_queries
            << " unique-words=" << e.unique_words;
    }
};

} // namespace

std::string LearnerTrace::to_text() const {
    std::ostringstream out;
    for (const auto& e : events) {
        std::visit(EventPrinter{out}, e);
        out << "\n";
    }
    return out.str();
}

namespace {

std::optional<Word> find_counterexample(const HypothesisAutomaton& h,
                                        const SimulationOracle& oracle,
                                        const LearnerOptions& options,
                                        const RestrictionAutomaton* truth) {
    const int n = oracle.subsystem_count();
    const int max_len = oracle.max_word_length();
    switch (options.mode) {
        case EquivalenceMode::strict:
            return language_match(h, oracle, n, max_len, options.enumeration_budget);
        case EquivalenceMode::whitebox:
            if (!truth) throw Error("whitebox equivalence requires the ground-truth automaton");
            return product_diff_search(h, *truth, max_len);
        case EquivalenceMode::automatic:
            if (word_count_up_to(n, max_len) <= options.enumeration_budget) {
                return language_match(h, oracle, n, max_len, options.enumeration_budget);
            }
            if (!truth) {
                throw CapacityError(
                    "enumeration exceeds the budget and no ground truth is available "
                    "for white-box fallback");
            }
            return product_diff_search(h, *truth, max_len);
    }
    throw Error("unknown equivalence mode");
}

} // namespace

AutomatonLearnResult learn_automaton(const SimulationOracle& oracle,
                                     const LearnerOptions& options,
                                     const RestrictionAutomaton* whitebox_truth) {
    const int n = oracle.subsystem_count();
    const int max_len = oracle.max_word_length();

    LearnerTrace log;
    log.events.push_back(trace::Init{n, max_len, options.mode});

    QueryCache cache(oracle);
    // Table extensions can outgrow the length bound; such words are outside
    // the language by definition and never reach the oracle.
    auto member = [&cache, max_len](const Word& w) {
        return static_cast<int>(w.size()) <= max_len && cache.member(w);
    };

    // Explicit seeding keeps the query order aligned with the loop's opening
    // step even though the first fill would ask the same words.
    trace::Seed seed;
    seed.bits.emplace_back(Word(), member(Word()));
    for (int p = 1; p <= n; ++p) {
        seed.bits.emplace_back(Word({p}), member(Word({p})));
    }
    log.events.push_back(std::move(seed));

    ObservationTable table(n, member);
    int table_index = 0;
    auto log_table = [&] {
        log.events.push_back(trace::Table{++table_index, table.snapshot()});
    };
    log_table();

    const std::uint64_t access_bound = word_count_up_to(n, max_len);
    int iterations = 0;
    for (;;) {
        if (++iterations > options.max_iterations) {
            throw Error("learner exceeded the iteration guard of " +
                        std::to_string(options.max_iterations) + " rounds");
        }

        int fixes = 0;
        for (;;) {
            // Closedness first; both conditions are re-checked after every fix.
            if (auto witness = table.closedness_violation()) {
                table.fix_closedness(*witness);
                log.events.push_back(trace::ClosednessFix{witness->access, witness->symbol});
                log_table();
            } else if (auto disagreement = table.consistency_violation()) {
                table.fix_consistency(*disagreement);
                log.events.push_back(trace::ConsistencyFix{
                    disagreement->first, disagreement->second, disagreement->symbol,
                    disagreement->suffix, Word({disagreement->symbol}).concat(disagreement->suffix)});
                log_table();
            } else {
                break;
            }
            if (++fixes > options.max_iterations) {
                throw Error("table repair exceeded the iteration guard");
            }
            if (table.access_words().size() > access_bound) {
                throw Error("access-word set outgrew the word space; table repair is stuck");
            }
        }

        HypothesisAutomaton hypothesis = build_hypothesis(table);
        log.events.push_back(trace::Hypothesis{iterations, hypothesis});

        if (auto cex = find_counterexample(hypothesis, oracle, options, whitebox_truth)) {
            log.events.push_back(trace::Counterexample{*cex});
            table.add_counterexample(*cex);
            log_table();
            continue;
        }
        log.events.push_back(trace::NoCounterexample{});
        log.events.push_back(trace::Done{iterations, oracle.stats().membership_queries,
                                         cache.unique_words()});
        return {std::move(hypothesis), std::move(log)};
    }
}

SwitchedSystemLearnResult learn_switched_system(const SimulationOracle& oracle,
                                                const LearnerOptions& options,
                                                const RestrictionAutomaton* whitebox_truth,
                                                const SolverWarningSink& warn) {
    SwitchedSystemLearnResult result;
    result.fields = learn_all_subsystems(oracle, {}, warn);
    auto [automaton, log] = learn_automaton(oracle, options, whitebox_truth);
    result.automaton = std::move(automaton);
    result.trace = std::move(log);
    return result;
}

} // namespace swlearn
