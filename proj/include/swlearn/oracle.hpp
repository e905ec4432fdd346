#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "swlearn/system.hpp"
#include "swlearn/word.hpp"

namespace swlearn {

struct OracleStats {
    std::uint64_t eval_queries = 0;        // one-step subsystem evaluations
    std::uint64_t membership_queries = 0;  // word-membership answers
};

/// Gray-box simulation model over a hidden SwitchedSystemSpec. Answers
/// one-step evaluations of any subsystem and membership of index words in
/// the restriction language; the hidden spec itself is never exposed.
///
/// Query answering is pure; the query counters are the only mutable state
/// and are updated atomically, so concurrent callers observe correct
/// answers and counts are exact after quiescence.
class SimulationOracle {
public:
    explicit SimulationOracle(SwitchedSystemSpec spec);

    /// One step of subsystem p from state x (M_P). Component i of the result
    /// is the component polynomial of p evaluated at x[i].
    std::vector<double> eval(int p, std::span<const double> x) const;

    /// Whether w is a prefix of some admissible switching signal (M_A).
    /// λ is always a member. Requires |w| <= max_word_length().
    bool member(const Word& w) const;

    OracleStats stats() const;
    void reset_stats();

    int subsystem_count() const { return spec_.subsystem_count; }
    int dimension() const { return spec_.dimension; }
    int order() const { return spec_.order; }
    int max_word_length() const { return spec_.max_word_length; }

private:
    SwitchedSystemSpec spec_;
    bool use_masks_ = false;
    // succ_mask_[node][label-1]: bitmask of successor nodes (node_count <= 64).
    std::vector<std::vector<std::uint64_t>> succ_mask_;
    // succ_list_[node][label-1]: successor list fallback for large graphs.
    std::vector<std::vector<std::vector<int>>> succ_list_;
    mutable std::atomic<std::uint64_t> eval_queries_{0};
    mutable std::atomic<std::uint64_t> membership_queries_{0};
};

/// Memoizes membership answers by word so repeated table extensions never
/// re-ask the oracle; size() is the unique-word query count.
class QueryCache {
public:
    explicit QueryCache(const SimulationOracle& oracle) : oracle_(oracle) {}

    bool member(const Word& w);
    std::size_t unique_words() const { return cache_.size(); }

private:
    const SimulationOracle& oracle_;
    std::unordered_map<Word, bool, WordHash> cache_;
};

} // namespace swlearn
