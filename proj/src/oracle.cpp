#include "swlearn/oracle.hpp"

#include <bit>
#include <cmath>

namespace swlearn {

SimulationOracle::SimulationOracle(SwitchedSystemSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    const auto& g = spec_.automaton;
    const std::size_t n = static_cast<std::size_t>(g.node_count());
    use_masks_ = g.node_count() <= 64;
    if (use_masks_) {
        succ_mask_.assign(n, std::vector<std::uint64_t>(static_cast<std::size_t>(g.alphabet_size), 0));
        for (const auto& e : g.edges) {
            succ_mask_[static_cast<std::size_t>(e.src)][static_cast<std::size_t>(e.label - 1)] |=
                std::uint64_t{1} << e.dst;
        }
    } else {
        succ_list_.assign(n, std::vector<std::vector<int>>(static_cast<std::size_t>(g.alphabet_size)));
        for (const auto& e : g.edges) {
            succ_list_[static_cast<std::size_t>(e.src)][static_cast<std::size_t>(e.label - 1)]
                .push_back(e.dst);
        }
    }
}

std::vector<double> SimulationOracle::eval(int p, std::span<const double> x) const {
    if (p < 1 || p > spec_.subsystem_count) {
        throw Error("unknown subsystem index " + std::to_string(p));
    }
    if (static_cast<int>(x.size()) != spec_.dimension) {
        throw Error("state vector must have dimension " + std::to_string(spec_.dimension));
    }
    for (double v : x) {
        if (!std::isfinite(v)) throw Error("state vector entry is not finite");
    }
    eval_queries_.fetch_add(1, std::memory_order_relaxed);

    const auto& f = spec_.fields[static_cast<std::size_t>(p - 1)];
    std::vector<double> out(static_cast<std::size_t>(spec_.dimension));
    for (int i = 0; i < spec_.dimension; ++i) {
        const auto& row = f.coeffs[static_cast<std::size_t>(i)];
        double acc = row[static_cast<std::size_t>(spec_.order)];
        for (int k = spec_.order - 1; k >= 0; --k) {
            acc = acc * x[static_cast<std::size_t>(i)] + row[static_cast<std::size_t>(k)];
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

bool SimulationOracle::member(const Word& w) const {
    if (static_cast<int>(w.size()) > spec_.max_word_length) {
        throw Error("membership query of length " + std::to_string(w.size()) +
                    " exceeds the language length bound " +
                    std::to_string(spec_.max_word_length));
    }
    for (int s : w.symbols()) {
        if (s < 1 || s > spec_.subsystem_count) {
            throw Error("membership query contains invalid subsystem index " +
                        std::to_string(s));
        }
    }
    membership_queries_.fetch_add(1, std::memory_order_relaxed);

    // Nondeterministic state-set simulation from the initial node. Strong
    // connectivity makes every finite path extendable, so a word is in the
    // language iff some path spells it.
    if (use_masks_) {
        std::uint64_t live = std::uint64_t{1} << spec_.automaton.initial;
        for (int s : w.symbols()) {
            std::uint64_t next = 0;
            std::uint64_t bits = live;
            while (bits) {
                const int v = std::countr_zero(bits);
                bits &= bits - 1;
                next |= succ_mask_[static_cast<std::size_t>(v)][static_cast<std::size_t>(s - 1)];
            }
            live = next;
            if (!live) return false;
        }
        return true;
    }
    std::vector<char> live(static_cast<std::size_t>(spec_.automaton.node_count()), 0);
    live[static_cast<std::size_t>(spec_.automaton.initial)] = 1;
    for (int s : w.symbols()) {
        std::vector<char> next(live.size(), 0);
        bool any = false;
        for (std::size_t v = 0; v < live.size(); ++v) {
            if (!live[v]) continue;
            for (int dst : succ_list_[v][static_cast<std::size_t>(s - 1)]) {
                next[static_cast<std::size_t>(dst)] = 1;
                any = true;
            }
        }
        live.swap(next);
        if (!any) return false;
    }
    return true;
}

OracleStats SimulationOracle::stats() const {
    return {eval_queries_.load(std::memory_order_relaxed),
            membership_queries_.load(std::memory_order_relaxed)};
}

void SimulationOracle::reset_stats() {
    eval_queries_.store(0, std::memory_order_relaxed);
    membership_queries_.store(0, std::memory_order_relaxed);
}

bool QueryCache::member(const Word& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    const bool bit = oracle_.member(w);
    cache_.emplace(w, bit);
    return bit;
}

} // namespace swlearn
