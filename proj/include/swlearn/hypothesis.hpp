#pragma once

#include <string>
#include <vector>

#include "swlearn/observation_table.hpp"
#include "swlearn/system.hpp"
#include "swlearn/word.hpp"

namespace swlearn {

/// Deterministic labeled graph conjectured from a closed, consistent table.
/// Nodes are identified by their row bit vectors; a node may lack an
/// outgoing edge for some labels (zero rows are never materialized).
class HypothesisAutomaton {
public:
    HypothesisAutomaton() = default;
    HypothesisAutomaton(std::vector<std::string> node_ids, int initial, int alphabet_size);

    int node_count() const { return static_cast<int>(node_ids_.size()); }
    int initial() const { return initial_; }
    int alphabet_size() const { return alphabet_size_; }
    const std::vector<std::string>& node_ids() const { return node_ids_; }

    /// Target of the labeled edge out of node, or -1 when absent.
    int next(int node, int label) const;

    /// Adds src -label-> dst; throws if it would break determinism.
    void add_edge(int src, int dst, int label);

    std::vector<LabeledEdge> edges() const;
    int edge_count() const;

    /// Deterministic walk from the initial node; λ is always accepted and
    /// the walk fails as soon as a needed labeled edge is absent. Length
    /// truncation is the caller's concern.
    bool accepts(const Word& w) const;

private:
    std::vector<std::string> node_ids_;
    int initial_ = 0;
    int alphabet_size_ = 0;
    std::vector<std::vector<int>> next_;  // [node][label-1] -> node or -1
};

/// Builds the conjecture from a closed, consistent table: one node per
/// distinct nonzero row of Q, initial node row(λ), and an edge per surviving
/// one-step extension. Every representative of a row is replayed, so an
/// inconsistent table cannot slip through undetected.
HypothesisAutomaton build_hypothesis(const ObservationTable& table);

/// Every node reachable from every node.
bool strongly_connected(const HypothesisAutomaton& h);

/// Label-respecting bijection between two deterministic automata that maps
/// one initial node to the other. Both sides must have all nodes reachable
/// from the initial node (true for anything this library constructs).
bool isomorphic(const HypothesisAutomaton& a, const HypothesisAutomaton& b);

} // namespace swlearn
