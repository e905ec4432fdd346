#pragma once

#include <string>
#include <vector>

#include "swlearn/errors.hpp"

namespace swlearn {

/// Coefficients of one subsystem: component i of the vector field is the
/// scalar polynomial sum_k coeffs[i][k] * xi_i^k, so every component depends
/// only on its own state coordinate.
struct PolynomialVectorField {
    int subsystem = 0;                            // 1-based index p
    int dimension = 0;                            // d
    int order = 0;                                // m
    std::vector<std::vector<double>> coeffs;      // d rows, m+1 columns

    void validate() const;
    double coeff(int component, int power) const { return coeffs[component][power]; }
};

struct LabeledEdge {
    int src = 0;
    int dst = 0;
    int label = 0; // subsystem index, 1-based

    bool operator==(const LabeledEdge&) const = default;
    auto operator<=>(const LabeledEdge&) const = default;
};

/// Ground-truth switching constraint: a strongly connected, directed,
/// labeled multigraph with a unique initial node. Parallel edges and
/// self-loops are allowed, and two edges out of one node may carry the same
/// label (the graph need not be deterministic).
struct RestrictionAutomaton {
    std::vector<std::string> node_names;  // index -> display name
    int initial = 0;
    int alphabet_size = 0;                // labels range over 1..alphabet_size
    std::vector<LabeledEdge> edges;       // multiset of (src, dst, label)

    int node_count() const { return static_cast<int>(node_names.size()); }

    /// Checks label ranges, edge endpoints, strong connectivity, and that
    /// every node has an outgoing edge. Throws Error on violation.
    void validate() const;
};

/// Everything the gray-box simulation hides from the learner.
struct SwitchedSystemSpec {
    int subsystem_count = 0;   // N
    int dimension = 0;         // d
    int order = 0;             // m
    int max_word_length = 0;   // M, the length bound of the language
    std::vector<PolynomialVectorField> fields;  // one per subsystem, index order
    RestrictionAutomaton automaton;

    void validate() const;
};

namespace detail {
/// Every node reachable from every node (multigraph edges given as pairs).
bool strongly_connected(int node_count, const std::vector<LabeledEdge>& edges);
} // namespace detail

} // namespace swlearn
