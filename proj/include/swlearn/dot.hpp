#pragma once

#include <string>
#include <string_view>

#include "swlearn/hypothesis.hpp"
#include "swlearn/system.hpp"

namespace swlearn {

/// Graphviz text for a learned automaton. Nodes are printed as v'0, v'1, …
/// with the initial node marked by an incoming edge from a point-shaped
/// pseudo-node; one edge statement per labeled edge. Output is byte-stable
/// for a given automaton.
std::string to_dot(const HypothesisAutomaton& h);

/// Graphviz text for a ground-truth automaton, keeping its node names.
std::string to_dot(const RestrictionAutomaton& g);

struct ParsedDigraph {
    std::vector<std::string> node_names;  // declaration order
    std::string initial;
    std::vector<std::tuple<std::string, std::string, int>> edges;  // src, dst, label
};

/// Reads back the subset of DOT this library emits. Throws ParseError on
/// anything else.
ParsedDigraph parse_dot(std::string_view text);

/// Rebuilds a deterministic automaton from emitted DOT text.
HypothesisAutomaton hypothesis_from_dot(std::string_view text);

} // namespace swlearn
