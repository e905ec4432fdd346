#pragma once

#include <cstdint>
#include <random>

#include "swlearn/system.hpp"

namespace swlearn {

/// Engine-only uniform helpers; std distributions vary across standard
/// libraries and would break seed-stable instance generation.
int rand_int(std::mt19937_64& rng, int lo, int hi);

struct RandomSpecParams {
    int node_count = 2;       // restriction automaton nodes
    int alphabet_size = 3;    // N
    int dimension = 3;        // d
    int order = 3;            // m
    int max_word_length = 12; // M
    int extra_edges = 3;      // edges on top of the connecting cycle
};

/// Strongly connected labeled multigraph: a random cycle through all nodes
/// guarantees connectivity, plus extra random edges (self-loops, parallels,
/// and duplicate labels all allowed).
RestrictionAutomaton random_restriction_automaton(std::mt19937_64& rng, int node_count,
                                                  int alphabet_size, int extra_edges);

/// Same construction restricted to at most one outgoing edge per node and
/// label; extra edges are dropped when a node has no free label slot left.
RestrictionAutomaton random_deterministic_restriction_automaton(std::mt19937_64& rng,
                                                                int node_count,
                                                                int alphabet_size,
                                                                int extra_edges);

/// Coefficients are integers over 256 in [-1000, 1000], so every ground
/// truth is exactly representable and recovery can be checked tightly.
PolynomialVectorField random_field(std::mt19937_64& rng, int subsystem, int dimension,
                                   int order);

SwitchedSystemSpec random_spec(std::mt19937_64& rng, const RandomSpecParams& params);

} // namespace swlearn
