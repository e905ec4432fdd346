#pragma once

#include <vector>

#include "swlearn/system.hpp"

namespace swlearn::testing {

// The three-subsystem cubic system with the two-node restriction automaton
// used throughout the golden tests (also shipped as data/example1.json).
inline SwitchedSystemSpec cubic_triple_spec() {
    SwitchedSystemSpec spec;
    spec.subsystem_count = 3;
    spec.dimension = 3;
    spec.order = 3;
    spec.max_word_length = 100;

    PolynomialVectorField f1{1, 3, 3, {
        {-0.0625, 0.125, -0.25, 0.5},
        {0.0625, -0.125, 0.25, 0.5},
        {0.0625, -0.125, 0.25, -0.5},
    }};
    PolynomialVectorField f2{2, 3, 3, {
        {0.81, -0.27, 0.0, 0.3},
        {0.81, 0.27, 0.0, -0.3},
        {0.0, 0.81, 0.0, 0.3},
    }};
    PolynomialVectorField f3{3, 3, 3, {
        {0.0, 0.0, 4.0, -2.0},
        {0.0, 0.0, 8.0, -4.0},
        {-0.625, 0.0, 0.25, 0.5},
    }};
    spec.fields = {f1, f2, f3};

    spec.automaton.node_names = {"v0", "v1"};
    spec.automaton.initial = 0;
    spec.automaton.alphabet_size = 3;
    spec.automaton.edges = {{0, 1, 1}, {1, 1, 1}, {1, 0, 2}, {1, 0, 3}};
    spec.validate();
    return spec;
}

// Same system with a tighter length bound, small enough for exhaustive
// strict-mode equivalence checks.
inline SwitchedSystemSpec cubic_triple_spec_short(int max_word_length = 12) {
    SwitchedSystemSpec spec = cubic_triple_spec();
    spec.max_word_length = max_word_length;
    return spec;
}

} // namespace swlearn::testing
