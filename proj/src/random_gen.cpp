#include "swlearn/random_gen.hpp"

#include <algorithm>
#include <numeric>

namespace swlearn {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    if (lo > hi) throw Error("rand_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(rng() % span);
}

RestrictionAutomaton random_restriction_automaton(std::mt19937_64& rng, int node_count,
                                                  int alphabet_size, int extra_edges) {
    if (node_count < 1) throw Error("automaton needs at least one node");
    if (alphabet_size < 1) throw Error("automaton needs a non-empty alphabet");

    RestrictionAutomaton g;
    g.alphabet_size = alphabet_size;
    g.initial = 0;
    for (int v = 0; v < node_count; ++v) g.node_names.push_back("v" + std::to_string(v));

    // A labeled cycle through a shuffled node order keeps the graph strongly
    // connected no matter what the extra edges do.
    std::vector<int> order(static_cast<std::size_t>(node_count));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(i) - 1))]);
    }
    for (int i = 0; i < node_count; ++i) {
        const int src = order[static_cast<std::size_t>(i)];
        const int dst = order[static_cast<std::size_t>((i + 1) % node_count)];
        g.edges.push_back({src, dst, rand_int(rng, 1, alphabet_size)});
    }
    for (int i = 0; i < extra_edges; ++i) {
        g.edges.push_back({rand_int(rng, 0, node_count - 1), rand_int(rng, 0, node_count - 1),
                           rand_int(rng, 1, alphabet_size)});
    }
    g.validate();
    return g;
}

RestrictionAutomaton random_deterministic_restriction_automaton(std::mt19937_64& rng,
                                                                int node_count,
                                                                int alphabet_size,
                                                                int extra_edges) {
    if (node_count < 1) throw Error("automaton needs at least one node");
    if (alphabet_size < 1) throw Error("automaton needs a non-empty alphabet");

    RestrictionAutomaton g;
    g.alphabet_size = alphabet_size;
    g.initial = 0;
    for (int v = 0; v < node_count; ++v) g.node_names.push_back("v" + std::to_string(v));

    std::vector<std::vector<char>> used(
        static_cast<std::size_t>(node_count),
        std::vector<char>(static_cast<std::size_t>(alphabet_size), 0));
    auto pick_free_label = [&](int src) -> int {
        std::vector<int> free;
        for (int p = 1; p <= alphabet_size; ++p) {
            if (!used[static_cast<std::size_t>(src)][static_cast<std::size_t>(p - 1)]) {
                free.push_back(p);
            }
        }
        if (free.empty()) return 0;
        return free[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(free.size()) - 1))];
    };

    std::vector<int> order(static_cast<std::size_t>(node_count));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[static_cast<std::size_t>(rand_int(rng, 0, static_cast<int>(i) - 1))]);
    }
    for (int i = 0; i < node_count; ++i) {
        const int src = order[static_cast<std::size_t>(i)];
        const int dst = order[static_cast<std::size_t>((i + 1) % node_count)];
        const int label = pick_free_label(src); // every node is a cycle source once
        used[static_cast<std::size_t>(src)][static_cast<std::size_t>(label - 1)] = 1;
        g.edges.push_back({src, dst, label});
    }
    for (int i = 0; i < extra_edges; ++i) {
        const int src = rand_int(rng, 0, node_count - 1);
        const int label = pick_free_label(src);
        if (label == 0) continue;
        used[static_cast<std::size_t>(src)][static_cast<std::size_t>(label - 1)] = 1;
        g.edges.push_back({src, rand_int(rng, 0, node_count - 1), label});
    }
    g.validate();
    return g;
}

PolynomialVectorField random_field(std::mt19937_64& rng, int subsystem, int dimension,
                                   int order) {
    PolynomialVectorField field;
    field.subsystem = subsystem;
    field.dimension = dimension;
    field.order = order;
    field.coeffs.assign(static_cast<std::size_t>(dimension),
                        std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0));
    for (auto& row : field.coeffs) {
        for (auto& a : row) {
            a = static_cast<double>(rand_int(rng, -256'000, 256'000)) / 256.0;
        }
    }
    field.validate();
    return field;
}

SwitchedSystemSpec random_spec(std::mt19937_64& rng, const RandomSpecParams& params) {
    SwitchedSystemSpec spec;
    spec.subsystem_count = params.alphabet_size;
    spec.dimension = params.dimension;
    spec.order = params.order;
    spec.max_word_length = params.max_word_length;
    for (int p = 1; p <= params.alphabet_size; ++p) {
        spec.fields.push_back(random_field(rng, p, params.dimension, params.order));
    }
    spec.automaton = random_restriction_automaton(rng, params.node_count,
                                                  params.alphabet_size, params.extra_edges);
    spec.validate();
    return spec;
}

} // namespace swlearn
