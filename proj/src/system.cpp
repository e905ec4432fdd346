#include "swlearn/system.hpp"

#include <cmath>
#include <vector>

namespace swlearn {

void PolynomialVectorField::validate() const {
    if (subsystem < 1) throw Error("subsystem index must be 1-based");
    if (dimension < 1) throw Error("subsystem dimension must be at least 1");
    if (order < 0) throw Error("polynomial order must be non-negative");
    if (static_cast<int>(coeffs.size()) != dimension) {
        throw Error("coefficient array of subsystem " + std::to_string(subsystem) +
                    " must have exactly " + std::to_string(dimension) + " rows");
    }
    for (int i = 0; i < dimension; ++i) {
        if (static_cast<int>(coeffs[i].size()) != order + 1) {
            throw Error("coefficient row " + std::to_string(i + 1) + " of subsystem " +
                        std::to_string(subsystem) + " must have exactly " +
                        std::to_string(order + 1) + " entries");
        }
        for (double a : coeffs[i]) {
            if (!std::isfinite(a)) {
                throw Error("coefficient of subsystem " + std::to_string(subsystem) +
                            " is not finite");
            }
        }
    }
}

namespace detail {

bool strongly_connected(int node_count, const std::vector<LabeledEdge>& edges) {
    if (node_count == 0) return false;
    auto reaches_all = [&](bool forward) {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count));
        for (const auto& e : edges) {
            if (forward) adj[static_cast<std::size_t>(e.src)].push_back(e.dst);
            else adj[static_cast<std::size_t>(e.dst)].push_back(e.src);
        }
        std::vector<char> seen(static_cast<std::size_t>(node_count), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++visited;
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        return visited == node_count;
    };
    return reaches_all(true) && reaches_all(false);
}

} // namespace detail

void RestrictionAutomaton::validate() const {
    if (node_names.empty()) throw Error("restriction automaton must have at least one node");
    if (alphabet_size < 1) throw Error("restriction automaton alphabet must be non-empty");
    if (initial < 0 || initial >= node_count()) {
        throw Error("restriction automaton initial node out of range");
    }
    if (edges.empty()) throw Error("restriction automaton must have at least one edge");
    std::vector<char> has_out(node_names.size(), 0);
    for (const auto& e : edges) {
        if (e.src < 0 || e.src >= node_count() || e.dst < 0 || e.dst >= node_count()) {
            throw Error("restriction automaton edge endpoint out of range");
        }
        if (e.label < 1 || e.label > alphabet_size) {
            throw Error("restriction automaton edge label " + std::to_string(e.label) +
                        " outside alphabet 1.." + std::to_string(alphabet_size));
        }
        has_out[static_cast<std::size_t>(e.src)] = 1;
    }
    for (std::size_t v = 0; v < has_out.size(); ++v) {
        if (!has_out[v]) {
            throw Error("restriction automaton node " + node_names[v] +
                        " has no outgoing edge");
        }
    }
    if (!detail::strongly_connected(node_count(), edges)) {
        throw Error("restriction automaton is not strongly connected");
    }
}

void SwitchedSystemSpec::validate() const {
    if (subsystem_count < 1) throw Error("spec must declare at least one subsystem");
    if (dimension < 1) throw Error("spec dimension must be at least 1");
    if (order < 0) throw Error("spec polynomial order must be non-negative");
    if (max_word_length < 1) throw Error("spec maximum word length must be at least 1");
    if (static_cast<int>(fields.size()) != subsystem_count) {
        throw Error("spec must list exactly one vector field per subsystem");
    }
    for (int p = 1; p <= subsystem_count; ++p) {
        const auto& f = fields[static_cast<std::size_t>(p - 1)];
        if (f.subsystem != p) {
            throw Error("vector fields must be listed in subsystem order 1..N");
        }
        if (f.dimension != dimension || f.order != order) {
            throw Error("vector field of subsystem " + std::to_string(p) +
                        " disagrees with the spec dimension or order");
        }
        f.validate();
    }
    if (automaton.alphabet_size != subsystem_count) {
        throw Error("automaton alphabet must equal the subsystem index set");
    }
    automaton.validate();
}

} // namespace swlearn
