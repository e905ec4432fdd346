#include "swlearn/hypothesis.hpp"

#include <algorithm>
#include <unordered_map>

namespace swlearn {

HypothesisAutomaton::HypothesisAutomaton(std::vector<std::string> node_ids, int initial,
                                         int alphabet_size)
    : node_ids_(std::move(node_ids)), initial_(initial), alphabet_size_(alphabet_size) {
    if (node_ids_.empty()) throw Error("hypothesis automaton needs at least one node");
    if (initial_ < 0 || initial_ >= node_count()) {
        throw Error("hypothesis automaton initial node out of range");
    }
    if (alphabet_size_ < 1) throw Error("hypothesis automaton alphabet must be non-empty");
    next_.assign(node_ids_.size(), std::vector<int>(static_cast<std::size_t>(alphabet_size_), -1));
}

int HypothesisAutomaton::next(int node, int label) const {
    if (node < 0 || node >= node_count()) throw Error("hypothesis node out of range");
    if (label < 1 || label > alphabet_size_) throw Error("hypothesis label out of range");
    return next_[static_cast<std::size_t>(node)][static_cast<std::size_t>(label - 1)];
}

void HypothesisAutomaton::add_edge(int src, int dst, int label) {
    if (src < 0 || src >= node_count() || dst < 0 || dst >= node_count()) {
        throw Error("hypothesis edge endpoint out of range");
    }
    if (label < 1 || label > alphabet_size_) throw Error("hypothesis label out of range");
    int& slot = next_[static_cast<std::size_t>(src)][static_cast<std::size_t>(label - 1)];
    if (slot != -1 && slot != dst) {
        throw Error("conflicting edges out of node " + node_ids_[static_cast<std::size_t>(src)] +
                    " on label " + std::to_string(label));
    }
    slot = dst;
}

std::vector<LabeledEdge> HypothesisAutomaton::edges() const {
    std::vector<LabeledEdge> out;
    for (int v = 0; v < node_count(); ++v) {
        for (int p = 1; p <= alphabet_size_; ++p) {
            const int dst = next_[static_cast<std::size_t>(v)][static_cast<std::size_t>(p - 1)];
            if (dst != -1) out.push_back({v, dst, p});
        }
    }
    return out;
}

int HypothesisAutomaton::edge_count() const { return static_cast<int>(edges().size()); }

bool HypothesisAutomaton::accepts(const Word& w) const {
    int at = initial_;
    for (int s : w.symbols()) {
        if (s < 1 || s > alphabet_size_) return false;
        at = next_[static_cast<std::size_t>(at)][static_cast<std::size_t>(s - 1)];
        if (at == -1) return false;
    }
    return true;
}

HypothesisAutomaton build_hypothesis(const ObservationTable& table) {
    if (auto witness = table.closedness_violation()) {
        throw Error("cannot build a hypothesis from a non-closed table (row " +
                    witness->access.append(witness->symbol).str() + " unmatched)");
    }
    if (auto witness = table.consistency_violation()) {
        throw Error("cannot build a hypothesis from an inconsistent table (" +
                    witness->first.str() + " vs " + witness->second.str() + ")");
    }

    const std::string zero(table.suffixes().size(), '0');
    const std::string initial_row = table.row(Word());
    if (initial_row == zero) throw Error("row(λ) is all-zero; the empty word must be accepted");

    std::vector<std::string> node_ids;
    std::unordered_map<std::string, int> node_of_row;
    for (const Word& q : table.access_words()) {
        const std::string r = table.row(q);
        if (r == zero) continue;
        if (node_of_row.emplace(r, static_cast<int>(node_ids.size())).second) {
            node_ids.push_back(r);
        }
    }

    HypothesisAutomaton h(std::move(node_ids), node_of_row.at(initial_row),
                          table.alphabet_size());
    // Replaying every representative (not just the first) lets add_edge's
    // determinism check double as the well-definedness assertion.
    for (const Word& q : table.access_words()) {
        const std::string src_row = table.row(q);
        if (src_row == zero) continue;
        for (int p = 1; p <= table.alphabet_size(); ++p) {
            const std::string dst_row = table.row(q.append(p));
            if (dst_row == zero) continue;
            h.add_edge(node_of_row.at(src_row), node_of_row.at(dst_row), p);
        }
    }
    return h;
}

bool strongly_connected(const HypothesisAutomaton& h) {
    return detail::strongly_connected(h.node_count(), h.edges());
}

bool isomorphic(const HypothesisAutomaton& a, const HypothesisAutomaton& b) {
    if (a.node_count() != b.node_count()) return false;
    if (a.alphabet_size() != b.alphabet_size()) return false;

    std::vector<int> map_ab(static_cast<std::size_t>(a.node_count()), -1);
    std::vector<int> map_ba(static_cast<std::size_t>(b.node_count()), -1);
    std::vector<std::pair<int, int>> stack{{a.initial(), b.initial()}};
    map_ab[static_cast<std::size_t>(a.initial())] = b.initial();
    map_ba[static_cast<std::size_t>(b.initial())] = a.initial();

    while (!stack.empty()) {
        const auto [va, vb] = stack.back();
        stack.pop_back();
        for (int p = 1; p <= a.alphabet_size(); ++p) {
            const int na = a.next(va, p);
            const int nb = b.next(vb, p);
            if ((na == -1) != (nb == -1)) return false;
            if (na == -1) continue;
            int& fwd = map_ab[static_cast<std::size_t>(na)];
            int& bwd = map_ba[static_cast<std::size_t>(nb)];
            if (fwd == -1 && bwd == -1) {
                fwd = nb;
                bwd = na;
                stack.emplace_back(na, nb);
            } else if (fwd != nb || bwd != na) {
                return false;
            }
        }
    }
    // Reachability from the initial node covers all nodes in both automata,
    // so the partial map is total exactly when no conflict occurred.
    return std::all_of(map_ab.begin(), map_ab.end(), [](int v) { return v != -1; });
}

} // namespace swlearn
