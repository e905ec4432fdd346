#include "swlearn/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

namespace swlearn {

std::optional<Word> language_match(const HypothesisAutomaton& hypothesis,
                                   const SimulationOracle& oracle, int alphabet_size,
                                   int max_len, std::uint64_t budget) {
    WordEnumerator stream(alphabet_size, max_len, budget);
    while (auto w = stream.next()) {
        if (w->empty()) continue; // λ is in both languages by definition
        if (oracle.member(*w) != hypothesis.accepts(*w)) return w;
    }
    return std::nullopt;
}

namespace {

using NodeSet = std::vector<int>; // sorted, unique

NodeSet step(const RestrictionAutomaton& g, const NodeSet& from, int label) {
    std::set<int> next;
    for (const auto& e : g.edges) {
        if (e.label != label) continue;
        if (std::binary_search(from.begin(), from.end(), e.src)) next.insert(e.dst);
    }
    return NodeSet(next.begin(), next.end());
}

} // namespace

std::optional<Word> product_diff_search(const HypothesisAutomaton& hypothesis,
                                        const RestrictionAutomaton& truth, int max_len) {
    struct State {
        int node;     // hypothesis node, -1 once the walk has died
        NodeSet set;  // reachable ground-truth nodes, empty once dead
        Word word;
    };

    std::set<std::pair<int, NodeSet>> visited;
    std::deque<State> queue;
    queue.push_back({hypothesis.initial(), NodeSet{truth.initial}, Word()});
    visited.insert({hypothesis.initial(), NodeSet{truth.initial}});

    // Both sides accept λ, so the root never mismatches. BFS expanding
    // symbols in ascending order visits words in length-lex order, which
    // makes the first mismatch the length-lex-minimal one.
    while (!queue.empty()) {
        State cur = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(cur.word.size()) == max_len) continue;
        for (int p = 1; p <= hypothesis.alphabet_size(); ++p) {
            const int hn = cur.node == -1 ? -1 : hypothesis.next(cur.node, p);
            NodeSet gs = cur.set.empty() ? NodeSet{} : step(truth, cur.set, p);
            const bool h_alive = hn != -1;
            const bool g_alive = !gs.empty();
            Word w = cur.word.append(p);
            if (h_alive != g_alive) return w;
            if (!h_alive) continue; // both dead: no extension can differ
            auto key = std::make_pair(hn, gs);
            if (visited.insert(std::move(key)).second) {
                queue.push_back({hn, std::move(gs), std::move(w)});
            }
        }
    }
    return std::nullopt;
}

HypothesisAutomaton minimal_dfa_of(const RestrictionAutomaton& truth) {
    truth.validate();
    const int n_labels = truth.alphabet_size;

    // Subset construction from the initial node; the empty set is not a state.
    std::map<NodeSet, int> index_of;
    std::vector<NodeSet> subsets;
    std::vector<std::vector<int>> trans; // [state][label-1] -> state or -1
    auto intern = [&](NodeSet s) {
        auto [it, fresh] = index_of.emplace(std::move(s), static_cast<int>(subsets.size()));
        if (fresh) {
            subsets.push_back(it->first);
            trans.emplace_back(static_cast<std::size_t>(n_labels), -1);
        }
        return it->second;
    };
    const int start = intern(NodeSet{truth.initial});
    for (int s = 0; s < static_cast<int>(subsets.size()); ++s) {
        for (int p = 1; p <= n_labels; ++p) {
            NodeSet next = step(truth, subsets[static_cast<std::size_t>(s)], p);
            if (next.empty()) continue;
            trans[static_cast<std::size_t>(s)][static_cast<std::size_t>(p - 1)] =
                intern(std::move(next));
        }
    }

    // Moore refinement. Every state accepts (the language is prefix-closed);
    // the implicit reject sink keeps block id -1.
    const std::size_t n_states = subsets.size();
    std::vector<int> block(n_states, 0);
    int block_count = 1;
    for (;;) {
        std::map<std::vector<int>, int> new_ids;
        std::vector<int> next_block(n_states);
        for (std::size_t s = 0; s < n_states; ++s) {
            std::vector<int> signature{block[s]};
            for (int p = 0; p < n_labels; ++p) {
                const int t = trans[s][static_cast<std::size_t>(p)];
                signature.push_back(t == -1 ? -1 : block[static_cast<std::size_t>(t)]);
            }
            auto [it, fresh] = new_ids.emplace(std::move(signature),
                                               static_cast<int>(new_ids.size()));
            (void)fresh;
            next_block[s] = it->second;
        }
        const int count = static_cast<int>(new_ids.size());
        block = std::move(next_block);
        if (count == block_count) break;
        block_count = count;
    }

    // Renumber blocks by BFS from the start block for stable output.
    std::vector<int> order(static_cast<std::size_t>(block_count), -1);
    int assigned = 0;
    std::deque<int> bfs{block[static_cast<std::size_t>(start)]};
    order[static_cast<std::size_t>(block[static_cast<std::size_t>(start)])] = assigned++;
    std::vector<std::size_t> representative(static_cast<std::size_t>(block_count));
    for (std::size_t s = 0; s < n_states; ++s) {
        representative[static_cast<std::size_t>(block[s])] = s; // any member works
    }
    while (!bfs.empty()) {
        const int b = bfs.front();
        bfs.pop_front();
        const std::size_t rep = representative[static_cast<std::size_t>(b)];
        for (int p = 0; p < n_labels; ++p) {
            const int t = trans[rep][static_cast<std::size_t>(p)];
            if (t == -1) continue;
            const int tb = block[static_cast<std::size_t>(t)];
            if (order[static_cast<std::size_t>(tb)] == -1) {
                order[static_cast<std::size_t>(tb)] = assigned++;
                bfs.push_back(tb);
            }
        }
    }

    std::vector<std::string> ids(static_cast<std::size_t>(block_count));
    for (int b = 0; b < block_count; ++b) {
        ids[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])] =
            "s" + std::to_string(order[static_cast<std::size_t>(b)]);
    }
    HypothesisAutomaton h(std::move(ids), 0, n_labels);
    for (int b = 0; b < block_count; ++b) {
        const std::size_t rep = representative[static_cast<std::size_t>(b)];
        for (int p = 1; p <= n_labels; ++p) {
            const int t = trans[rep][static_cast<std::size_t>(p - 1)];
            if (t == -1) continue;
            h.add_edge(order[static_cast<std::size_t>(b)],
                       order[static_cast<std::size_t>(block[static_cast<std::size_t>(t)])], p);
        }
    }
    return h;
}

} // namespace swlearn
