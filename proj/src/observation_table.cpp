#include "swlearn/observation_table.hpp"

#include <algorithm>
#include <cassert>

namespace swlearn {

ObservationTable::ObservationTable(int alphabet_size, MembershipFn member)
    : alphabet_size_(alphabet_size), member_(std::move(member)) {
    if (alphabet_size_ < 1) throw Error("observation table needs a non-empty alphabet");
    if (!member_) throw Error("observation table needs a membership source");
    push_access(Word());
    suffixes_.push_back(Word());
    suffix_set_.insert(Word());
    fill();
}

void ObservationTable::push_access(const Word& w) {
    access_.push_back(w);
    access_set_.insert(w);
}

void ObservationTable::fill() {
    auto ensure = [&](const Word& w) {
        if (!entries_.contains(w)) entries_.emplace(w, member_(w));
    };
    for (const Word& q : access_) {
        for (const Word& r : suffixes_) ensure(q.concat(r));
        for (int p = 1; p <= alphabet_size_; ++p) {
            const Word ext = q.append(p);
            for (const Word& r : suffixes_) ensure(ext.concat(r));
        }
    }
}

bool ObservationTable::entry(const Word& w) const {
    auto it = entries_.find(w);
    if (it == entries_.end()) throw Error("table entry " + w.str() + " has not been filled");
    return it->second;
}

std::string ObservationTable::row(const Word& w) const {
    std::string bits;
    bits.reserve(suffixes_.size());
    for (const Word& r : suffixes_) bits += entry(w.concat(r)) ? '1' : '0';
    return bits;
}

std::optional<ObservationTable::ClosednessWitness> ObservationTable::closedness_violation() const {
    std::unordered_set<std::string> access_rows;
    for (const Word& q : access_) access_rows.insert(row(q));
    for (const Word& q : access_) {
        for (int p = 1; p <= alphabet_size_; ++p) {
            const Word ext = q.append(p);
            if (access_set_.contains(ext)) continue;
            if (!access_rows.contains(row(ext))) return ClosednessWitness{q, p};
        }
    }
    return std::nullopt;
}

std::optional<ObservationTable::ConsistencyWitness> ObservationTable::consistency_violation() const {
    for (std::size_t i = 0; i < access_.size(); ++i) {
        const std::string row_i = row(access_[i]);
        for (std::size_t j = i + 1; j < access_.size(); ++j) {
            if (row(access_[j]) != row_i) continue;
            for (int p = 1; p <= alphabet_size_; ++p) {
                const Word ext_i = access_[i].append(p);
                const Word ext_j = access_[j].append(p);
                for (const Word& r : suffixes_) {
                    if (entry(ext_i.concat(r)) != entry(ext_j.concat(r))) {
                        return ConsistencyWitness{access_[i], access_[j], p, r};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

void ObservationTable::fix_closedness(const ClosednessWitness& w) {
    const Word ext = w.access.append(w.symbol);
    // The witness row matches nothing in Q, so the word cannot already be there.
    assert(!access_set_.contains(ext));
    push_access(ext);
    fill();
}

void ObservationTable::fix_consistency(const ConsistencyWitness& w) {
    const Word suffix = Word({w.symbol}).concat(w.suffix);
    // A suffix already in R would have split the witness rows.
    assert(!suffix_set_.contains(suffix));
    suffixes_.push_back(suffix);
    suffix_set_.insert(suffix);
    fill();
}

void ObservationTable::add_counterexample(const Word& w) {
    if (w.empty()) throw Error("counterexample must be a non-empty word");
    for (std::size_t n = 1; n <= w.size(); ++n) {
        const Word prefix = w.prefix(n);
        if (!access_set_.contains(prefix)) push_access(prefix);
    }
    fill();
}

ObservationTable::Snapshot ObservationTable::snapshot() const {
    Snapshot snap;
    snap.access_words = access_;
    snap.suffixes = suffixes_;

    std::vector<Word> q_section = access_;
    std::sort(q_section.begin(), q_section.end(), length_lex_less);

    std::vector<Word> ext_section;
    std::unordered_set<Word, WordHash> seen;
    for (const Word& q : access_) {
        for (int p = 1; p <= alphabet_size_; ++p) {
            const Word ext = q.append(p);
            if (access_set_.contains(ext) || seen.contains(ext)) continue;
            seen.insert(ext);
            ext_section.push_back(ext);
        }
    }
    std::sort(ext_section.begin(), ext_section.end(), length_lex_less);

    for (const Word& q : q_section) snap.rows.emplace_back(q, row(q));
    snap.boundary = snap.rows.size();
    for (const Word& e : ext_section) snap.rows.emplace_back(e, row(e));
    snap.closed = is_closed();
    snap.consistent = is_consistent();
    return snap;
}

std::string ObservationTable::render(const std::string& title) const {
    const Snapshot snap = snapshot();

    // Display width of λ is one column even though it is two bytes.
    auto width = [](const Word& w) {
        return w.empty() ? std::size_t{1} : w.str().size();
    };
    std::size_t label_w = title.size();
    for (const auto& [w, bits] : snap.rows) label_w = std::max(label_w, width(w));

    auto pad_word = [&](const std::string& text, std::size_t logical) {
        return text + std::string(label_w - logical + 1, ' ');
    };

    std::string out = pad_word(title, title.size()) + "|";
    for (const Word& r : snap.suffixes) out += " " + r.str();
    out += "\n";
    const std::string rule = std::string(label_w + 1, '-') + "+" +
                             [&] {
                                 std::size_t w = 0;
                                 for (const Word& r : snap.suffixes) w += 1 + width(r);
                                 return std::string(w, '-');
                             }();
    out += rule + "\n";

    for (std::size_t idx = 0; idx < snap.rows.size(); ++idx) {
        if (idx == snap.boundary) out += rule + "\n";
        const auto& [w, bits] = snap.rows[idx];
        out += pad_word(w.str(), width(w)) + "|";
        for (std::size_t c = 0; c < bits.size(); ++c) {
            out += " " + std::string(1, bits[c]);
            // Pad to the suffix column width so the grid stays aligned.
            const std::size_t col_w = width(snap.suffixes[c]);
            if (col_w > 1) out += std::string(col_w - 1, ' ');
        }
        out += "\n";
    }
    return out;
}

} // namespace swlearn
