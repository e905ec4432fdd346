#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "swlearn/word.hpp"

namespace swlearn {

/// The (Q, R, T) structure of the modified L* loop: prefix-closed access
/// words Q, suffix-closed distinguishing suffixes R, and membership bits T
/// kept total on (Q ∪ Q·P)·R. All membership information flows through the
/// callable handed to the constructor, so tests can drive the table from a
/// synthetic language just as well as from the gray-box oracle.
class ObservationTable {
public:
    using MembershipFn = std::function<bool(const Word&)>;

    struct ClosednessWitness {
        Word access;  // p̃ ∈ Q
        int symbol;   // p with row(p̃·p) unmatched in Q
    };

    struct ConsistencyWitness {
        Word first, second;  // equal-row pair in Q, insertion order
        int symbol;          // p
        Word suffix;         // r̃ ∈ R with T(first·p·r̃) != T(second·p·r̃)
    };

    struct Snapshot {
        std::vector<Word> access_words;              // Q, insertion order
        std::vector<Word> suffixes;                  // R, insertion order
        std::vector<std::pair<Word, std::string>> rows;  // Q section then Q·P-only
                                                         // section, length-lex inside each
        std::size_t boundary = 0;                    // rows[0..boundary) is the Q section
        bool closed = false;
        bool consistent = false;
    };

    ObservationTable(int alphabet_size, MembershipFn member);

    int alphabet_size() const { return alphabet_size_; }
    const std::vector<Word>& access_words() const { return access_; }
    const std::vector<Word>& suffixes() const { return suffixes_; }

    bool contains_access(const Word& w) const { return access_set_.contains(w); }

    /// T(w) for any w the table has filled.
    bool entry(const Word& w) const;

    /// Bit string (T(w·r))_{r∈R} in R insertion order; w must be in Q ∪ Q·P.
    std::string row(const Word& w) const;

    /// First violation in scan order (Q insertion order, then symbols
    /// ascending), or nullopt when closed.
    std::optional<ClosednessWitness> closedness_violation() const;

    /// First violation in scan order (Q insertion-order pairs, then symbols
    /// ascending, then R insertion order), or nullopt when consistent.
    std::optional<ConsistencyWitness> consistency_violation() const;

    bool is_closed() const { return !closedness_violation().has_value(); }
    bool is_consistent() const { return !consistency_violation().has_value(); }

    /// Moves the unmatched extension into Q and refills.
    void fix_closedness(const ClosednessWitness& w);

    /// Adds the distinguishing suffix symbol·r̃ to R and refills.
    void fix_consistency(const ConsistencyWitness& w);

    /// Adds the counterexample and all of its proper prefixes to Q (skipping
    /// words already present) and refills. Idempotent.
    void add_counterexample(const Word& w);

    Snapshot snapshot() const;

    /// Aligned text grid: header row of suffixes, Q section, separator,
    /// Q·P section.
    std::string render(const std::string& title = "T") const;

private:
    void push_access(const Word& w);
    void fill();

    int alphabet_size_;
    MembershipFn member_;
    std::vector<Word> access_;   // Q
    std::vector<Word> suffixes_; // R
    std::unordered_set<Word, WordHash> access_set_;
    std::unordered_set<Word, WordHash> suffix_set_;
    std::unordered_map<Word, bool, WordHash> entries_;  // T
};

} // namespace swlearn
