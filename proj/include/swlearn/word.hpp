#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swlearn/errors.hpp"

namespace swlearn {

/// A finite sequence of subsystem indices (1-based). The empty word is the
/// empty sequence λ.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> symbols);

    /// Builds a word from a digit string, e.g. "121" -> (1,2,1). Only valid
    /// for single-digit symbols; "" yields λ.
    static Word parse(std::string_view digits);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }

    int symbol(std::size_t i) const { return symbols_[i]; }
    const std::vector<int>& symbols() const { return symbols_; }

    /// First n symbols (n <= size()).
    Word prefix(std::size_t n) const;
    /// Symbols from position n to the end (n <= size()).
    Word suffix_from(std::size_t n) const;

    Word concat(const Word& rhs) const;
    Word append(int symbol) const;

    /// Digit string when all symbols are single-digit, dot-separated
    /// otherwise; λ for the empty word.
    std::string str() const;

    bool operator==(const Word&) const = default;
    /// Lexicographic on symbols (not length-lex; see length_lex_less).
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> symbols_;
};

/// Length-then-lexicographic order, the enumeration order of the library.
bool length_lex_less(const Word& a, const Word& b);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 20'000'000;

/// Number of words over {1..alphabet_size} of length 0..max_len, saturating
/// at uint64 max.
std::uint64_t word_count_up_to(int alphabet_size, int max_len);

/// Streams λ first, then all words in increasing length, lexicographic
/// within a length. Throws CapacityError on construction when the total
/// count exceeds the budget.
class WordEnumerator {
public:
    WordEnumerator(int alphabet_size, int max_len,
                   std::uint64_t budget = kDefaultEnumerationBudget);

    std::optional<Word> next();

private:
    int alphabet_size_;
    int max_len_;
    std::vector<int> current_;
    bool done_ = false;
    bool started_ = false;
};

/// Materializes the full stream; only sensible for small alphabets/lengths.
std::vector<Word> all_words_up_to(int alphabet_size, int max_len,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace swlearn
