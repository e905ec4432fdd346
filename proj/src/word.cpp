#include "swlearn/word.hpp"

#include <algorithm>
#include <limits>

namespace swlearn {

Word::Word(std::vector<int> symbols) : symbols_(std::move(symbols)) {
    for (int s : symbols_) {
        if (s < 1) throw Error("word symbol must be a positive subsystem index");
    }
}

Word Word::parse(std::string_view digits) {
    std::vector<int> symbols;
    symbols.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw Error("word digit out of range: " + std::string(1, c));
        symbols.push_back(c - '0');
    }
    return Word(std::move(symbols));
}

Word Word::prefix(std::size_t n) const {
    if (n > size()) throw Error("prefix length exceeds word length");
    return Word(std::vector<int>(symbols_.begin(), symbols_.begin() + static_cast<long>(n)));
}

Word Word::suffix_from(std::size_t n) const {
    if (n > size()) throw Error("suffix offset exceeds word length");
    return Word(std::vector<int>(symbols_.begin() + static_cast<long>(n), symbols_.end()));
}

Word Word::concat(const Word& rhs) const {
    std::vector<int> joined = symbols_;
    joined.insert(joined.end(), rhs.symbols_.begin(), rhs.symbols_.end());
    return Word(std::move(joined));
}

Word Word::append(int symbol) const {
    std::vector<int> joined = symbols_;
    joined.push_back(symbol);
    return Word(std::move(joined));
}

std::string Word::str() const {
    if (symbols_.empty()) return "λ";
    const bool digits = std::all_of(symbols_.begin(), symbols_.end(),
                                    [](int s) { return s <= 9; });
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!digits && i > 0) out += '.';
        out += std::to_string(symbols_[i]);
    }
    return out;
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.symbols() < b.symbols();
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::uint64_t h = 14695981039346656037ull;
    for (int s : w.symbols()) {
        h ^= static_cast<std::uint64_t>(s);
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

std::uint64_t word_count_up_to(int alphabet_size, int max_len) {
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t total = 0;
    std::uint64_t level = 1; // alphabet_size^n
    for (int n = 0; n <= max_len; ++n) {
        if (cap - total < level) return cap;
        total += level;
        if (n < max_len) {
            if (level > cap / static_cast<std::uint64_t>(alphabet_size)) return cap;
            level *= static_cast<std::uint64_t>(alphabet_size);
        }
    }
    return total;
}

WordEnumerator::WordEnumerator(int alphabet_size, int max_len, std::uint64_t budget)
    : alphabet_size_(alphabet_size), max_len_(max_len) {
    if (alphabet_size < 1) throw Error("alphabet size must be at least 1");
    if (max_len < 0) throw Error("maximum word length must be non-negative");
    const std::uint64_t total = word_count_up_to(alphabet_size, max_len);
    if (total > budget) {
        throw CapacityError("word enumeration over alphabet of size " +
                            std::to_string(alphabet_size) + " up to length " +
                            std::to_string(max_len) + " exceeds budget of " +
                            std::to_string(budget) + " words");
    }
}

std::optional<Word> WordEnumerator::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return Word(); // λ
    }
    // Odometer increment in base alphabet_size; roll over to the next length.
    for (std::size_t i = current_.size(); i-- > 0;) {
        if (current_[i] < alphabet_size_) {
            ++current_[i];
            return Word(current_);
        }
        current_[i] = 1;
    }
    if (static_cast<int>(current_.size()) == max_len_) {
        done_ = true;
        return std::nullopt;
    }
    current_.assign(current_.size() + 1, 1);
    return Word(current_);
}

std::vector<Word> all_words_up_to(int alphabet_size, int max_len, std::uint64_t budget) {
    WordEnumerator stream(alphabet_size, max_len, budget);
    std::vector<Word> out;
    while (auto w = stream.next()) out.push_back(std::move(*w));
    return out;
}

} // namespace swlearn
