#include <doctest.h>

#include <random>
#include <unordered_set>

#include "swlearn/random_gen.hpp"
#include "swlearn/word.hpp"

using namespace swlearn;

TEST_CASE("word::concat") {
    CHECK(Word().concat(Word::parse("12")) == Word::parse("12"));
    CHECK(Word::parse("1").concat(Word::parse("2")) == Word::parse("12"));
    CHECK(Word::parse("12").concat(Word::parse("1")) == Word::parse("121"));
    CHECK(Word::parse("12").concat(Word()) == Word::parse("12"));
}

TEST_CASE("word::prefix_suffix") {
    const Word w = Word::parse("1213");
    CHECK(w.prefix(0) == Word());
    CHECK(w.prefix(2) == Word::parse("12"));
    CHECK(w.suffix_from(2) == Word::parse("13"));
    CHECK_THROWS_AS(w.prefix(5), Error);

    // w = prefix(w, j) · suffix-from(w, j) for every split point.
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> symbols(static_cast<std::size_t>(rand_int(rng, 0, 10)));
        for (auto& s : symbols) s = rand_int(rng, 1, 5);
        const Word word{std::vector<int>(symbols)};
        for (std::size_t j = 0; j <= word.size(); ++j) {
            CHECK(word.prefix(j).concat(word.suffix_from(j)) == word);
        }
    }
}

TEST_CASE("word::str") {
    CHECK(Word().str() == "λ");
    CHECK(Word::parse("121").str() == "121");
    CHECK(Word({1, 12, 3}).str() == "1.12.3");
    CHECK_THROWS_AS(Word({0}), Error);
}

TEST_CASE("word::all_words_up_to") {
    auto strs = [](const std::vector<Word>& ws) {
        std::vector<std::string> out;
        for (const auto& w : ws) out.push_back(w.str());
        return out;
    };
    CHECK(strs(all_words_up_to(3, 1)) == std::vector<std::string>{"λ", "1", "2", "3"});
    CHECK(strs(all_words_up_to(2, 2)) ==
          std::vector<std::string>{"λ", "1", "2", "11", "12", "21", "22"});
    CHECK(all_words_up_to(3, 2).size() == 13); // 1 + 3 + 9
}

TEST_CASE("word::enumeration_is_prefix_closed_and_duplicate_free") {
    for (int n = 1; n <= 3; ++n) {
        for (int m = 0; m <= 4; ++m) {
            std::unordered_set<Word, WordHash> seen;
            Word previous;
            bool first = true;
            WordEnumerator stream(n, m);
            while (auto w = stream.next()) {
                CHECK(seen.insert(*w).second);
                if (!w->empty()) {
                    CHECK(seen.contains(w->prefix(w->size() - 1)));
                }
                if (!first) CHECK(length_lex_less(previous, *w));
                previous = *w;
                first = false;
            }
            CHECK(seen.size() == word_count_up_to(n, m));
        }
    }
}

TEST_CASE("word::enumeration_budget") {
    CHECK_THROWS_AS(WordEnumerator(3, 20, kDefaultEnumerationBudget), CapacityError);
    CHECK_NOTHROW(WordEnumerator(3, 12, kDefaultEnumerationBudget));
    CHECK(word_count_up_to(10, 30) == std::numeric_limits<std::uint64_t>::max());
}
