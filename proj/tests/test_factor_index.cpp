#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "paldef/factor_index.hpp"
#include "paldef/naive.hpp"
#include "paldef/pal_index.hpp"
#include "paldef/word_source.hpp"

using namespace paldef;

namespace {

Word ternary_level(std::size_t level) {
    std::size_t len = 1;
    for (std::size_t k = 1; k <= level; ++k) len = 2 * len + 2 * k;
    return WordSource::builtin("ternary-oddity").prefix(len);
}

std::string random_word(std::mt19937& gen, std::size_t min_len, std::size_t max_len,
                        int letters) {
    std::string s;
    const std::size_t n = min_len + gen() % (max_len - min_len + 1);
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('a' + gen() % letters);
    return s;
}

} // namespace

TEST_CASE("copies of an index stay valid") {
    std::vector<FactorIndex> indices;
    {
        const FactorIndex idx = FactorIndex::build(Word::parse("abcab"), 3);
        indices.push_back(idx); // copy
        indices.push_back(idx);
    }
    for (const FactorIndex& idx : indices) {
        CHECK(idx.factor_complexity(2) == 3);
        CHECK(idx.factors(2) == std::vector<std::string>{"ab", "bc", "ca"});
        CHECK(idx.occurrences("ab") == std::vector<std::size_t>{0, 3});
        CHECK(idx.extensions("ab", Side::right) == "c");
    }
}

TEST_CASE("build requires the cap to fit") {
    CHECK_THROWS_AS(FactorIndex::build(Word::parse("ab"), 2), std::invalid_argument);
    CHECK_NOTHROW(FactorIndex::build(Word::parse("ab"), 1));
    CHECK_NOTHROW(FactorIndex::build(Word::parse("a"), 0));
}

TEST_CASE("factor complexity of the small examples") {
    const FactorIndex ababa = FactorIndex::build(Word::parse("ababa"), 2);
    CHECK(ababa.factor_complexity(0) == 1);
    CHECK(ababa.factor_complexity(1) == 2);
    CHECK(ababa.factor_complexity(2) == 2);
    CHECK(ababa.factor_complexity(3) == 2);
    CHECK_THROWS_AS(ababa.factor_complexity(4), std::out_of_range);

    const FactorIndex aaaa = FactorIndex::build(Word::parse("aaaa"), 3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(aaaa.factor_complexity(n) == 1);

    const FactorIndex ab_omega =
        FactorIndex::build(WordSource::builtin("ab-omega").prefix(100), 5);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(ab_omega.factor_complexity(n) == 2);

    const FactorIndex fib = FactorIndex::build(WordSource::builtin("fibonacci").prefix(10000), 10);
    CHECK(fib.factor_complexity(10) == 11);
}

TEST_CASE("special factors") {
    const FactorIndex periodic =
        FactorIndex::build(WordSource::periodic(Word::parse("ab")).prefix(200), 6);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(periodic.special_factors(n, Side::left).empty());
        CHECK(periodic.special_factors(n, Side::right).empty());
    }

    const FactorIndex fib = FactorIndex::build(WordSource::builtin("fibonacci").prefix(10000), 10);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(fib.special_factors(n, Side::left).size() == 1);
        CHECK(fib.special_factors(n, Side::right).size() == 1);
    }

    const FactorIndex u6 = FactorIndex::build(ternary_level(6), 8);
    const auto left2 = u6.special_factors(2, Side::left);
    CHECK(left2 == std::vector<std::string>{"bb", "bc", "ca", "cc"});
    // c^n, b^n, b^{n-1}c are left special
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto ls = u6.special_factors(n, Side::left);
        CHECK(std::find(ls.begin(), ls.end(), std::string(n, 'c')) != ls.end());
        CHECK(std::find(ls.begin(), ls.end(), std::string(n, 'b')) != ls.end());
        CHECK(std::find(ls.begin(), ls.end(), std::string(n - 1, 'b') + "c") != ls.end());
    }
}

TEST_CASE("deep ternary prefix realizes the asymptotic pattern") {
    // blocks reach length 12 at level 12, which settles n up to 11: exactly
    // two palindromes per length and at least three new left extensions
    const Word u12 = ternary_level(12);
    const FactorIndex fidx = FactorIndex::build(u12, 12);
    const PalIndex pidx = PalIndex::build(u12);
    for (std::size_t n = 2; n <= 11; ++n) {
        CAPTURE(n);
        CHECK(pidx.palindromic_complexity(n) == 2);
        CHECK(static_cast<long long>(fidx.factor_complexity(n + 1)) -
                  static_cast<long long>(fidx.factor_complexity(n)) >=
              3);
    }
}

TEST_CASE("reversal closure") {
    const FactorIndex u6 = FactorIndex::build(ternary_level(6), 4);
    CHECK(u6.is_closed_under_reversal(1));
    CHECK_FALSE(u6.is_closed_under_reversal(2));
    CHECK(u6.occurrences("cb").empty());
    CHECK_FALSE(u6.occurrences("bc").empty());

    const FactorIndex rote = FactorIndex::build(WordSource::builtin("rote").prefix(10000), 30);
    for (std::size_t n = 1; n <= 30; ++n) CHECK(rote.is_closed_under_reversal(n));

    const FactorIndex fib = FactorIndex::build(WordSource::builtin("fibonacci").prefix(10000), 30);
    for (std::size_t n = 1; n <= 30; ++n) CHECK(fib.is_closed_under_reversal(n));
}

TEST_CASE("complete return words") {
    const FactorIndex ab_omega =
        FactorIndex::build(WordSource::builtin("ab-omega").prefix(50), 3);
    const auto crw_b = ab_omega.complete_return_words("b");
    CHECK(crw_b.occurrence_count == 49);
    CHECK(crw_b.words == std::vector<std::string>{"bb"});

    const FactorIndex fib = FactorIndex::build(WordSource::builtin("fibonacci").prefix(100), 5);
    CHECK(fib.complete_return_words("a").words == std::vector<std::string>{"aa", "aba"});

    const Word whole = Word::parse("abcab");
    const FactorIndex idx = FactorIndex::build(whole, 3);
    CHECK(idx.complete_return_words("abcab").occurrence_count == 1);
    CHECK(idx.complete_return_words("abcab").words.empty());
    CHECK(idx.complete_return_words("zz").occurrence_count == 0);
}

TEST_CASE("oddities") {
    const FactorIndex fib = FactorIndex::build(WordSource::builtin("fibonacci").prefix(2048), 30);
    CHECK(fib.oddities(30).empty());

    const FactorIndex tm = FactorIndex::build(WordSource::builtin("thue-morse").prefix(256), 16);
    const auto odd = tm.oddities(16);
    CHECK(odd.size() == 16);
    const bool has_pair =
        std::any_of(odd.begin(), odd.end(), [](const Oddity& o) {
            return o.v == "aababbaa" && o.v_reversed == "aabbabaa" && o.witness == "aa";
        });
    CHECK(has_pair);

    const FactorIndex u5 = FactorIndex::build(ternary_level(5), 8);
    const auto odd5 = u5.oddities(8);
    CHECK(odd5.size() == 33);
    const bool b_witnessed = std::any_of(odd5.begin(), odd5.end(), [](const Oddity& o) {
        return o.witness == "b" && o.v == "bacb" && o.v_reversed == "bcab";
    });
    CHECK(b_witnessed);
    CHECK_THROWS_AS(u5.oddities(9), std::out_of_range);
}

TEST_CASE("squares") {
    const FactorIndex abaaba = FactorIndex::build(Word::parse("abaaba"), 3);
    CHECK(abaaba.squares(3) == std::vector<std::string>{"aba"});
    CHECK(abaaba.squares(1) == std::vector<std::string>{"a", "aba"});

    CHECK(FactorIndex::build(Word::parse("abc"), 1).squares(1).empty());

    const FactorIndex aaaa = FactorIndex::build(Word::parse("aaaa"), 2);
    CHECK(aaaa.squares(1) == std::vector<std::string>{"a", "aa"});
    CHECK(aaaa.squares(1, true) == std::vector<std::string>{"a"});

    const Word fib = WordSource::builtin("fibonacci").prefix(10000);
    const auto halves = FactorIndex::build(fib, 4).squares(50);
    REQUIRE_FALSE(halves.empty());
    CHECK(halves.front().size() == 55);
    CHECK(fib.text().find(halves.front() + halves.front()) != std::string::npos);
}

TEST_CASE("occurrences, return words, and squares agree with naive scans") {
    std::mt19937 gen(31337);
    for (int k = 0; k < 40; ++k) {
        const std::string s = random_word(gen, 30, 200, 2 + static_cast<int>(gen() % 2));
        const FactorIndex idx = FactorIndex::build(Word::parse(s), 8);
        for (int j = 0; j < 12; ++j) {
            const std::size_t flen = 1 + gen() % 6;
            const std::size_t pos = gen() % (s.size() - flen);
            const std::string f = s.substr(pos, flen);
            CAPTURE(s);
            CAPTURE(f);
            REQUIRE(idx.occurrences(f) == naive::occurrences(s, f));
            REQUIRE(idx.complete_return_words(f).words == naive::complete_return_words(s, f));
        }
        for (std::size_t min_half : {1, 2, 3}) {
            const auto got = idx.squares(min_half);
            const auto want = naive::squares(s, min_half);
            REQUIRE(got.size() == want.size());
            for (const auto& w : got) REQUIRE(want.contains(w));
        }
    }
}

TEST_CASE("extension sums explain the complexity increments") {
    std::mt19937 gen(2718);
    for (int k = 0; k < 60; ++k) {
        const std::string s = random_word(gen, 10, 80, 2 + static_cast<int>(gen() % 2));
        const FactorIndex idx = FactorIndex::build(Word::parse(s), 6);
        for (std::size_t n = 1; n <= 6; ++n) {
            long long sum_right = 0, sum_left = 0;
            for (const std::string& f : idx.factors(n)) {
                sum_right += static_cast<long long>(idx.extensions(f, Side::right).size()) - 1;
                sum_left += static_cast<long long>(idx.extensions(f, Side::left).size()) - 1;
            }
            const long long diff = static_cast<long long>(idx.factor_complexity(n + 1)) -
                                   static_cast<long long>(idx.factor_complexity(n));
            CHECK(sum_right == diff);
            CHECK(sum_left == diff);
        }
    }
}

TEST_CASE("boundary factors are flagged") {
    const FactorIndex abc = FactorIndex::build(Word::parse("abc"), 1);
    CHECK(abc.suffix_factor(1) == "c");
    CHECK(abc.suffix_factor_unioccurrent(1));
    CHECK(abc.prefix_factor_unioccurrent(1));

    const FactorIndex abca = FactorIndex::build(Word::parse("abca"), 1);
    CHECK_FALSE(abca.prefix_factor_unioccurrent(1));
    CHECK(abca.suffix_factor(1) == "a");
    CHECK_FALSE(abca.suffix_factor_unioccurrent(1));
}

TEST_CASE("defect bounds the oddity count on random words") {
    std::mt19937 gen(112);
    for (int k = 0; k < 300; ++k) {
        const std::string s = random_word(gen, 2, 14, 3);
        const FactorIndex idx = FactorIndex::build(Word::parse(s), s.size() - 1);
        const long long d = PalIndex::build(Word::parse(s)).defect();
        CAPTURE(s);
        REQUIRE(d >= static_cast<long long>(idx.oddities(s.size() - 1).size()));
    }
}

TEST_CASE("complexity CSV") {
    std::ostringstream out;
    FactorIndex::build(Word::parse("ababa"), 2).write_complexity_csv(out);
    CHECK(out.str() ==
          "n,C,left_special,right_special,reversal_closed\n"
          "0,1,1,1,1\n"
          "1,2,0,0,1\n"
          "2,2,0,0,1\n");
}

TEST_CASE("oddities JSON records") {
    const FactorIndex tm = FactorIndex::build(WordSource::builtin("thue-morse").prefix(64), 8);
    const auto odd = tm.oddities(8);
    REQUIRE_FALSE(odd.empty());
    const std::string json = oddities_to_json(odd);
    CHECK(json.find("\"v\"") != std::string::npos);
    CHECK(json.find("\"v_reversed\"") != std::string::npos);
    CHECK(json.find("\"witness\"") != std::string::npos);
}
