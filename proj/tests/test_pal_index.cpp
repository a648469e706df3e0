#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "paldef/naive.hpp"
#include "paldef/pal_index.hpp"
#include "paldef/word_source.hpp"

using namespace paldef;

namespace {

std::string random_word(std::mt19937& gen, std::size_t max_len, int letters) {
    std::string s;
    const std::size_t n = gen() % (max_len + 1);
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('a' + gen() % letters);
    return s;
}

} // namespace

TEST_CASE("defect profiles of the small examples") {
    const PalIndex abca = PalIndex::build(Word::parse("abca"));
    CHECK(abca.defect_profile() == std::vector<std::uint32_t>{0, 0, 0, 0, 1});
    CHECK(abca.defect() == 1);

    const PalIndex aaa = PalIndex::build(Word::parse("aaa"));
    CHECK(aaa.defect_profile() == std::vector<std::uint32_t>{0, 0, 0, 0});

    const PalIndex empty = PalIndex::build(Word::parse(""));
    CHECK(empty.defect_profile() == std::vector<std::uint32_t>{0});
    CHECK(empty.distinct_palindromes() == 1);

    CHECK(defect(Word::parse("aabbaa")) == 0);
    CHECK(defect(Word::parse("a")) == 0);
    CHECK(defect(Word::parse("z")) == 0);
}

TEST_CASE("palindromic complexity") {
    const PalIndex ab_omega = PalIndex::build(WordSource::builtin("ab-omega").prefix(50));
    CHECK(ab_omega.palindromic_complexity(0) == 1);
    CHECK(ab_omega.palindromic_complexity(1) == 2);
    CHECK(ab_omega.palindromic_complexity(2) == 1); // only bb
    CHECK(ab_omega.palindromic_complexity(51) == 0);

    // level-4 prefix of the ternary block word: blocks reach length 4, so
    // P(n) = 2 realizes only up to n = 4
    const PalIndex u4 = PalIndex::build(WordSource::builtin("ternary-oddity").prefix(68));
    CHECK(u4.palindromic_complexity(1) == 3);
    for (std::size_t n = 2; n <= 4; ++n) CHECK(u4.palindromic_complexity(n) == 2);
    for (std::size_t n = 5; n <= 8; ++n) CHECK(u4.palindromic_complexity(n) == 0);
}

TEST_CASE("longest palindromic suffix") {
    const PalIndex idx = PalIndex::build(Word::parse("abca"));
    CHECK(idx.longest_palindromic_suffix(0).text() == "");
    CHECK(idx.longest_palindromic_suffix(1).text() == "a");
    CHECK(idx.longest_palindromic_suffix(4).text() == "a");
    CHECK(PalIndex::build(Word::parse("abba")).longest_palindromic_suffix(4).text() == "abba");
    CHECK_THROWS_AS(idx.longest_palindromic_suffix(5), std::out_of_range);
}

TEST_CASE("defective positions") {
    CHECK(PalIndex::build(Word::parse("abca")).defective_positions() ==
          std::vector<std::size_t>{4});
    CHECK(PalIndex::build(Word::parse("aaa")).defective_positions().empty());

    const PalIndex tm = PalIndex::build(WordSource::builtin("thue-morse").prefix(64));
    CHECK_FALSE(tm.defective_positions().empty());
    CHECK(tm.defect() == 12);
}

TEST_CASE("index agrees with direct enumeration") {
    // exhaustive binary words to length 12
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::uint64_t x = 0; x < (1ull << n); ++x) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i) s += (x >> i) & 1 ? 'b' : 'a';
            CAPTURE(s);
            REQUIRE(PalIndex::build(Word::parse(s)).defect() == naive::defect(s));
        }
    }
    // random ternary words to length 14
    std::mt19937 gen(1234);
    for (int k = 0; k < 10000; ++k) {
        const std::string s = random_word(gen, 14, 3);
        CAPTURE(s);
        REQUIRE(PalIndex::build(Word::parse(s)).defect() == naive::defect(s));
    }
}

TEST_CASE("profile matches the naive profile and moves by 0 or 1") {
    std::mt19937 gen(99);
    for (int k = 0; k < 120; ++k) {
        const std::string s = random_word(gen, 40, 2 + static_cast<int>(gen() % 2));
        const PalIndex idx = PalIndex::build(Word::parse(s));
        const auto naive_profile = naive::defect_profile(s);
        REQUIRE(idx.defect_profile().size() == naive_profile.size());
        for (std::size_t i = 0; i <= s.size(); ++i)
            REQUIRE(idx.defect_at(i) == naive_profile[i]);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(idx.defect_at(i) <= idx.defect_at(i + 1));
            CHECK(idx.defect_at(i + 1) <= idx.defect_at(i) + 1);
        }
    }
}

TEST_CASE("factors never have larger defect than the word") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for (std::uint64_t x = 0; x < (1ull << n); ++x) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i) s += (x >> i) & 1 ? 'b' : 'a';
            const long long d = PalIndex::build(Word::parse(s)).defect();
            for (std::size_t pos = 0; pos < n; ++pos)
                for (std::size_t len = 1; pos + len <= n; ++len)
                    REQUIRE(PalIndex::build(Word::parse(s.substr(pos, len))).defect() <= d);
        }
    }
}

TEST_CASE("new(i) marks first occurrences of the longest palindromic suffix") {
    std::mt19937 gen(4242);
    for (int k = 0; k < 150; ++k) {
        const std::string s = random_word(gen, 30, 2);
        const PalIndex idx = PalIndex::build(Word::parse(s));
        long long not_new = 0;
        for (std::size_t i = 1; i <= s.size(); ++i) {
            const std::string lps = naive::longest_palindromic_suffix(s.substr(0, i));
            const bool unioccurrent = naive::occurrences(s.substr(0, i), lps).size() == 1;
            CHECK(idx.is_new_palindrome_at(i) == unioccurrent);
            if (!idx.is_new_palindrome_at(i)) ++not_new;
        }
        CHECK(not_new == idx.defect());
    }
}

TEST_CASE("palindromic complexity sums to the distinct palindrome count") {
    std::mt19937 gen(5150);
    for (int k = 0; k < 100; ++k) {
        const std::string s = random_word(gen, 60, 3);
        const PalIndex idx = PalIndex::build(Word::parse(s));
        long long sum = 0;
        for (std::size_t n = 0; n <= s.size(); ++n)
            sum += static_cast<long long>(idx.palindromic_complexity(n));
        CHECK(sum == static_cast<long long>(s.size()) + 1 - idx.defect());
        CHECK(static_cast<long long>(idx.distinct_palindromes()) - 1 + idx.defect() ==
              static_cast<long long>(s.size()));
    }
}

TEST_CASE("defect profile CSV") {
    std::ostringstream out;
    PalIndex::build(Word::parse("abca")).write_defect_csv(out);
    CHECK(out.str() ==
          "i,defect,lps_length,new\n"
          "0,0,0,1\n"
          "1,0,1,1\n"
          "2,0,1,1\n"
          "3,0,1,1\n"
          "4,1,1,0\n");
}
