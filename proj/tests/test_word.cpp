#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "paldef/word.hpp"
#include "paldef/word_source.hpp"

using namespace paldef;

TEST_CASE("reverse") {
    CHECK(reverse(Word::parse("")).text() == "");
    CHECK(reverse(Word::parse("ab")).text() == "ba");
    CHECK(reverse(Word::parse("abca")).text() == "acba");
}

TEST_CASE("reverse is an involution and preserves length and letters") {
    std::mt19937 gen(7);
    for (int k = 0; k < 200; ++k) {
        std::string s;
        const std::size_t n = gen() % 24;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<char>('a' + gen() % 3);
        const Word w = Word::parse(s);
        const Word r = reverse(w);
        CHECK(r.size() == w.size());
        CHECK(reverse(r) == w);
        std::string a = s, b = r.text();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("palindrome predicate") {
    CHECK(is_palindrome(Word::parse("")));
    CHECK(is_palindrome(Word::parse("aba")));
    CHECK_FALSE(is_palindrome(Word::parse("ab")));
}

TEST_CASE("primitive roots") {
    CHECK(primitive_root_length("abab") == 2);
    CHECK(primitive_root_length("aaa") == 1);
    CHECK(primitive_root_length("abc") == 3);
    CHECK(is_primitive("ab"));
    CHECK_FALSE(is_primitive("abab"));
    CHECK_FALSE(is_primitive(""));
}

TEST_CASE("alphabet") {
    CHECK_THROWS_AS(Alphabet("aba"), std::invalid_argument);
    const Alphabet a = Alphabet::from_text("banana");
    CHECK(a.glyphs() == "abn");
    CHECK(a.index_of('n') == 2);
    CHECK_FALSE(a.index_of('z').has_value());
    CHECK_THROWS_AS(Word::parse("abz", Alphabet("ab")), std::invalid_argument);
}

TEST_CASE("generated prefixes match the defining rules") {
    CHECK(WordSource::periodic(Word::parse("ab")).prefix(5).text() == "ababa");
    CHECK(WordSource::builtin("rote").prefix(9).text() == "001001111");
    CHECK(WordSource::builtin("ab-omega").prefix(4).text() == "abbb");
    CHECK(WordSource::builtin("ab-omega").prefix(6).text() == "abbbbb");
    CHECK(WordSource::builtin("ternary-oddity").prefix(4).text() == "abca");
    CHECK(WordSource::builtin("ternary-oddity").prefix(12).text() == "abcabbccabca");
    CHECK(WordSource::builtin("fibonacci").prefix(8).text() == "abaababa");
    CHECK(WordSource::builtin("thue-morse").prefix(8).text() == "abbabaab");
    CHECK(WordSource::builtin("fibonacci").prefix(0).text() == "");
}

TEST_CASE("unknown builtin") {
    CHECK_THROWS_AS(WordSource::builtin("tribonacci"), ConfigError);
}

TEST_CASE("explicit word cannot outgrow itself") {
    const WordSource src = WordSource::explicit_word(Word::parse("abca"));
    CHECK(src.prefix(4).text() == "abca");
    CHECK(src.prefix(2).text() == "ab");
    CHECK_THROWS_AS(src.prefix(5), GenerationError);
}

TEST_CASE("prefixes are monotone") {
    for (const std::string& name : WordSource::builtin_names()) {
        const WordSource src = WordSource::builtin(name);
        const Word longer = src.prefix(400);
        for (std::size_t L : {0, 1, 2, 17, 399, 400})
            CHECK(longer.text().substr(0, L) == src.prefix(L).text());
    }
}

TEST_CASE("fixed points are stable under their morphism") {
    const std::map<std::string, Morphism> rules = {
        {"fibonacci", Morphism(Alphabet("ab"), {{'a', "ab"}, {'b', "a"}})},
        {"thue-morse", Morphism(Alphabet("ab"), {{'a', "ab"}, {'b', "ba"}})},
        {"rote", Morphism(Alphabet("01"), {{'0', "001"}, {'1', "111"}})},
    };
    for (const auto& [name, m] : rules) {
        const std::string p = WordSource::builtin(name).prefix(300).text();
        CHECK(m.apply(p).substr(0, p.size()) == p);
    }
}

TEST_CASE("morphism validation") {
    CHECK_THROWS_AS(Morphism(Alphabet("ab"), {{'a', "ab"}}), ConfigError);
    CHECK_THROWS_AS(Morphism(Alphabet("ab"), {{'a', "ax"}, {'b', "b"}}), ConfigError);
    CHECK_THROWS_AS(Morphism(Alphabet("ab"), {{'a', ""}, {'b', "b"}}), ConfigError);
    const Morphism m(Alphabet("ab"), {{'a', "ba"}, {'b', "a"}});
    CHECK_FALSE(m.prolongable_on('a'));
    CHECK_THROWS_AS(WordSource::morphism_fixed_point(m, 'a'), ConfigError);
}

TEST_CASE("config documents") {
    CHECK(WordSource::from_config_text(R"({"kind":"explicit","word":"abca"})").prefix(4).text() ==
          "abca");
    CHECK(WordSource::from_config_text(R"({"kind":"periodic","period":"ab"})").prefix(5).text() ==
          "ababa");
    const WordSource rote = WordSource::from_config_text(
        R"({"kind":"morphism-fixed-point","alphabet":"01","images":{"0":"001","1":"111"},"seed":"0"})");
    CHECK(rote.prefix(9).text() == "001001111");
    CHECK(WordSource::from_config_text(R"({"kind":"builtin","name":"fibonacci"})")
              .prefix(8)
              .text() == "abaababa");

    CHECK_THROWS_AS(WordSource::from_config_text("{"), ConfigError);
    CHECK_THROWS_AS(WordSource::from_config_text(R"({"kind":"explicit"})"), ConfigError);
    CHECK_THROWS_AS(WordSource::from_config_text(R"({"kind":"spiral"})"), ConfigError);
    CHECK_THROWS_AS(WordSource::from_config_text(R"({"kind":"periodic","period":""})"),
                    ConfigError);
    CHECK_THROWS_AS(
        WordSource::from_config_text(
            R"({"kind":"morphism","alphabet":"ab","images":{"a":"ab"},"seed":"a"})"),
        ConfigError);
}
