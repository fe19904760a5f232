#include <catch2/catch_amalgamated.hpp>

#include <itlab/word.hpp>

using namespace itlab;

TEST_CASE("lex_compare decides on the first differing digit") {
    CHECK(lex_compare(Word("011"), Word("100")) == Ordering::less);
    CHECK(lex_compare(Word("100"), Word("011")) == Ordering::greater);
    CHECK(lex_compare(Word("0111"), Word("0110")) == Ordering::greater);
    CHECK(lex_compare(Word("10"), Word("101")) == Ordering::equal_prefix);
    CHECK(lex_compare(Word("101"), Word("10")) == Ordering::equal_prefix);
    CHECK(lex_compare(Word(""), Word("0")) == Ordering::equal_prefix);
    CHECK(lex_compare(Word("1010"), Word("1010")) == Ordering::equal_prefix);
    CHECK(leq(Ordering::less));
    CHECK(leq(Ordering::equal_prefix));
    CHECK_FALSE(leq(Ordering::greater));
    CHECK(geq(Ordering::greater));
    CHECK(geq(Ordering::equal_prefix));
    CHECK_FALSE(geq(Ordering::less));
}

TEST_CASE("word_metric is 2^-k at the first disagreement") {
    CHECK(word_metric(Word("010"), Word("011")) == 0.25);
    CHECK(word_metric(Word("1"), Word("0")) == 1.0);
    CHECK(word_metric(Word("1010"), Word("1010")) == 0.0);
    CHECK(word_metric(Word("10"), Word("101")) == 0.0); // prefix: undecided
    CHECK(word_metric(Word("00000001"), Word("00000000")) == 1.0 / 128.0);
}

TEST_CASE("star flips digits, is an involution, reverses order") {
    CHECK(star(Word("0110")) == Word("1001"));
    CHECK(star(Word("")) == Word(""));
    CHECK(star(star(Word("11010"))) == Word("11010"));

    // exhaustive order reversal on all pairs of length-4 words
    for (int u = 0; u < 16; ++u) {
        for (int v = 0; v < 16; ++v) {
            std::string us, vs;
            for (int i = 3; i >= 0; --i) {
                us += static_cast<char>('0' + ((u >> i) & 1));
                vs += static_cast<char>('0' + ((v >> i) & 1));
            }
            const Word uw(us), vw(vs);
            const Ordering o = lex_compare(uw, vw);
            const Ordering r = lex_compare(star(vw), star(uw));
            CHECK(o == r);
        }
    }
}

TEST_CASE("shift and prepend are inverse on the leading digit") {
    CHECK(shift(Word("100")) == Word("00"));
    CHECK(prepend(1, Word("00")) == Word("100"));
    CHECK(shift(prepend(0, Word("1011"))) == Word("1011"));
    CHECK(prepend(0, Word("")) == Word("0"));
    CHECK_THROWS_AS(shift(Word("")), config_error);
    CHECK_THROWS_AS(prepend(2, Word("0")), config_error);
}

TEST_CASE("words validate their digits and expose prefixes") {
    CHECK_THROWS_AS(Word("012"), config_error);
    CHECK_THROWS_AS(Word("ab"), config_error);
    const Word w("110010");
    CHECK(w.size() == 6);
    CHECK(w.digit(0) == 1);
    CHECK(w.digit(5) == 0);
    CHECK(w.prefix(3) == Word("110"));
    CHECK(w.prefix(99) == w);
    CHECK(w.prefix(0) == Word(""));
}
