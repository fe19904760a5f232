#include <catch2/catch_amalgamated.hpp>

#include <itlab/address_space.hpp>

using namespace itlab;

namespace {
MapSystem<Rat> sym() { return {Rat(3, 5), Rat(3, 5), Rat(1, 2)}; }
MapSystem<Rat> osym() { return {Rat(7, 10), Rat(11, 20), Rat(3, 5)}; }

std::vector<std::size_t> sizes(const MapSystem<Rat>& s, int kmax) {
    std::vector<std::size_t> out;
    for (int k = 1; k <= kmax; ++k)
        out.push_back(omega_approx(s, k, PrefixMode::closure).words.size());
    return out;
}
} // namespace

TEST_CASE("critical itineraries at the symmetric parameter") {
    const auto crit = critical_itineraries(sym(), 16);
    CHECK(crit.alpha.word == Word("1110010101011100"));
    CHECK(crit.beta.word == star(crit.alpha.word)); // a = b, rho = 1/2
    CHECK(crit.tau_rho == prepend(0, crit.alpha.word));
    CHECK(crit.tau_plus_rho == prepend(1, crit.beta.word));
    CHECK(crit.reliable() == 16);
    CHECK_THROWS_AS(critical_itineraries(sym(), 1), config_error);
}

TEST_CASE("critical words start with the defining digits on any system") {
    for (const auto& s : {sym(), osym()}) {
        const auto crit = critical_itineraries(s, 12);
        CHECK(crit.alpha.word.digit(0) == 1);
        CHECK(crit.beta.word.digit(0) == 0);
        CHECK(lex_compare(crit.beta.word, crit.alpha.word) == Ordering::less);
    }
}

TEST_CASE("refinement grows the documented prefix counts") {
    CHECK(sizes(sym(), 12) == std::vector<std::size_t>{2, 4, 8, 16, 30, 54, 96, 166,
                                                       284, 482, 812, 1362});
    CHECK(sizes(osym(), 12) == std::vector<std::size_t>{2, 4, 8, 15, 27, 46, 77, 127,
                                                        207, 335, 541, 870});
}

TEST_CASE("refinement steps nest and stay within doubling") {
    const auto s = sym();
    const auto crit = critical_itineraries(s, 10);
    PrefixSet P{0, PrefixMode::closure, {Word("")}};
    for (int k = 0; k < 10; ++k) {
        const PrefixSet Q = refine(P, crit);
        CHECK(Q.depth == k + 1);
        CHECK(Q.words.size() <= 2 * std::max<std::size_t>(P.words.size(), 1));
        CHECK(std::is_sorted(Q.words.begin(), Q.words.end()));
        // every refined word extends a kept word by one leading digit
        for (const Word& w : Q.words)
            CHECK(std::binary_search(P.words.begin(), P.words.end(), shift(w)));
        P = Q;
    }
    // exhausted reliability refuses to refine further
    CHECK_THROWS_AS(refine(P, crit), solve_error);
}

TEST_CASE("admissibility matches the refinement filter") {
    const auto s = sym();
    const auto crit = critical_itineraries(s, 11);
    for (int k = 1; k <= 10; ++k) {
        const PrefixSet P = omega_approx(s, k, PrefixMode::closure);
        std::vector<Word> byfilter;
        for (int v = 0; v < (1 << k); ++v) {
            std::string bits;
            for (int i = k - 1; i >= 0; --i)
                bits += static_cast<char>('0' + ((v >> i) & 1));
            const Word w(bits);
            if (is_admissible(w, crit)) byfilter.push_back(w);
        }
        CHECK(byfilter == P.words);
    }
}

TEST_CASE("specific admissibility verdicts") {
    const auto crit = critical_itineraries(sym(), 8);
    CHECK(is_admissible(Word("0100"), crit));
    CHECK(is_admissible(Word("0000"), crit));
    CHECK(is_admissible(Word("1111"), crit));
    CHECK(is_admissible(Word("01110"), crit));
    CHECK_FALSE(is_admissible(Word("01111"), crit)); // exceeds tau(rho) from digit 0
    CHECK_FALSE(is_admissible(Word("10000"), crit)); // drops below tau+(rho)
    CHECK_THROWS_AS(is_admissible(Word("0101010101"), critical_itineraries(sym(), 4)),
                    solve_error);
}

TEST_CASE("the three closure conventions coincide at finite depth") {
    const auto s = osym();
    const PrefixSet a = omega_approx(s, 9, PrefixMode::omega);
    const PrefixSet b = omega_approx(s, 9, PrefixMode::omega_plus);
    const PrefixSet c = omega_approx(s, 9, PrefixMode::closure);
    CHECK(a.words == c.words);
    CHECK(b.words == c.words);
    CHECK(a.mode == PrefixMode::omega);
    CHECK(b.mode == PrefixMode::omega_plus);
}

TEST_CASE("discontinuity sets list preimages of rho with addresses") {
    const auto s = sym();
    const auto d1 = discontinuities(s, 1);
    REQUIRE(d1.points.size() == 3);
    CHECK(d1.points[0] == 0);
    CHECK(d1.points[1] == Rat(1, 2));
    CHECK(d1.points[2] == 1);
    REQUIRE(d1.interval_addresses.size() == 2);
    CHECK(d1.interval_addresses[0] == Word("0"));
    CHECK(d1.interval_addresses[1] == Word("1"));

    const auto d2 = discontinuities(s, 2);
    REQUIRE(d2.points.size() == 5);
    CHECK(d2.points[1] == Rat(3, 10));
    CHECK(d2.points[2] == Rat(1, 2));
    CHECK(d2.points[3] == Rat(7, 10));
    REQUIRE(d2.interval_addresses.size() == 4);
    CHECK(d2.interval_addresses[0] == Word("00"));
    CHECK(d2.interval_addresses[3] == Word("11"));

    CHECK_THROWS_AS(discontinuities(s, 0), config_error);
}

TEST_CASE("geometric addresses reproduce the refined prefix set") {
    for (const auto& s : {sym(), osym()}) {
        for (int k = 1; k <= 8; ++k) {
            const auto d = discontinuities(s, k);
            const auto P = omega_approx(s, k, PrefixMode::closure);
            CHECK(d.interval_addresses == P.words);
            CHECK(d.points.size() == P.words.size() + 1);
        }
    }
}

TEST_CASE("floating discontinuities stay consistent at depth 10") {
    const MapSystem<double> f(0.6, 0.6, 0.5);
    const auto d = discontinuities(f, 10);
    const auto P = omega_approx(f, 10, PrefixMode::closure);
    CHECK(d.interval_addresses == P.words); // strict increase checked internally
}
