#include <catch2/catch_amalgamated.hpp>

#include <itlab/symmetry.hpp>

using namespace itlab;

namespace {
MapSystem<Rat> sym() { return {Rat(3, 5), Rat(3, 5), Rat(1, 2)}; }
MapSystem<Rat> osym() { return {Rat(7, 10), Rat(11, 20), Rat(3, 5)}; }
} // namespace

TEST_CASE("symmetry defect signs on both sides of the root") {
    const auto s = sym();
    const auto mid = symmetry_defect(s, Rat(1, 2), 64);
    CHECK(mid.ordering == DefectOrdering::equal_to_depth);
    CHECK(mid.depth_used == 64);
    CHECK_FALSE(mid.decided_at.has_value());

    const auto lo = symmetry_defect(s, Rat(9, 20), 64);
    CHECK(lo.ordering == DefectOrdering::tau_less);
    REQUIRE(lo.decided_at.has_value());
    CHECK(*lo.decided_at >= 1);

    const auto hi = symmetry_defect(s, Rat(11, 20), 64);
    CHECK(hi.ordering == DefectOrdering::tau_greater);

    // the asymmetric family roots near 0.618...
    CHECK(symmetry_defect(osym(), Rat(1, 2), 64).ordering == DefectOrdering::tau_less);
    CHECK(symmetry_defect(osym(), Rat(13, 20), 64).ordering ==
          DefectOrdering::tau_greater);
}

TEST_CASE("defect is monotone along a coarse grid") {
    const auto s = osym();
    bool seen_greater = false;
    for (int i = 0; i <= 20; ++i) {
        const Rat rho = Rat(9, 20) + Rat(i, 20) * Rat(1, 4); // spans [0.45, 0.7]
        const auto d = symmetry_defect(s, rho, 48);
        if (d.ordering == DefectOrdering::tau_greater) seen_greater = true;
        if (seen_greater) CHECK(d.ordering != DefectOrdering::tau_less);
    }
    CHECK(seen_greater);
}

TEST_CASE("solve_symmetric finds the midpoint root of equal branches") {
    const auto res = solve_symmetric(sym(), 1e-10);
    CHECK(abs_val(Rat(res.rho_star - Rat(1, 2))) <= Rat(1e-10));
    CHECK(res.bracket_lo <= Rat(1, 2));
    CHECK(res.bracket_hi >= Rat(1, 2));
    CHECK(res.bracket_hi - res.bracket_lo <= Rat(1e-10));
    CHECK(res.certificate.depth_used >= 8);

    // bit-for-bit deterministic
    const auto res2 = solve_symmetric(sym(), 1e-10);
    CHECK(res2.rho_star == res.rho_star);
    CHECK(res2.iterations == res.iterations);
}

TEST_CASE("solve_symmetric pins the asymmetric root") {
    const auto res = solve_symmetric(osym(), 1e-9);
    const Rat target = parse_rational("0.618348313180530");
    CHECK(abs_val(Rat(res.rho_star - target)) <= Rat(1e-9));
    CHECK(res.iterations <= 200);
}

TEST_CASE("floating solve stays close despite rounding") {
    const MapSystem<double> f(0.6, 0.6, 0.5);
    const auto res = solve_symmetric(f, 1e-9);
    CHECK(std::abs(res.rho_star - 0.5) <= 2e-9);
}

TEST_CASE("reliability collapse surfaces as solve_error") {
    // at rho = 1-b the second critical iterate lands within 1e-12 of rho
    const MapSystem<double> f(0.6, 0.6666666666656667, 0.5);
    CHECK_THROWS_AS(solve_symmetric(f, 1e-9), solve_error);
}

TEST_CASE("parameter validation of the solver") {
    CHECK_THROWS_AS(solve_symmetric(sym(), 0.0), config_error);
    CHECK_THROWS_AS(solve_symmetric(sym(), 1e-9, 1), config_error);
    CHECK_THROWS_AS(symmetry_defect(sym(), Rat(1, 2), 1), config_error);
}

TEST_CASE("critical itineraries vary one-sidedly continuously in rho") {
    const auto s = sym();
    const int n = 40;
    // tau(rho) as rho increases to 1/2 from the left
    const Word at = critical_itineraries(s, n).tau_rho;
    double prev = 1.0;
    for (int j = 2; j <= 6; ++j) {
        const Rat rho = Rat(1, 2) - Rat(1, static_cast<long>(std::pow(10.0, j)));
        const Word w = critical_itineraries(s.with_rho(rho), n).tau_rho;
        const double m = word_metric(w, at);
        CHECK(m <= prev);
        prev = m;
    }
    CHECK(prev <= std::pow(2.0, -10));

    // tau+(rho) as rho decreases to 1/2 from the right
    const Word atp = critical_itineraries(s, n).tau_plus_rho;
    prev = 1.0;
    for (int j = 2; j <= 6; ++j) {
        const Rat rho = Rat(1, 2) + Rat(1, static_cast<long>(std::pow(10.0, j)));
        const Word w = critical_itineraries(s.with_rho(rho), n).tau_plus_rho;
        const double m = word_metric(w, atp);
        CHECK(m <= prev);
        prev = m;
    }
    CHECK(prev <= std::pow(2.0, -10));
}

TEST_CASE("verify_symmetry separates the root from nearby parameters") {
    const auto ok = verify_symmetry(sym(), Rat(1, 2), 10);
    CHECK(ok.alpha_matches_star_beta);
    CHECK(ok.prefix_set_star_invariant);
    CHECK_FALSE(ok.first_mismatch.has_value());

    const auto off = verify_symmetry(sym(), Rat(12, 25), 10);
    CHECK_FALSE(off.alpha_matches_star_beta);
    REQUIRE(off.first_mismatch.has_value());

    const auto deep = verify_symmetry(osym(), solve_symmetric(osym(), 1e-9).rho_star, 12);
    CHECK(deep.alpha_matches_star_beta);
    CHECK(deep.prefix_set_star_invariant);
}
