#pragma once

#include <algorithm>
#include <optional>

#include "address_space.hpp"
#include "projection.hpp"

namespace itlab {

enum class DefectOrdering { tau_less, equal_to_depth, tau_greater };

struct SymmetryDefect {
    DefectOrdering ordering = DefectOrdering::equal_to_depth;
    std::optional<int> decided_at; // digit index where the comparison decided
    int depth_used = 0;            // digits actually compared
};

// Compare tau(rho) with star(tau+(rho)) to depth n at the given rho.  The
// two agree exactly at the symmetric parameter; the sign of the first
// disagreement is monotone in rho, which drives the bisection below.
template <class S>
SymmetryDefect symmetry_defect(const MapSystem<S>& sys, const S& rho, int n,
                               double eps_amb = 1e-12) {
    if (n < 2) throw config_error("defect depth must be >= 2");
    const MapSystem<S> at = sys.with_rho(rho);
    const CriticalPair crit = critical_itineraries(at, n, eps_amb);
    // tau(rho) = 0 alpha, star(tau+(rho)) = 0 star(beta): one certain digit
    // in front of the reliable parts of alpha and beta.
    const int m = std::min(n, 1 + crit.reliable());

    SymmetryDefect d;
    d.depth_used = m;
    for (int j = 1; j < m; ++j) {
        const int left = crit.tau_rho.digit(static_cast<std::size_t>(j));
        const int right = 1 - crit.tau_plus_rho.digit(static_cast<std::size_t>(j));
        if (left != right) {
            d.decided_at = j;
            d.ordering = left < right ? DefectOrdering::tau_less : DefectOrdering::tau_greater;
            return d;
        }
    }
    return d;
}

template <class S>
struct SolveResult {
    S rho_star;
    S bracket_lo, bracket_hi;
    int iterations = 0;
    SymmetryDefect certificate; // defect at the returned point
};

// Monotone bisection for the unique rho in [1-b, a] with vanishing
// symmetry defect.  equal_to_depth probes first deepen the comparison
// (n, 2n, ... up to the cap); a probe still undecided at the cap lies
// within rounding of the root and is folded in by alternating sides,
// which keeps the run deterministic.
template <class S>
SolveResult<S> solve_symmetric(const MapSystem<S>& family, double rho_tol,
                               int n0 = 32, int max_iter = 200) {
    if (!(rho_tol > 0)) throw config_error("rho_tol must be positive");
    if (n0 < 2) throw config_error("initial defect depth must be >= 2");
    const int cap = std::min(4 * n0, std::is_same_v<S, Rat> ? 128 : 52);

    const auto eval = [&](const S& rho) {
        int n = n0;
        SymmetryDefect d = symmetry_defect(family, rho, n);
        while (d.ordering == DefectOrdering::equal_to_depth && n < cap) {
            n = std::min(2 * n, cap);
            d = symmetry_defect(family, rho, n);
        }
        if (d.depth_used < 8)
            throw solve_error("itinerary reliability collapsed below 8 digits");
        return d;
    };

    S lo = 1 - family.b(), hi = family.a();
    const SymmetryDefect dlo = eval(lo), dhi = eval(hi);
    if (dlo.ordering == DefectOrdering::tau_greater ||
        dhi.ordering == DefectOrdering::tau_less)
        throw solve_error("symmetry defect does not bracket on [1-b, a]");

    const S tolS = scalar_from<S>(rho_tol);
    int it = 0;
    while (hi - lo > tolS && it < max_iter) {
        S m = (lo + hi) / 2;
        const SymmetryDefect d = eval(m);
        if (d.ordering == DefectOrdering::tau_less)
            lo = std::move(m);
        else if (d.ordering == DefectOrdering::tau_greater)
            hi = std::move(m);
        else if (it % 2 == 0)
            lo = std::move(m);
        else
            hi = std::move(m);
        ++it;
    }

    SolveResult<S> res{(lo + hi) / 2, lo, hi, it, {}};
    res.certificate = eval(res.rho_star);
    return res;
}

struct SymmetryReport {
    int depth = 0;
    bool alpha_matches_star_beta = false;
    std::optional<int> first_mismatch;
    bool prefix_set_star_invariant = false;
};

// Two independent depth-k symmetry checks at a candidate rho: the critical
// words must be digit flips of each other, and the prefix set must be
// star-invariant as a set.
template <class S>
SymmetryReport verify_symmetry(const MapSystem<S>& sys, const S& rho, int k,
                               double eps_amb = 1e-12) {
    if (k < 2) throw config_error("verification depth must be >= 2");
    const MapSystem<S> at = sys.with_rho(rho);
    const CriticalPair crit = critical_itineraries(at, k, eps_amb);

    SymmetryReport rep;
    rep.depth = k;
    const Word flipped = star(crit.beta.word);
    rep.alpha_matches_star_beta = (crit.alpha.word == flipped);
    if (!rep.alpha_matches_star_beta)
        for (std::size_t i = 0; i < flipped.size(); ++i)
            if (crit.alpha.word.digit(i) != flipped.digit(i)) {
                rep.first_mismatch = static_cast<int>(i);
                break;
            }

    PrefixSet P = omega_approx(at, k, PrefixMode::closure, eps_amb);
    std::vector<Word> starred;
    starred.reserve(P.words.size());
    for (const Word& w : P.words) starred.push_back(star(w));
    std::sort(starred.begin(), starred.end());
    rep.prefix_set_star_invariant = (starred == P.words);
    return rep;
}

} // namespace itlab
