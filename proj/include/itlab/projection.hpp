#pragma once

#include <cmath>
#include <optional>

#include "address_space.hpp"

namespace itlab {

template <class S>
inline S scalar_from(double x) {
    if constexpr (std::is_same_v<S, Rat>) return Rat(x); // exact binary value
    else return x;
}

template <class S>
struct WordInterval {
    Word word;
    S lo, hi;
};

// Geometric realization of a word: the supremum of the points whose
// W+-itinerary stays at or below w, i.e. the right endpoint of the cell
// of w when w is realized.  Bisection keeps tau+(lo) <=' w and
// w <' tau(hi); when a probe separates both (possible only at a
// discontinuity point with w falling in the jump) that point itself is
// the answer.
template <class S>
S pi_hat(const MapSystem<S>& sys, const Word& w, double tol = 1e-12) {
    if (!(tol > 0)) throw config_error("tol must be positive");
    const int n = static_cast<int>(w.size());
    if (n == 0) return S(1);
    const S tolS = scalar_from<S>(tol);
    S lo(0), hi(1);
    while (hi - lo > tolS) {
        S m = (lo + hi) / 2;
        if (leq(lex_compare(itinerary(sys, m, n, Variant::right_closed).word, w)))
            lo = std::move(m);
        else if (leq(lex_compare(w, itinerary(sys, m, n, Variant::left_closed).word)))
            hi = std::move(m);
        else
            return m;
    }
    // the supremum lies in [lo, hi]; the hi side is exact when the cell
    // closes at an endpoint the loop never moved
    return hi;
}

// The dyadic interval [0.w, 0.w + 2^-|w|] of the binary-expansion coding.
template <class S>
WordInterval<S> coding_pi(const Word& w) {
    const int k = static_cast<int>(w.size());
    if constexpr (std::is_same_v<S, Rat>) {
        BigInt v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) v = v * 2 + w.digit(i);
        BigInt den = BigInt(1) << k;
        return {w, Rat(v, den), Rat(v + 1, den)};
    } else {
        if (k > 52) throw config_error("dyadic coding exceeds double precision");
        double v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) v = 2 * v + w.digit(i);
        return {w, std::ldexp(v, -k), std::ldexp(v + 1, -k)};
    }
}

// The geometric cell of w, or nullopt when no point realizes w.
template <class S>
std::optional<WordInterval<S>> word_interval(const MapSystem<S>& sys, const Word& w,
                                             double tol = 1e-12) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return WordInterval<S>{w, S(0), S(1)};
    S right = pi_hat(sys, w, tol);

    const S tolS = scalar_from<S>(tol);
    S lo(0), hi(1);
    while (hi - lo > tolS) {
        S m = (lo + hi) / 2;
        if (lex_compare(itinerary(sys, m, n, Variant::left_closed).word, w) ==
            Ordering::less)
            lo = std::move(m);
        else
            hi = std::move(m);
    }
    S left = (lo + hi) / 2;
    if (left > right) left = right;

    const S mid = (left + right) / 2;
    if (itinerary(sys, mid, n, Variant::left_closed).word != w &&
        itinerary(sys, mid, n, Variant::right_closed).word != w)
        return std::nullopt;
    return WordInterval<S>{w, std::move(left), std::move(right)};
}

// The induced involution: read the depth-n itinerary of x, flip every
// digit, and realize the flipped word.  At the symmetric parameter this
// is a decreasing homeomorphism conjugating W to W+; the pointwise error
// budget is d^-n for the re-reading plus tol for the realization.
template <class S>
S homeo(const MapSystem<S>& sys, const S& x, int n = 48, double tol = 1e-12) {
    const ItineraryResult it = itinerary(sys, S(x), n, Variant::left_closed);
    return pi_hat(sys, star(it.word), tol);
}

} // namespace itlab
