#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "itinerary.hpp"

namespace itlab {

// The pair of itineraries launched at the two critical values:
// alpha = tau(W0(rho)) starting with 1, beta = tau+(W1(rho)) starting
// with 0.  tau(rho) = 0 alpha and tau+(rho) = 1 beta are the comparison
// words that cut the itinerary space.
struct CriticalPair {
    ItineraryResult alpha;
    ItineraryResult beta;
    Word tau_rho;
    Word tau_plus_rho;

    int reliable() const { return std::min(alpha.reliable_len, beta.reliable_len); }
    int depth() const { return static_cast<int>(alpha.word.size()); }
};

template <class S>
CriticalPair critical_itineraries(const MapSystem<S>& sys, int n, double eps_amb = 1e-12) {
    if (n < 2) throw config_error("critical itineraries need n >= 2");
    ItineraryResult al =
        itinerary(sys, sys.branch_value(0, sys.rho()), n, Variant::left_closed, eps_amb);
    ItineraryResult be =
        itinerary(sys, sys.branch_value(1, sys.rho()), n, Variant::right_closed, eps_amb);
    if (al.word.digit(0) != 1 || be.word.digit(0) != 0 ||
        lex_compare(be.word, al.word) != Ordering::less)
        throw solve_error("critical pair invariant violated (degenerate system?)");
    return {al, be, prepend(0, al.word), prepend(1, be.word)};
}

// Which closure convention a prefix set approximates.  At any finite depth
// the three keep-rules coincide (boundary words are kept in all of them);
// the tag records intent for downstream consumers.
enum class PrefixMode { omega, omega_plus, closure };

struct PrefixSet {
    int depth = 0;
    PrefixMode mode = PrefixMode::closure;
    std::vector<Word> words; // sorted, distinct, all of length `depth`
};

// One refinement step: a depth-(k+1) word survives iff its tail obeys the
// critical cut, 0w needs w <=' alpha|k and 1w needs w >=' beta|k.
inline PrefixSet refine(const PrefixSet& P, const CriticalPair& crit) {
    const int k = P.depth;
    if (crit.depth() < k + 1 || crit.reliable() < k + 1)
        throw solve_error("critical itineraries too shallow or unreliable to refine");
    const Word ak = crit.alpha.word.prefix(static_cast<std::size_t>(k));
    const Word bk = crit.beta.word.prefix(static_cast<std::size_t>(k));

    PrefixSet out;
    out.depth = k + 1;
    out.mode = P.mode;
    out.words.reserve(2 * P.words.size());
    for (const Word& w : P.words)
        if (leq(lex_compare(w, ak))) out.words.push_back(prepend(0, w));
    for (const Word& w : P.words)
        if (geq(lex_compare(w, bk))) out.words.push_back(prepend(1, w));
    return out; // both blocks inherit sortedness; 0... precedes 1...
}

// Depth-k outer approximation of the itinerary space.
template <class S>
PrefixSet omega_approx(const MapSystem<S>& sys, int k, PrefixMode mode,
                       double eps_amb = 1e-12) {
    if (k < 1) throw config_error("depth must be >= 1");
    const CriticalPair crit = critical_itineraries(sys, k + 1, eps_amb);
    PrefixSet P{0, mode, {Word("")}};
    for (int i = 0; i < k; ++i) P = refine(P, crit);
    return P;
}

// Shift-admissibility: every suffix starting with 0 must sit at or below
// tau(rho), every suffix starting with 1 at or above tau+(rho).
inline bool is_admissible(const Word& w, const CriticalPair& crit) {
    if (crit.reliable() + 1 < static_cast<int>(w.size()))
        throw solve_error("critical itineraries too unreliable for admissibility");
    for (std::size_t j = 0; j < w.size(); ++j) {
        const Word& bound = (w.digit(j) == 0) ? crit.tau_rho : crit.tau_plus_rho;
        Ordering o = Ordering::equal_prefix;
        for (std::size_t i = 0; j + i < w.size() && i < bound.size(); ++i) {
            if (w.digit(j + i) != bound.digit(i)) {
                o = w.digit(j + i) < bound.digit(i) ? Ordering::less : Ordering::greater;
                break;
            }
        }
        if (w.digit(j) == 0 ? o == Ordering::greater : o == Ordering::less)
            return false;
    }
    return true;
}

// The level-k discontinuity set: 0, 1, and all preimages of rho of order
// < k, together with the depth-k address of each complementary interval.
template <class S>
struct DiscontinuitySet {
    int level = 0;
    std::vector<S> points;                // ascending, first 0, last 1
    std::vector<Word> interval_addresses; // one per consecutive gap
    std::vector<std::string> warnings;
};

template <class S>
DiscontinuitySet<S> discontinuities(const MapSystem<S>& sys, int k,
                                    double eps_amb = 1e-12) {
    if (k < 1) throw config_error("depth must be >= 1");
    DiscontinuitySet<S> out;
    out.level = k;

    std::vector<S> pts{S(0), S(1), sys.rho()};
    std::vector<S> level{sys.rho()};
    for (int j = 2; j <= k; ++j) {
        std::vector<S> next;
        for (const S& p : level)
            for (S& q : sys.preimages(p)) next.push_back(std::move(q));
        pts.insert(pts.end(), next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(pts.begin(), pts.end());

    if constexpr (std::is_same_v<S, Rat>) {
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        out.points = std::move(pts);
    } else {
        const double close = 10 * std::numeric_limits<double>::epsilon();
        for (double p : pts) {
            if (!out.points.empty()) {
                const double gap = p - out.points.back();
                if (gap < close && gap > 0)
                    out.warnings.push_back("nearly coincident discontinuities at " +
                                           double_string(p));
                if (gap < 1e-10) continue; // merge
            }
            out.points.push_back(p);
        }
    }

    for (std::size_t i = 0; i + 1 < out.points.size(); ++i) {
        const S mid = (out.points[i] + out.points[i + 1]) / 2;
        out.interval_addresses.push_back(
            itinerary(sys, mid, k, Variant::left_closed, eps_amb).word);
        if (i > 0 && lex_compare(out.interval_addresses[i - 1],
                                 out.interval_addresses[i]) != Ordering::less)
            throw solve_error("interval addresses failed to increase strictly");
    }
    return out;
}

} // namespace itlab
