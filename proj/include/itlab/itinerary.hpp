#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "map_system.hpp"
#include "word.hpp"

namespace itlab {

struct ItineraryResult {
    Word word;
    // Digits before this index are certain; in exact arithmetic this is
    // always the requested length.
    int reliable_len = 0;
    // First step whose iterate is within eps_amb of rho (floating) or
    // exactly rho (exact arithmetic).
    std::optional<int> hit_critical;
};

// The first n digits of the symbolic itinerary of x: digit k tells which
// branch the k-th iterate uses.  left_closed follows W, right_closed W+.
// Floating mode truncates certainty at the first near-critical iterate but
// keeps producing digits; length is capped at 64 (beyond that the orbit of
// a double carries no further information).
template <class S>
ItineraryResult itinerary(const MapSystem<S>& sys, S x, int n, Variant variant,
                          double eps_amb = 1e-12) {
    if (n < 1) throw config_error("itinerary length must be >= 1");
    if (!(x >= 0 && x <= 1)) throw config_error("point outside [0,1]");
    if constexpr (std::is_same_v<S, double>) n = std::min(n, 64);

    ItineraryResult res;
    res.reliable_len = n;
    std::string bits;
    bits.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        if constexpr (std::is_same_v<S, Rat>) {
            if (!res.hit_critical && x == sys.rho()) res.hit_critical = k;
        } else {
            if (!res.hit_critical && std::abs(x - sys.rho()) < eps_amb) {
                res.hit_critical = k;
                res.reliable_len = k;
            }
        }
        auto step = sys.eval_W(x, variant);
        bits.push_back(static_cast<char>('0' + step.digit));
        x = std::move(step.value);
    }
    res.word = Word(std::move(bits));
    return res;
}

} // namespace itlab
