#pragma once

#include <cstdio>
#include <ostream>
#include <utility>
#include <vector>

#include "address_space.hpp"
#include "projection.hpp"
#include "relation.hpp"

namespace itlab {

// One row per complementary interval: its level, position, left endpoint
// and depth-level address.
template <class S>
void csv_discontinuities(std::ostream& os, const DiscontinuitySet<S>& d) {
    os << "level,index,point,address\n";
    for (std::size_t i = 0; i < d.interval_addresses.size(); ++i)
        os << d.level << ',' << i << ',' << double_string(to_double(d.points[i]))
           << ',' << d.interval_addresses[i].str() << '\n';
}

inline void csv_homeo(std::ostream& os,
                      const std::vector<std::pair<double, double>>& rows) {
    os << "x,h\n";
    for (const auto& [x, h] : rows)
        os << double_string(x) << ',' << double_string(h) << '\n';
}

template <class S>
void csv_word_intervals(std::ostream& os, const std::vector<WordInterval<S>>& cells) {
    os << "word,lo,hi\n";
    for (const auto& c : cells)
        os << c.word.str() << ',' << double_string(to_double(c.lo)) << ','
           << double_string(to_double(c.hi)) << '\n';
}

// Dyadic cells of the attractor nodes of an embedded relation.
inline void csv_attractor(std::ostream& os, const FiniteRelation& r,
                          const NodeSet& attractor) {
    if (r.intervals.empty()) throw config_error("relation carries no intervals");
    os << "lo,hi\n";
    for (int v : attractor) {
        const auto& [lo, hi] = r.intervals[static_cast<std::size_t>(v)];
        os << double_string(lo) << ',' << double_string(hi) << '\n';
    }
}

// One rect per word, laid out by the dyadic coding.
inline void svg_prefix_set(std::ostream& os, const PrefixSet& P, int width = 640,
                           int height = 48) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
       << "\" height=\"" << height << "\">\n";
    char buf[160];
    for (const Word& w : P.words) {
        const auto cell = coding_pi<double>(w);
        std::snprintf(buf, sizeof buf,
                      "<rect x=\"%.4f\" y=\"4\" width=\"%.4f\" height=\"%d\" "
                      "fill=\"#1b6ca8\"/>\n",
                      cell.lo * width, (cell.hi - cell.lo) * width, height - 8);
        os << buf;
    }
    os << "</svg>\n";
}

inline void svg_homeo(std::ostream& os,
                      const std::vector<std::pair<double, double>>& rows,
                      int size = 512) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
       << "\" height=\"" << size << "\">\n<polyline fill=\"none\" "
       << "stroke=\"#1b6ca8\" stroke-width=\"1\" points=\"";
    char buf[64];
    for (const auto& [x, h] : rows) {
        std::snprintf(buf, sizeof buf, "%.3f,%.3f ", x * size, (1.0 - h) * size);
        os << buf;
    }
    os << "\"/>\n</svg>\n";
}

} // namespace itlab
