#pragma once

#include <charconv>
#include <cstdlib>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace itlab {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact parse of "p/q", "-3", "0.55" (decimal digits become an exact
// power-of-ten denominator).  No exponent forms.
inline Rat parse_rational(const std::string& text) {
    const auto bad = [&] { return config_error("not a rational: '" + text + "'"); };
    std::string s = text;
    if (s.empty()) throw bad();

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (p.empty() || q.empty()) throw bad();
        try {
            const BigInt pn(p), qn(q);
            return Rat(pn, qn);
        } catch (const std::exception&) {
            throw bad();
        }
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    BigInt num = 0, den = 1;
    bool any_digit = false, seen_point = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.') {
            if (seen_point) throw bad();
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (seen_point) den *= 10;
            any_digit = true;
        } else {
            throw bad();
        }
    }
    if (!any_digit) throw bad();
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

inline std::string rational_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(double x) { return x; }

// Shortest round-trip decimal form.
inline std::string double_string(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <class S>
inline S parse_real(const std::string& text) {
    if constexpr (std::is_same_v<S, Rat>) {
        return parse_rational(text);
    } else {
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || (end && *end != '\0')) {
            // fall back to exact forms like "1/2"
            return to_double(parse_rational(text));
        }
        return v;
    }
}

template <class S>
inline S abs_val(const S& x) {
    if constexpr (std::is_same_v<S, Rat>) return x < 0 ? Rat(-x) : x;
    else return x < 0 ? -x : x;
}

} // namespace itlab
