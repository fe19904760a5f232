#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "errors.hpp"

namespace itlab {

// Outcome of comparing two finite binary words in the lexicographic order
// on {0,1}^N restricted to the digits both words possess.  equal_prefix
// means one word is a prefix of the other (possibly equal); the infinite
// extensions are then not yet separated.
enum class Ordering { less, equal_prefix, greater };

// "u <=' v": u is less than v or undecided at this depth.
inline bool leq(Ordering o) { return o != Ordering::greater; }
inline bool geq(Ordering o) { return o != Ordering::less; }

// A finite word over {0,1}, stored as an ASCII string of '0'/'1'.
class Word {
public:
    Word() = default;

    explicit Word(std::string bits) : bits_(std::move(bits)) {
        for (char c : bits_)
            if (c != '0' && c != '1')
                throw config_error("word digits must be '0' or '1'");
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int digit(std::size_t i) const { return bits_[i] - '0'; }
    const std::string& str() const { return bits_; }

    Word prefix(std::size_t n) const {
        return Word(bits_.substr(0, std::min(n, bits_.size())));
    }

    // Equality and the string order.  The string order is used only to keep
    // containers sorted; order semantics live in lex_compare below.
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string bits_;
};

// Lexicographic comparison of the shared prefix.
inline Ordering lex_compare(const Word& u, const Word& v) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (u.digit(i) != v.digit(i))
            return u.digit(i) < v.digit(i) ? Ordering::less : Ordering::greater;
    }
    return Ordering::equal_prefix;
}

// 2^-k where k is the first index at which the words differ; 0 when no
// shared index separates them.
inline double word_metric(const Word& u, const Word& v) {
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (u.digit(i) != v.digit(i))
            return std::ldexp(1.0, -static_cast<int>(i));
    return 0.0;
}

// Digit flip.  Order-reversing: u <= v iff star(v) <= star(u).
inline Word star(const Word& w) {
    std::string s = w.str();
    for (char& c : s) c = (c == '0') ? '1' : '0';
    return Word(std::move(s));
}

// Drop the leading digit.
inline Word shift(const Word& w) {
    if (w.empty()) throw config_error("shift of the empty word");
    return Word(w.str().substr(1));
}

inline Word prepend(int digit, const Word& w) {
    if (digit != 0 && digit != 1) throw config_error("digit must be 0 or 1");
    return Word(static_cast<char>('0' + digit) + w.str());
}

} // namespace itlab
