#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace itlab {

// Which half-open convention the map uses at the threshold rho:
// left_closed  takes branch 0 on [0, rho]   (the map W),
// right_closed takes branch 0 on [0, rho)   (the map W+).
enum class Variant { left_closed, right_closed };

enum class BranchFamily { affine, sine_perturbed };
enum class ArithmeticMode { exact_rational, floating };

struct BranchSpec {
    BranchFamily family = BranchFamily::affine;
    double eps = 0.0; // amplitude of the sine perturbation
};

struct ValidationReport {
    bool pass = false;
    double endpoint_residual = 0.0; // worst |W0(0)|, |W0(a)-1|, |W1(1-b)|, |W1(1)-1|
    double min_derivative = 0.0;    // smallest sampled branch derivative
    double derivative_bound = 0.0;  // certified lower bound d
    std::vector<std::string> messages;
};

namespace detail {

// g(t) = t + eps*sin(2*pi*t)/(2*pi), the unit-interval profile of a
// sine-perturbed branch.  Strictly increasing for eps < 1, fixes 0 and 1.
inline double sine_profile(double t, double eps) {
    const double two_pi = 2.0 * std::numbers::pi;
    return t + eps * std::sin(two_pi * t) / two_pi;
}

inline double sine_profile_deriv(double t, double eps) {
    return 1.0 + eps * std::cos(2.0 * std::numbers::pi * t);
}

// Invert g on [0,1] by safeguarded Newton; g' >= 1 - eps > 0.
inline double sine_profile_inverse(double y, double eps) {
    double lo = 0.0, hi = 1.0, t = y;
    for (int it = 0; it < 200; ++it) {
        const double f = sine_profile(t, eps) - y;
        if (f > 0) hi = t; else lo = t;
        if (std::abs(f) < 1e-16 || hi - lo < 1e-16) break;
        double step = f / sine_profile_deriv(t, eps);
        double next = t - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        t = next;
    }
    return t;
}

} // namespace detail

// The one-parameter family of piecewise expanding maps of [0,1]:
// branch 0 maps [0, a] onto [0,1], branch 1 maps [1-b, 1] onto [0,1],
// and rho in [1-b, a] selects where the overlap is cut.
template <class S>
class MapSystem {
    static_assert(std::is_same_v<S, double> || std::is_same_v<S, Rat>,
                  "scalar must be double or Rat");

public:
    using scalar = S;

    struct EvalResult {
        S value;
        int digit;
    };

    MapSystem(S a, S b, S rho, BranchSpec branch0 = {}, BranchSpec branch1 = {})
        : a_(std::move(a)), b_(std::move(b)), rho_(std::move(rho)),
          br0_(branch0), br1_(branch1) {
        if (!(a_ > 0 && a_ < 1)) throw config_error("need 0 < a < 1");
        if (!(b_ > 0 && b_ < 1)) throw config_error("need 0 < b < 1");
        if (!(a_ + b_ > 1)) throw config_error("branch domains must overlap: a + b > 1");
        if (!(rho_ >= 1 - b_ && rho_ <= a_))
            throw config_error("rho must lie in [1-b, a]");
        check_branch(br0_, to_double(a_), "branch0");
        check_branch(br1_, to_double(b_), "branch1");
    }

    const S& a() const { return a_; }
    const S& b() const { return b_; }
    const S& rho() const { return rho_; }
    const BranchSpec& branch0() const { return br0_; }
    const BranchSpec& branch1() const { return br1_; }

    static constexpr ArithmeticMode mode() {
        return std::is_same_v<S, Rat> ? ArithmeticMode::exact_rational
                                      : ArithmeticMode::floating;
    }

    MapSystem with_rho(S rho) const {
        return MapSystem(a_, b_, std::move(rho), br0_, br1_);
    }

    // Certified lower bound for the branch derivatives.
    double derivative_bound() const {
        const double d0 = (1.0 - br0_.eps) / to_double(a_);
        const double d1 = (1.0 - br1_.eps) / to_double(b_);
        return std::min(d0, d1);
    }

    S branch_value(int i, const S& x) const {
        const S t = (i == 0) ? S(x / a_) : S((x - (1 - b_)) / b_);
        const BranchSpec& br = (i == 0) ? br0_ : br1_;
        if (br.family == BranchFamily::affine) return t;
        if constexpr (std::is_same_v<S, double>) {
            return std::clamp(detail::sine_profile(t, br.eps), 0.0, 1.0);
        } else {
            throw config_error("sine branches require floating mode");
        }
    }

    S branch_inverse(int i, const S& y) const {
        if (!(y >= 0 && y <= 1)) throw config_error("inverse argument outside [0,1]");
        const BranchSpec& br = (i == 0) ? br0_ : br1_;
        S t = y;
        if (br.family == BranchFamily::sine_perturbed) {
            if constexpr (std::is_same_v<S, double>)
                t = detail::sine_profile_inverse(y, br.eps);
            else
                throw config_error("sine branches require floating mode");
        }
        return (i == 0) ? S(t * a_) : S((1 - b_) + t * b_);
    }

    // Derivative of branch i at x (floating, for diagnostics).
    double branch_derivative(int i, double x) const {
        const double w = (i == 0) ? to_double(a_) : to_double(b_);
        const BranchSpec& br = (i == 0) ? br0_ : br1_;
        if (br.family == BranchFamily::affine) return 1.0 / w;
        const double t = (i == 0) ? x / w : (x - (1.0 - w)) / w;
        return detail::sine_profile_deriv(t, br.eps) / w;
    }

    // One step of W (left_closed) or W+ (right_closed), with the digit taken.
    EvalResult eval_W(const S& x, Variant v) const {
        if (!(x >= 0 && x <= 1)) throw config_error("point outside [0,1]");
        const bool low = (v == Variant::left_closed) ? (x <= rho_) : (x < rho_);
        const int digit = low ? 0 : 1;
        return {branch_value(digit, x), digit};
    }

    // All W-preimages of y, ascending.  Branch 0 contributes when its
    // inverse lands in [0, rho], branch 1 when its inverse lands in (rho, 1].
    std::vector<S> preimages(const S& y) const {
        std::vector<S> out;
        S x0 = branch_inverse(0, y);
        if (x0 <= rho_) out.push_back(std::move(x0));
        S x1 = branch_inverse(1, y);
        if (x1 > rho_) out.push_back(std::move(x1));
        return out;
    }

    ValidationReport validate(int grid_points) const {
        if (grid_points < 2) throw config_error("grid_points must be >= 2");
        ValidationReport rep;
        rep.derivative_bound = derivative_bound();

        const double ad = to_double(a_), bd = to_double(b_);
        const auto val = [&](int i, double x) {
            if constexpr (std::is_same_v<S, double>) {
                return branch_value(i, x);
            } else {
                const BranchSpec& br = (i == 0) ? br0_ : br1_;
                const double t = (i == 0) ? x / ad : (x - (1.0 - bd)) / bd;
                return br.family == BranchFamily::affine
                           ? t
                           : detail::sine_profile(t, br.eps);
            }
        };
        rep.endpoint_residual = std::max(
            std::max(std::abs(val(0, 0.0)), std::abs(val(0, ad) - 1.0)),
            std::max(std::abs(val(1, 1.0 - bd)), std::abs(val(1, 1.0) - 1.0)));

        rep.min_derivative = std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid_points; ++i) {
            const double t = static_cast<double>(i) / (grid_points - 1);
            rep.min_derivative = std::min(rep.min_derivative, branch_derivative(0, t * ad));
            rep.min_derivative =
                std::min(rep.min_derivative, branch_derivative(1, (1.0 - bd) + t * bd));
        }

        rep.pass = rep.endpoint_residual <= 1e-12 &&
                   rep.min_derivative >= rep.derivative_bound - 1e-12 &&
                   rep.derivative_bound > 1.0;
        rep.messages.push_back("endpoints map onto [0,1]: residual " +
                               double_string(rep.endpoint_residual));
        rep.messages.push_back("sampled derivative minimum " +
                               double_string(rep.min_derivative) + " vs bound " +
                               double_string(rep.derivative_bound));
        return rep;
    }

private:
    static void check_branch(const BranchSpec& br, double width, const char* name) {
        if (br.family == BranchFamily::affine) {
            if (br.eps != 0.0)
                throw config_error(std::string(name) + ": affine branch takes no eps");
            return;
        }
        if constexpr (std::is_same_v<S, Rat>)
            throw config_error(std::string(name) +
                               ": sine-perturbed branches require floating mode");
        if (!(br.eps >= 0.0 && br.eps < 1.0 - width))
            throw config_error(std::string(name) + ": need 0 <= eps < 1 - width");
    }

    S a_, b_, rho_;
    BranchSpec br0_, br1_;
};

} // namespace itlab
