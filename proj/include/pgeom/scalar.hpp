#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace pgeom {

using BigInt = boost::multiprecision::cpp_int;

// Exact backend: arbitrary-precision rational, always in lowest terms with
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Relative tolerance used by every double-backend comparison.
// Default 1e-9; set once at startup (e.g. from --epsilon) before any
// concurrent use.
double float_epsilon();
void set_float_epsilon(double eps);

// Sign-safe construction; boost's two-argument rational constructor rejects
// negative denominators.
Rational make_rational(long long num, long long den);

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool eq(const Rational& a, const Rational& b) { return a == b; }
    static Rational abs(const Rational& x) { return boost::multiprecision::abs(x); }
    static double to_double(const Rational& x) { return static_cast<double>(x); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    // |x - y| <= eps * max(1, |x|, |y|); zero test is the y = 0 case.
    static bool is_zero(double x) { return std::fabs(x) <= float_epsilon(); }
    static bool eq(double a, double b) {
        double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        return std::fabs(a - b) <= float_epsilon() * scale;
    }
    static double abs(double x) { return std::fabs(x); }
    static double to_double(double x) { return x; }
};

template <class S>
bool scalar_eq(const S& a, const S& b) {
    return scalar_traits<S>::eq(a, b);
}

template <class S>
bool scalar_is_zero(const S& x) {
    return scalar_traits<S>::is_zero(x);
}

}  // namespace pgeom
