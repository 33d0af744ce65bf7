#pragma once

// Shared numeric types. Counts are exact big integers (they reach r^n),
// bound evaluations with irrational exponents use 50-digit binary floats,
// and certified pass/fail arithmetic runs on exact rationals.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace rainbow {

using BigCount = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Real = boost::multiprecision::cpp_bin_float_50;

inline BigCount pow_big(const BigCount& base, unsigned long exp) {
    BigCount out = 1, b = base;
    while (exp != 0) {
        if (exp & 1u) out *= b;
        b *= b;
        exp >>= 1;
    }
    return out;
}

// r * (r-1) * ... * (r-j+1); zero once j exceeds r.
inline BigCount falling_factorial(unsigned r, unsigned j) {
    BigCount out = 1;
    for (unsigned i = 0; i < j; ++i) {
        if (i >= r) return 0;
        out *= static_cast<int>(r - i);
    }
    return out;
}

inline BigCount binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigCount out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= static_cast<int>(n - i);
        out /= static_cast<int>(i + 1);
    }
    return out;
}

// Largest s with s*s <= v.
inline BigCount isqrt_big(const BigCount& v) {
    if (v < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(v);
}

inline Real to_real(const BigCount& v) { return Real(v); }

inline Real to_real(const BigRat& v) {
    return Real(boost::multiprecision::numerator(v)) /
           Real(boost::multiprecision::denominator(v));
}

inline std::string real_to_string(const Real& x, int digits = 35) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

inline std::string rat_to_string(const BigRat& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace rainbow
