#pragma once

// Exact and high-precision number types shared by all qnil modules.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qnil {

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;
// 50 decimal digits; every quantity we report needs at least 30.
using real = boost::multiprecision::cpp_dec_float_50;

// Thrown when an argument lies outside an operation's domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Thrown when an input would exceed a configured size cap.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// floor(sqrt(v)) for v >= 0.
inline big_int isqrt(const big_int& v) {
    if (v < 0) throw domain_error("isqrt of a negative number");
    return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const big_int& v) {
    if (v < 0) return false;
    big_int r = isqrt(v);
    return r * r == v;
}

// Floor division for a positive divisor.
inline big_int floor_div(const big_int& a, const big_int& b) {
    big_int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline big_int ceil_div(const big_int& a, const big_int& b) {
    return -floor_div(-a, b);
}

inline big_int ceil(const big_rational& r) {
    return ceil_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

inline std::string to_string(const big_rational& r) {
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

}  // namespace qnil
