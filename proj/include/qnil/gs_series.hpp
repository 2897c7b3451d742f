#pragma once

/**
 * @file gs_series.hpp
 * @brief Golod-Shafarevich lower bound for quadratic algebras.
 *
 * For n generators and d quadratic relations the Hilbert series of the
 * quotient algebra is bounded below coefficientwise by
 *
 *     |(1 - n t + d t^2)^{-1}|,
 *
 * where |a(t)| replaces every coefficient from the first non-positive one
 * onwards by zero. The Taylor coefficients obey
 *
 *     c_0 = 1,  c_1 = n,  c_m = n c_{m-1} - d c_{m-2},
 *
 * and the bound is a polynomial of degree < k exactly when d >= phi_k n^2
 * with phi_k = 1 / (4 cos^2(pi / (k + 1))).
 *
 * Every threshold decision here runs on the integer recurrence; phi_k as a
 * real number is only for display and cross-checks.
 */

#include "qnil/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qnil {

struct gs_params {
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    unsigned k = 2;

    void validate() const {
        if (d > n * n) throw domain_error("d must satisfy 0 <= d <= n^2");
        if (k < 2) throw domain_error("k must be at least 2");
    }
};

struct truncated_series {
    std::vector<big_int> coeffs;
    // true when truncation hit a non-positive coefficient rather than the cap
    bool complete = false;

    std::size_t size() const { return coeffs.size(); }
    // coefficient of t^m, zero beyond the stored range
    big_int operator[](std::size_t m) const { return m < coeffs.size() ? coeffs[m] : big_int(0); }

    // "1 + 8 t + 39 t^2 + 112 t^3"
    std::string str() const {
        std::ostringstream os;
        for (std::size_t m = 0; m < coeffs.size(); ++m) {
            if (m) os << " + ";
            if (m == 0)
                os << coeffs[m];
            else if (m == 1)
                os << coeffs[m] << " t";
            else
                os << coeffs[m] << " t^" << m;
        }
        if (coeffs.empty()) os << "0";
        return os.str();
    }
};

struct phi_value {
    real value;
    std::optional<big_rational> exact;  // set for k in {2, 3, 5}
};

inline phi_value phi(unsigned k) {
    if (k < 2) throw domain_error("phi_k requires k >= 2");
    phi_value out;
    switch (k) {
        case 2: out.exact = big_rational(1); break;
        case 3: out.exact = big_rational(1, 2); break;
        case 5: out.exact = big_rational(1, 3); break;
        default: break;
    }
    if (out.exact) {
        out.value = real(boost::multiprecision::numerator(*out.exact)) /
                    real(boost::multiprecision::denominator(*out.exact));
    } else {
        const real pi = boost::math::constants::pi<real>();
        const real c = boost::multiprecision::cos(pi / real(k + 1));
        out.value = real(1) / (real(4) * c * c);
    }
    return out;
}

inline truncated_series gs_truncated_series(std::uint64_t n, std::uint64_t d, std::size_t max_degree) {
    if (d > n * n) throw domain_error("Golod-Shafarevich bound needs d <= n^2 (got n=" + std::to_string(n) +
                                      ", d=" + std::to_string(d) + ")");
    truncated_series s;
    const big_int bn(n), bd(d);
    big_int prev2(0), prev1(1);
    s.coeffs.push_back(prev1);
    for (std::size_t m = 1; m <= max_degree; ++m) {
        big_int c = bn * prev1 - (m >= 2 ? bd * prev2 : big_int(0));
        if (c <= 0) {
            s.complete = true;
            return s;
        }
        s.coeffs.push_back(c);
        prev2 = prev1;
        prev1 = c;
    }
    return s;
}

// True iff |(1 - n t + d t^2)^{-1}| is a polynomial of degree < k.
inline bool gs_permits_nilpotency(std::uint64_t n, std::uint64_t d, unsigned k) {
    if (k < 1) throw domain_error("k must be at least 1");
    return gs_truncated_series(n, d, k).complete;
}

// Smallest d in [0, n^2] for which the bound allows R_k = 0; equals ceil(phi_k n^2).
inline std::uint64_t gs_min_relations(std::uint64_t n, unsigned k) {
    if (n < 1) throw domain_error("gs_min_relations requires n >= 1");
    if (k < 2) throw domain_error("gs_min_relations requires k >= 2");
    // monotone in d; d = n^2 always qualifies (c_2 = 0)
    std::uint64_t lo = 0, hi = n * n;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (gs_permits_nilpotency(n, mid, k))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

}  // namespace qnil
