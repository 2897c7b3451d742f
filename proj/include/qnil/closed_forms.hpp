#pragma once

/**
 * @file closed_forms.hpp
 * @brief Closed forms for d_{n,4}, d_{n,5} and their equality cases.
 *
 * Everything involving sqrt(5) is evaluated through integer square roots.
 * The golden-ratio equality cases are razor thin, so no floating point is
 * used anywhere in this header.
 */

#include "qnil/numeric.hpp"

#include <cstdint>
#include <optional>

namespace qnil {

/**
 * Exact ceil((p*n + q*sqrt(s * n^e)) / r) for r > 0.
 *
 * With D = s * n^e not a perfect square, q*sqrt(D) is irrational, so
 * floor((A + y) / r) = floor((A + floor(y)) / r) and ceil = floor + 1.
 */
struct quad_irrational_ceil {
    big_int p, q, r, s;
    unsigned e = 0;

    big_int operator()(const big_int& n) const {
        if (r <= 0) throw domain_error("quad_irrational_ceil: r must be positive");
        big_int radicand = s * boost::multiprecision::pow(n, e);
        if (radicand < 0) throw domain_error("quad_irrational_ceil: negative radicand");
        const big_int a = p * n;
        if (is_perfect_square(radicand)) return ceil_div(a + q * isqrt(radicand), r);
        // floor(q * sqrt(D)) = sign(q) * ... with the irrational correction for q < 0
        const big_int root = isqrt(q * q * radicand);
        const big_int floor_y = q >= 0 ? root : -root - 1;
        return floor_div(a + floor_y, r) + 1;
    }
};

// ceil((sqrt5 - 1)/2 * n) = ceil((-n + sqrt(5 n^2)) / 2)
inline big_int ceil_inv_golden_times(const big_int& n) { return quad_irrational_ceil{-1, 1, 2, 5, 2}(n); }

// ceil((3 - sqrt5)/2 * n) = ceil((3n - sqrt(5 n^2)) / 2)
inline big_int ceil_phi4_times(const big_int& n) { return quad_irrational_ceil{3, -1, 2, 5, 2}(n); }

// ceil(phi_4 * n^2) = ceil((3 n^2 - sqrt(5 n^4)) / 2)
inline big_int ceil_phi4_nsq(const big_int& n) {
    const big_int m = n * n;
    return quad_irrational_ceil{3, -1, 2, 5, 2}(m);
}

// d_{n,4} = min{ ceil((sqrt5-1)/2 n)^2, n ceil((3-sqrt5)/2 n) }
inline big_int d4_closed(const big_int& n) {
    if (n < 1) throw domain_error("d4_closed requires n >= 1");
    const big_int a = ceil_inv_golden_times(n);
    const big_int b = ceil_phi4_times(n);
    return boost::multiprecision::min(big_int(a * a), big_int(n * b));
}

// Case split on n mod 6.
inline big_int d5_closed(const big_int& n) {
    if (n < 1) throw domain_error("d5_closed requires n >= 1");
    const int r = static_cast<int>(n % 6);
    if (r % 2 == 0) return (n / 2) * ceil_div(2 * n, 3);
    if (r == 5) return n * ceil_div(n * (n + 1), 3 * n + 1);
    return ((n + 1) / 2) * ceil_div(2 * n * n, 3 * n + 1);
}

struct fibonacci_test {
    bool is_fibonacci = false;
    std::optional<big_int> next;  // the following Fibonacci number
};

/**
 * Moebius criterion: n >= 1 is Fibonacci iff some integer m lies in
 * (phi n - 1/n, phi n + 1/n), phi the golden ratio; m is then the next one.
 *
 * With u = 2m - n the condition is u n - 2 < sqrt(5) n^2 < u n + 2, checked
 * by squaring. For n = 1 both 1 and 2 qualify; we report 2.
 */
inline fibonacci_test is_fibonacci(const big_int& n) {
    if (n < 1) throw domain_error("is_fibonacci requires n >= 1");
    const big_int n4x5 = 5 * n * n * n * n;
    auto in_interval = [&](const big_int& m) {
        const big_int u = 2 * m - n;
        const big_int lo = u * n - 2, hi = u * n + 2;
        const bool above_lo = lo < 0 || lo * lo < n4x5;
        const bool below_hi = hi > 0 && n4x5 < hi * hi;
        return above_lo && below_hi;
    };
    // floor(phi n) = floor((n + sqrt(5 n^2)) / 2)
    const big_int centre = floor_div(n + isqrt(5 * n * n), 2);
    fibonacci_test out;
    for (big_int m = centre + 1; m >= centre - 1 && m >= 0; --m) {
        if (in_interval(m)) {
            out.is_fibonacci = true;
            out.next = m;
            break;
        }
    }
    return out;
}

// d_{n,4} == ceil(phi_4 n^2); holds exactly for Fibonacci n.
inline bool ttt_equality_d4(const big_int& n) { return d4_closed(n) == ceil_phi4_nsq(n); }

// d_{n,5} == ceil(n^2 / 3); holds exactly for n in {1, 2} and 6 | n.
inline bool k45_equality_d5(const big_int& n) { return d5_closed(n) == ceil_div(n * n, 3); }

}  // namespace qnil
