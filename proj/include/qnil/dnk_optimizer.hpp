#pragma once

/**
 * @file dnk_optimizer.hpp
 * @brief The minimax composition number d_{n,k}.
 *
 *     d_{n,k} = min over n = a_1 + ... + a_{k-1} (a_j >= 0) of
 *               max_j (a_1 + ... + a_j)(a_j + ... + a_{k-1}).
 *
 * With prefix sums b_j = a_1 + ... + a_j the j-th product is
 * b_j (n - b_{j-1}); a_j sits in both factors.
 *
 * dnk_exact is a dynamic program over cut points, dnk_bruteforce enumerates
 * every composition and serves as its oracle. alpha_sequence and
 * witness_composition give the rounded real-valued cut points
 * b_j = ceil(n alpha_j - 1/2), which land within O(n) of the optimum.
 */

#include "qnil/gs_series.hpp"
#include "qnil/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qnil {

// Ordered parts (a_1, ..., a_{k-1}); zero parts are allowed.
class composition {
public:
    composition() = default;
    explicit composition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw domain_error("a composition needs at least one part");
    }

    static composition from_prefix(const std::vector<std::uint64_t>& prefix) {
        // prefix = (b_0 = 0, b_1, ..., b_{k-1} = n)
        if (prefix.size() < 2 || prefix.front() != 0) throw domain_error("prefix must start at b_0 = 0");
        std::vector<std::uint64_t> parts;
        for (std::size_t j = 1; j < prefix.size(); ++j) {
            if (prefix[j] < prefix[j - 1]) throw domain_error("prefix sums must be non-decreasing");
            parts.push_back(prefix[j] - prefix[j - 1]);
        }
        return composition(std::move(parts));
    }

    const std::vector<std::uint64_t>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::uint64_t n() const { return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0}); }

    // b_0 = 0, b_1, ..., b_{k-1} = n
    std::vector<std::uint64_t> prefix() const {
        std::vector<std::uint64_t> b{0};
        for (auto a : parts_) b.push_back(b.back() + a);
        return b;
    }

    composition reversed() const { return composition({parts_.rbegin(), parts_.rend()}); }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << ')';
        return os.str();
    }

    bool operator==(const composition&) const = default;

private:
    std::vector<std::uint64_t> parts_;
};

struct composition_cost_t {
    std::uint64_t value = 0;
    std::vector<std::uint64_t> per_j_costs;
};

inline composition_cost_t composition_cost(const composition& c) {
    const auto b = c.prefix();
    const std::uint64_t n = b.back();
    composition_cost_t out;
    for (std::size_t j = 1; j < b.size(); ++j) {
        out.per_j_costs.push_back(b[j] * (n - b[j - 1]));
        out.value = std::max(out.value, out.per_j_costs.back());
    }
    return out;
}

struct minimax_result {
    std::uint64_t value = 0;
    composition witness;
    std::vector<std::uint64_t> per_j_costs;
};

namespace detail {

inline void check_nk(std::uint64_t n, unsigned k) {
    if (n < 1) throw domain_error("n must be at least 1");
    if (k < 2) throw domain_error("k must be at least 2");
    if (n > (std::uint64_t{1} << 31)) throw domain_error("n too large for 64-bit products");
}

inline minimax_result make_result(composition c) {
    auto cost = composition_cost(c);
    return {cost.value, std::move(c), std::move(cost.per_j_costs)};
}

}  // namespace detail

/**
 * Exact d_{n,k}. Backward DP: best[j][b] is the least achievable maximum over
 * products j..k-1 when b_{j-1} = b. The witness is rebuilt greedily, taking
 * the smallest feasible cut at each step, which yields the lexicographically
 * smallest optimal prefix vector. O(k n^2).
 */
inline minimax_result dnk_exact(std::uint64_t n, unsigned k) {
    detail::check_nk(n, k);
    const std::size_t last = k - 1;  // number of parts
    const std::size_t width = n + 1;
    std::vector<std::vector<std::uint64_t>> best(last + 1, std::vector<std::uint64_t>(width));

    for (std::uint64_t b = 0; b <= n; ++b) best[last][b] = n * (n - b);  // b_{k-1} = n is forced
    for (std::size_t j = last - 1; j >= 1; --j) {
        for (std::uint64_t b = 0; b <= n; ++b) {
            std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
            for (std::uint64_t next = b; next <= n; ++next)
                m = std::min(m, std::max(next * (n - b), best[j + 1][next]));
            best[j][b] = m;
        }
    }
    const std::uint64_t value = best[1][0];

    std::vector<std::uint64_t> prefix{0};
    for (std::size_t j = 1; j < last; ++j) {
        const std::uint64_t b = prefix.back();
        std::uint64_t next = b;
        while (next * (n - b) > value || best[j + 1][next] > value) ++next;
        prefix.push_back(next);
    }
    prefix.push_back(n);
    auto res = detail::make_result(composition::from_prefix(prefix));
    if (res.value != value) throw std::logic_error("dnk_exact: witness reconstruction mismatch");
    return res;
}

inline constexpr std::uint64_t bruteforce_guard = 10'000'000;

/// Exhaustive oracle for dnk_exact; first optimum in lexicographic prefix order wins.
inline minimax_result dnk_bruteforce(std::uint64_t n, unsigned k) {
    detail::check_nk(n, k);
    // binomial(n + k - 2, k - 2) compositions
    big_int count = 1;
    for (unsigned i = 1; i <= k - 2; ++i) count = count * (n + i) / i;
    if (count > bruteforce_guard)
        throw cap_exceeded("dnk_bruteforce: " + count.str() + " compositions exceed the guard of " +
                           std::to_string(bruteforce_guard));

    const std::size_t cuts = k - 2;  // free interior prefix sums b_1..b_{k-2}
    std::vector<std::uint64_t> b(cuts, 0);
    std::optional<std::vector<std::uint64_t>> best_prefix;
    std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();

    auto evaluate = [&] {
        std::uint64_t prev = 0, worst = 0;
        for (std::size_t j = 0; j < cuts; ++j) {
            worst = std::max(worst, b[j] * (n - prev));
            prev = b[j];
        }
        worst = std::max(worst, n * (n - prev));
        if (worst < best_value) {
            best_value = worst;
            best_prefix = b;
        }
    };

    // odometer over 0 <= b_1 <= ... <= b_{k-2} <= n
    while (true) {
        evaluate();
        std::size_t i = cuts;
        while (i > 0 && b[i - 1] == n) --i;
        if (i == 0) break;
        ++b[i - 1];
        for (std::size_t t = i; t < cuts; ++t) b[t] = b[i - 1];
    }

    std::vector<std::uint64_t> prefix{0};
    if (best_prefix) prefix.insert(prefix.end(), best_prefix->begin(), best_prefix->end());
    prefix.push_back(n);
    return detail::make_result(composition::from_prefix(prefix));
}

struct alpha_sequence_t {
    std::vector<real> values;
    std::optional<std::vector<big_rational>> exact;  // k in {2, 3, 5}
};

// alpha_0 = 0, alpha_1 = phi_k, alpha_j = phi_k / (1 - alpha_{j-1}).
inline alpha_sequence_t alpha_sequence(unsigned k) {
    const auto ph = phi(k);
    alpha_sequence_t out;
    if (ph.exact) {
        std::vector<big_rational> ex{big_rational(0)};
        for (unsigned j = 1; j <= k - 1; ++j)
            ex.push_back(j == 1 ? *ph.exact : *ph.exact / (big_rational(1) - ex.back()));
        for (const auto& a : ex)
            out.values.push_back(real(boost::multiprecision::numerator(a)) /
                                 real(boost::multiprecision::denominator(a)));
        out.exact = std::move(ex);
        return out;
    }
    out.values.push_back(real(0));
    for (unsigned j = 1; j <= k - 1; ++j)
        out.values.push_back(j == 1 ? ph.value : ph.value / (real(1) - out.values.back()));
    return out;
}

inline constexpr double half_integer_tolerance = 1e-9;

/**
 * Cut points b_j = ceil(n alpha_j - 1/2), a_j = b_j - b_{j-1}.
 *
 * When n alpha_j - 1/2 lies within 1e-9 of an integer t both t and t + 1 are
 * tried and the cheapest monotone prefix kept (ties: lexicographically
 * smallest). Rational alpha is rounded exactly.
 */
inline composition witness_composition(std::uint64_t n, unsigned k) {
    detail::check_nk(n, k);
    const auto alpha = alpha_sequence(k);
    const std::size_t last = k - 1;

    std::vector<std::vector<std::uint64_t>> options(last + 1);
    options[0] = {0};
    options[last] = {n};
    for (std::size_t j = 1; j < last; ++j) {
        if (alpha.exact) {
            big_rational x = big_rational(n) * (*alpha.exact)[j] - big_rational(1, 2);
            options[j] = {static_cast<std::uint64_t>(ceil(x))};
            continue;
        }
        const real x = real(n) * alpha.values[j] - real(0.5);
        const real t = boost::multiprecision::round(x);
        if (boost::multiprecision::abs(x - t) < real(half_integer_tolerance)) {
            const auto ti = t.convert_to<std::int64_t>();
            for (std::int64_t c : {ti, ti + 1})
                if (c >= 0 && static_cast<std::uint64_t>(c) <= n) options[j].push_back(static_cast<std::uint64_t>(c));
        } else {
            options[j] = {static_cast<std::uint64_t>(boost::multiprecision::ceil(x).convert_to<std::int64_t>())};
        }
    }

    std::optional<composition> best;
    std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> prefix(last + 1);
    // options are ascending, so the first cheapest found is lexicographically smallest
    auto walk = [&](auto&& self, std::size_t j) -> void {
        if (j > last) {
            auto c = composition::from_prefix(prefix);
            auto v = composition_cost(c).value;
            if (v < best_value) {
                best_value = v;
                best = std::move(c);
            }
            return;
        }
        for (auto b : options[j]) {
            if (j > 0 && b < prefix[j - 1]) continue;
            prefix[j] = b;
            self(self, j + 1);
        }
    };
    walk(walk, 0);
    if (!best) throw std::logic_error("witness_composition: no monotone rounding");
    return *best;
}

}  // namespace qnil
