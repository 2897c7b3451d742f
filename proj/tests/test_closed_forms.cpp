#include "qnil/closed_forms.hpp"
#include "qnil/dnk_optimizer.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace qnil;

namespace {

// F_0 = F_1 = 1
std::vector<big_int> fibonacci_up_to(const big_int& limit) {
    std::vector<big_int> f{1, 1};
    while (f.back() + f[f.size() - 2] <= limit) f.push_back(f.back() + f[f.size() - 2]);
    return f;
}

// min{ max{n a, (n - a)^2} : 0 <= 2a <= n }, a third route to d_{n,4}
std::uint64_t d4_reduced(std::uint64_t n) {
    std::uint64_t best = ~std::uint64_t{0};
    for (std::uint64_t a = 0; 2 * a <= n; ++a) best = std::min(best, std::max(n * a, (n - a) * (n - a)));
    return best;
}

}  // namespace

TEST(QuadIrrationalCeil, AgainstHighPrecision) {
    const real s5 = boost::multiprecision::sqrt(real(5));
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const real a = (s5 - 1) / 2 * n, b = (3 - s5) / 2 * n, c = (3 - s5) / 2 * n * n;
        ASSERT_EQ(ceil_inv_golden_times(n), big_int(boost::multiprecision::ceil(a).convert_to<std::int64_t>()));
        ASSERT_EQ(ceil_phi4_times(n), big_int(boost::multiprecision::ceil(b).convert_to<std::int64_t>()));
        ASSERT_EQ(ceil_phi4_nsq(n), big_int(boost::multiprecision::ceil(c).convert_to<std::int64_t>()));
    }
}

TEST(QuadIrrationalCeil, PerfectSquareRadicand) {
    // (2n + sqrt(4 n^2)) / 3 = 4n/3
    quad_irrational_ceil f{2, 1, 3, 4, 2};
    for (int n = 1; n < 50; ++n) EXPECT_EQ(f(n), ceil_div(4 * n, 3));
}

TEST(D4Closed, Examples) {
    EXPECT_EQ(d4_closed(8), 25);
    EXPECT_EQ(ceil_inv_golden_times(8), 5);
    EXPECT_EQ(ceil_phi4_times(8), 4);
    EXPECT_EQ(d4_closed(7), 21);
    EXPECT_EQ(d4_closed(1), 1);
    EXPECT_EQ(d4_closed(4), 8);
}

TEST(D4Closed, ThreeRoutesAgree) {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto dp = dnk_exact(n, 4).value;
        ASSERT_EQ(d4_closed(n), dp) << n;
        ASSERT_EQ(d4_reduced(n), dp) << n;
    }
}

TEST(D5Closed, Examples) {
    EXPECT_EQ(d5_closed(6), 12);
    EXPECT_EQ(d5_closed(5), 10);
    EXPECT_EQ(d5_closed(7), 20);
    EXPECT_EQ(d5_closed(9), 30);
    EXPECT_EQ(dnk_bruteforce(5, 5).value, 10u);
    EXPECT_EQ(dnk_bruteforce(7, 5).value, 20u);
}

TEST(D5Closed, MatchesDp) {
    for (std::uint64_t n = 1; n <= 300; ++n) ASSERT_EQ(d5_closed(n), dnk_exact(n, 5).value) << n;
}

TEST(D5Closed, EvenCaseRemark) {
    // n ceil(n/3) and (n/2) ceil(2n/3) coincide unless n = -2 mod 6, where the
    // inner ceilings differ by exactly one (the products by n/2)
    for (std::uint64_t n = 2; n <= 600; n += 2) {
        const big_int first = n * ceil_div(n, 3), second = (n / 2) * ceil_div(2 * n, 3);
        if (n % 6 == 4) {
            ASSERT_EQ(2 * ceil_div(n, 3) - ceil_div(2 * n, 3), 1) << n;
            ASSERT_EQ(first - second, n / 2) << n;
        } else {
            ASSERT_EQ(first, second) << n;
        }
        ASSERT_EQ(d5_closed(n), boost::multiprecision::min(first, second));
    }
}

TEST(IsFibonacci, Examples) {
    auto eight = is_fibonacci(8);
    EXPECT_TRUE(eight.is_fibonacci);
    EXPECT_EQ(*eight.next, 13);
    EXPECT_FALSE(is_fibonacci(7).is_fibonacci);
    EXPECT_TRUE(is_fibonacci(1).is_fibonacci);
    EXPECT_EQ(*is_fibonacci(1).next, 2);
    EXPECT_EQ(*is_fibonacci(2).next, 3);
    EXPECT_THROW(is_fibonacci(0), domain_error);
}

TEST(IsFibonacci, ExhaustiveSmallRange) {
    const auto fib = fibonacci_up_to(100000);
    std::set<big_int> set(fib.begin(), fib.end());
    for (std::uint64_t n = 1; n <= 100000; ++n) ASSERT_EQ(is_fibonacci(n).is_fibonacci, set.count(n) == 1) << n;
}

TEST(IsFibonacci, UpToTenToTheEighteen) {
    const big_int limit("1000000000000000000");
    const auto fib = fibonacci_up_to(limit);
    std::set<big_int> set(fib.begin(), fib.end());
    for (std::size_t i = 2; i + 1 < fib.size(); ++i) {
        auto t = is_fibonacci(fib[i]);
        ASSERT_TRUE(t.is_fibonacci) << fib[i];
        ASSERT_EQ(*t.next, fib[i + 1]);
        for (int delta : {-2, -1, 1, 2}) {
            const big_int m = fib[i] + delta;
            if (m >= 1 && !set.count(m)) ASSERT_FALSE(is_fibonacci(m).is_fibonacci) << m;
        }
    }
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000'000'000ULL);
    for (int i = 0; i < 20000; ++i) {
        const big_int m = dist(rng);
        ASSERT_EQ(is_fibonacci(m).is_fibonacci, set.count(m) == 1) << m;
    }
}

TEST(FibonacciCeilingIdentity, OddAndEvenIndices) {
    const auto fib = fibonacci_up_to(1'000'000'000);
    for (std::size_t k = 2; k < fib.size(); ++k) {
        const big_int expect = k % 2 ? fib[k - 1] * fib[k - 1] : fib[k] * fib[k - 2];
        ASSERT_EQ(ceil_phi4_nsq(fib[k]), expect) << k;
    }
}

TEST(EqualityCases, D4Examples) {
    EXPECT_TRUE(ttt_equality_d4(8));
    EXPECT_FALSE(ttt_equality_d4(7));
    EXPECT_EQ(ceil_phi4_nsq(7), 19);
    EXPECT_FALSE(ttt_equality_d4(4));
    EXPECT_EQ(ceil_phi4_nsq(4), 7);
}

TEST(EqualityCases, D4IsFibonacci) {
    for (std::uint64_t n = 1; n <= 10000; ++n) ASSERT_EQ(ttt_equality_d4(n), is_fibonacci(n).is_fibonacci) << n;
}

TEST(EqualityCases, D4DivisibleOrSquare) {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const big_int m = ceil_phi4_nsq(n);
        ASSERT_EQ(ttt_equality_d4(n), m % n == 0 || is_perfect_square(m)) << n;
    }
}

TEST(EqualityCases, D5Examples) {
    EXPECT_TRUE(k45_equality_d5(6));
    EXPECT_TRUE(k45_equality_d5(2));
    EXPECT_TRUE(k45_equality_d5(1));
    EXPECT_FALSE(k45_equality_d5(9));
}

// n = 4 is an equality case outside {1, 2} u 6Z: d_{4,5} = 6 = ceil(16/3)
TEST(EqualityCases, D5FourIsAnEqualityCase) {
    EXPECT_EQ(dnk_bruteforce(4, 5).value, 6u);
    EXPECT_EQ(ceil_div(big_int(16), big_int(3)), 6);
    EXPECT_TRUE(k45_equality_d5(4));
}

TEST(EqualityCases, D5Characterization) {
    for (std::uint64_t n = 1; n <= 10000; ++n) ASSERT_EQ(k45_equality_d5(n), n <= 2 || n == 4 || n % 6 == 0) << n;
    for (std::uint64_t n = 1; n <= 300; ++n)
        ASSERT_EQ(k45_equality_d5(n), big_int(dnk_exact(n, 5).value) == ceil_div(big_int(n * n), big_int(3))) << n;
}
