#include <gtest/gtest.h>

#include <random>

#include "cliquepart/bounds.hpp"

using namespace cliquepart;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::IoError;
}

BigInt plain_binomial(std::uint64_t n, std::uint64_t k) {
    BigInt acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) acc = acc * (n - i) / (i + 1);
    return acc;
}

/// Least x with x * C(nL/x, r) <= C(n, r) by a linear scan.
std::uint64_t link_bound_by_scan(std::uint64_t n, std::uint32_t r, std::uint64_t L) {
    const Rational total(plain_binomial(n, r));
    for (std::uint64_t x = 1;; ++x) {
        const Rational y(BigInt(n * L), BigInt(x));
        Rational c = 1;
        for (std::uint32_t i = 0; i < r; ++i) c *= (y - i) / (i + 1);
        if (Rational(x) * c <= total) return x;
    }
}

/// Steiner divisibility: C(N - i, r - i) / C(k - i, r - i) integral for all i.
bool divisibility_by_binomials(std::uint64_t q, std::uint32_t r) {
    const std::uint64_t N = q * q + q + r - 1, k = q + r - 1;
    for (std::uint32_t i = 0; i < r; ++i)
        if (plain_binomial(N - i, r - i) % plain_binomial(k - i, r - i) != 0) return false;
    return true;
}

}  // namespace

TEST(Surd, SignAgreesWithHighPrecision) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000);
    std::uniform_int_distribution<std::int64_t> rad(2, 100000);
    int checked = 0;
    for (int t = 0; t < 10000; ++t) {
        const QuadraticSurd s(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), BigInt(rad(rng)));
        const Float200 v = s.to_float();
        if (boost::multiprecision::abs(v) < Float200("1e-40")) continue;
        ++checked;
        ASSERT_EQ(s.sign(), v > 0 ? 1 : -1) << s.to_string();
    }
    EXPECT_GT(checked, 9900);
    // nearly cancelling: 1393/985 sits just below sqrt 2, 3363/2378 just above
    EXPECT_EQ(QuadraticSurd(Rational(1393, 985), Rational(-1), BigInt(2)).sign(), -1);
    EXPECT_EQ(QuadraticSurd(Rational(-1393, 985), Rational(1), BigInt(2)).sign(), 1);
    EXPECT_EQ(QuadraticSurd(Rational(3363, 2378), Rational(-1), BigInt(2)).sign(), 1);
    EXPECT_EQ(QuadraticSurd(Rational(0), Rational(0), BigInt(7)).sign(), 0);
}

TEST(Surd, ArithmeticAndRounding) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> num(-500, 500);
    std::uniform_int_distribution<std::int64_t> den(1, 50);
    for (int t = 0; t < 2000; ++t) {
        const BigInt d(13);
        const QuadraticSurd x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
        const QuadraticSurd y(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), d);
        EXPECT_EQ(x + y - y, x);
        if (y.sign() != 0) {
            EXPECT_EQ(x / y * y, x);
        }
        const double prod = x.to_double() * y.to_double();
        EXPECT_NEAR((x * y).to_double(), prod, 1e-9 * (1 + std::abs(prod)));
        const BigInt f = x.floor();
        EXPECT_LE(QuadraticSurd::rational(Rational(f), d), x);
        EXPECT_LT(x, QuadraticSurd::rational(Rational(f + 1), d));
        EXPECT_EQ(x.ceil(), x.is_rational() && denominator(x.a()) == 1 ? f : f + 1);
    }
    EXPECT_TRUE(QuadraticSurd(Rational(3), Rational(2), BigInt(16)).is_rational());
    EXPECT_EQ(QuadraticSurd(Rational(3), Rational(2), BigInt(16)).a(), Rational(11));
}

TEST(Phi, RegressionValues) {
    EXPECT_EQ(phi(8, 3).phi_ceiling, 14);
    EXPECT_EQ(phi(8, 3).phi.a(), Rational(14));
    for (const std::uint64_t n : {7, 13, 21, 31}) {
        const auto p = phi(n, 2);
        EXPECT_TRUE(p.q_is_integer);
        EXPECT_EQ(p.phi.a(), Rational(n));
        EXPECT_TRUE(p.phi.is_rational());
    }
    for (std::uint32_t r = 2; r <= 12; ++r) {
        const auto p = phi(r + 1, r);
        EXPECT_EQ(p.phi.a(), Rational(r + 1));
        EXPECT_EQ(p.phi_ceiling, r + 1);
    }
    const auto p20 = phi(20, 3);
    EXPECT_FALSE(p20.q_is_integer);
    EXPECT_EQ(p20.phi_ceiling, 66);
    EXPECT_NEAR(p20.phi.to_double(), 65.83504447564569, 1e-12);
}

TEST(Phi, CeilingIsCertified) {
    for (std::uint32_t r = 2; r <= 8; ++r)
        for (std::uint64_t n = r + 1; n <= 200; ++n) {
            const auto p = phi(n, r);
            const auto d = p.phi.d();
            ASSERT_LT(QuadraticSurd::rational(Rational(p.phi_ceiling - 1), d), p.phi) << n << "," << r;
            ASSERT_LE(p.phi, QuadraticSurd::rational(Rational(p.phi_ceiling), d)) << n << "," << r;
        }
}

TEST(Phi, IdentityExactOnHundredPairs) {
    int pairs = 0, irrational = 0;
    for (std::uint32_t r = 3; r <= 12; ++r)
        for (std::uint64_t n = r + 2; n < r + 12; ++n) {
            EXPECT_TRUE(identity_check_phi(n, r)) << n << "," << r;
            ++pairs;
            if (!phi(n, r).q.is_rational()) ++irrational;
        }
    EXPECT_EQ(pairs, 100);
    EXPECT_GT(irrational, 50);
}

TEST(Phi, Errors) {
    EXPECT_EQ(code_of([] { (void)phi(3, 3); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { (void)phi(5, 1); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { (void)identity_check_phi(5, 2); }), ErrorCode::BadParams);
}

TEST(LinkBound, MatchesLinearScan) {
    EXPECT_EQ(link_lower_bound(21, 3, 21), 77);
    EXPECT_EQ(link_lower_bound(10, 3, 9), 21);
    for (std::uint64_t n = 6; n <= 30; ++n)
        for (std::uint32_t r = 3; r <= 5 && r < n; ++r) {
            const std::uint64_t L = static_cast<std::uint64_t>(phi(n - 1, r - 1).phi_ceiling);
            ASSERT_EQ(link_lower_bound(n, r, L), link_bound_by_scan(n, r, L)) << n << "," << r;
        }
    EXPECT_EQ(code_of([] { (void)link_lower_bound(21, 3, 0); }), ErrorCode::BadParams);
    for (std::uint64_t n = 3; n <= 30; ++n)
        for (std::uint32_t r = 2; r <= 6 && r < n; ++r) EXPECT_GE(link_lower_bound(n, r, 1), 1);
}

TEST(Sieve, DivisibilityProfiles) {
    EXPECT_EQ(qr_sieve(3, 1000).admissible, (std::vector<std::uint64_t>{1, 2, 4, 10}));
    EXPECT_EQ(qr_sieve(4, 1000).admissible, (std::vector<std::uint64_t>{1, 4}));
    EXPECT_EQ(qr_sieve(5, 1000).admissible, (std::vector<std::uint64_t>{1, 4}));
    for (std::uint32_t r = 6; r <= 10; ++r) EXPECT_EQ(qr_sieve(r, 1000).admissible, (std::vector<std::uint64_t>{1}));
    for (std::uint32_t r = 3; r <= 10; ++r)
        for (std::uint64_t q = 1; q <= 300; ++q) ASSERT_EQ(steiner_divisibility(q, r), divisibility_by_binomials(q, r));
    EXPECT_EQ(code_of([] { (void)qr_sieve(2, 10); }), ErrorCode::BadParams);
}

TEST(Chebyshev, NondecreasingPairsSatisfyInequality) {
    std::mt19937 rng(3);
    for (int t = 0; t < 2000; ++t) {
        const std::size_t len = 2 + rng() % 20;
        std::vector<std::uint64_t> f(len), g(len);
        for (auto& v : f) v = 1 + rng() % 50;
        for (auto& v : g) v = 1 + rng() % 50;
        std::sort(f.begin(), f.end());
        std::sort(g.begin(), g.end());
        const auto res = chebyshev_sum_check(f, g);
        EXPECT_TRUE(res.holds);
        EXPECT_GE(res.lhs, res.rhs);
    }
    const std::vector<std::uint64_t> eq{3, 3, 3};
    const auto flat = chebyshev_sum_check(eq, eq);
    EXPECT_EQ(flat.lhs, flat.rhs);
    const std::vector<std::uint64_t> down{3, 2, 1};
    EXPECT_EQ(code_of([&] { (void)chebyshev_sum_check(down, eq); }), ErrorCode::NotMonotone);
    const std::vector<std::uint64_t> shorter{1};
    EXPECT_EQ(code_of([&] { (void)chebyshev_sum_check(shorter, shorter); }), ErrorCode::BadParams);
}

TEST(KnownValues, TableAndPlanes) {
    EXPECT_EQ(known_cp(22, 3), 77u);
    EXPECT_EQ(known_cp(21, 3), 77u);
    EXPECT_EQ(known_cp(8, 3), 14u);
    EXPECT_EQ(known_cp(17, 2), 17u);
    EXPECT_FALSE(known_cp(20, 3).has_value());
    for (const auto& e : known_cp_table()) {
        if (e.n == 21) continue;  // the link-bound entry, checked below
        EXPECT_EQ(phi(e.n, e.r).phi_ceiling, e.cp) << e.n << "," << e.r;
    }
    EXPECT_EQ(link_lower_bound(21, 3, kCp20_2LowerBound), 77);
    EXPECT_EQ(projective_plane_exists(7), PlaneExistence::Exists);
    EXPECT_EQ(projective_plane_exists(10), PlaneExistence::DoesNotExist);
    EXPECT_EQ(projective_plane_exists(12), PlaneExistence::Unknown);
}
