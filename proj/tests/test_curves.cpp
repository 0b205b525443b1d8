#include <gtest/gtest.h>

#include "cliquepart/curve_family.hpp"
#include "oracles.hpp"

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

}  // namespace

TEST(Curves, BlocksAreGraphsOfPolynomials) {
    for (auto [q, r] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 3}, {4, 3}, {5, 4}, {8, 2}, {9, 3}}) {
        const auto fam = CurveFamily::build(q, r);
        const oracle::NaiveField N{fam.field().p(), fam.field().modulus()};
        ASSERT_EQ(fam.design().size(), checked_pow(q, r));
        for (std::size_t t = 0; t < fam.design().size(); ++t) {
            const auto c = fam.coefficients(t);
            Block expect;
            for (std::uint32_t x = 0; x < q; ++x) {
                std::uint32_t y = 0, xp = 1;
                for (std::uint32_t j = 0; j < r; ++j) {
                    y = N.add(y, N.mul(c[j].index, xp));
                    xp = N.mul(xp, x);
                }
                expect.push_back(x * static_cast<std::uint32_t>(q) + y);
            }
            ASSERT_EQ(fam.design().blocks()[t], expect);
        }
    }
}

TEST(Curves, ClosedFormCensus) {
    const std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t, std::uint64_t>> cases{
        {3, 3, 27, 57},   // C(3,3) 27, C(9,3) - 27
        {4, 3, 256, 304}, // C(4,3) 64, C(16,3) - 256
        {5, 3, 1250, 1050},
        {5, 4, 3125, 9525},
    };
    for (const auto& [q, r, covered, uncovered] : cases) {
        SCOPED_TRACE(q * 10 + r);
        const auto fam = CurveFamily::build(q, r);
        const auto c = coverage_census(fam);
        EXPECT_EQ(c.coverage.multicovered, 0u);
        EXPECT_EQ(c.coverage.covered_once, covered);
        EXPECT_EQ(c.coverage.uncovered, uncovered);
        EXPECT_EQ(c.expected_covered, covered);
        EXPECT_EQ(c.expected_uncovered, uncovered);
        EXPECT_TRUE(c.matches_closed_form);
        EXPECT_TRUE(c.coverage.is_packing);
        EXPECT_LE(pairwise_intersection_check(fam), r - 1);

        const auto mult = oracle::rset_multiplicities(fam.design().blocks(), r);
        EXPECT_EQ(mult.size(), covered);
    }
}

TEST(Curves, LeadingOrderRatio) {
    // q^(2r-1) / (2 (r-2)!) tracks the exact uncovered count from above as q grows
    double prev = 0;
    for (const std::uint64_t q : {5, 7, 11, 13}) {
        const auto c = coverage_census(CurveFamily::build(q, 3));
        const double ratio = static_cast<double>(c.expected_uncovered) / c.leading_order_uncovered;
        EXPECT_GT(ratio, prev);
        EXPECT_LT(ratio, 1.0);
        prev = ratio;
    }
}

TEST(Curves, InducedOnFixedPoints) {
    for (const std::uint32_t n : {10u, 17u, 20u, 26u}) {
        const auto d = curves_for_n(n, 3);
        EXPECT_EQ(d.n(), n);
        EXPECT_TRUE(verify_coverage(d, CoverageMode::Packing).is_packing) << n;
    }
}

TEST(Curves, Errors) {
    EXPECT_EQ(code_of([] { (void)CurveFamily::build(3, 4); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { (void)CurveFamily::build(6, 3); }), ErrorCode::NotPrimePower);
    EXPECT_EQ(code_of([] { (void)CurveFamily::build(64, 5); }), ErrorCode::BudgetExceeded);
    EXPECT_EQ(code_of([] { (void)CurveFamily::build(5, 1); }), ErrorCode::BadParams);
}
