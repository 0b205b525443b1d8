#include <gtest/gtest.h>

#include "cliquepart/conic_family.hpp"
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

/// Nonsingular symmetric 3x3 matrices over Z_p, divided by scalars.
std::uint64_t projective_nonsingular_forms(std::int64_t p) {
    std::uint64_t count = 0;
    for (std::int64_t a = 0; a < p; ++a)
        for (std::int64_t b = 0; b < p; ++b)
            for (std::int64_t c = 0; c < p; ++c)
                for (std::int64_t d = 0; d < p; ++d)
                    for (std::int64_t e = 0; e < p; ++e)
                        for (std::int64_t f = 0; f < p; ++f) {
                            const std::int64_t det = a * (b * c - f * f) - d * (d * c - f * e) + e * (d * f - b * e);
                            if (((det % p) + p) % p != 0) ++count;
                        }
    return count / static_cast<std::uint64_t>(p - 1);
}

}  // namespace

TEST(Conics, CountsMatchFormulaAndOracle) {
    for (const std::uint64_t q : {3, 5, 7}) {
        SCOPED_TRACE(q);
        const auto e = enumerate_conics(q);
        EXPECT_EQ(e.plane.size(), q * q + q + 1);
        EXPECT_EQ(e.conics.size(), q * q * q * q * q - q * q);
        EXPECT_EQ(e.conics.size(), projective_nonsingular_forms(static_cast<std::int64_t>(q)));
        for (Point p = 0; p < e.plane.size(); ++p) ASSERT_EQ(conics_through_point(e, p).size(), q * q * q * q - q * q);
    }
    EXPECT_EQ(enumerate_conics(3).conics.size(), 234u);
    EXPECT_EQ(enumerate_conics(5).conics.size(), 3100u);
    EXPECT_EQ(enumerate_conics(7).conics.size(), 16758u);
}

TEST(Conics, EveryConicIsAnOval) {
    for (const std::uint64_t q : {3, 5, 9}) {
        const auto e = enumerate_conics(q);
        for (const auto& k : e.conics) {
            ASSERT_EQ(k.points.size(), q + 1);
            ASSERT_TRUE(is_arc(e.plane, k.points));
            for (Point p : k.points) ASSERT_EQ(conic_form(e.plane.field(), k, e.plane.point(p)), e.plane.field().zero());
        }
    }
}

TEST(Conics, PlaneCoordinates) {
    const ProjectivePlane plane(Field::of_order(5));
    for (Point i = 0; i < plane.size(); ++i) {
        EXPECT_EQ(plane.index_of(plane.point(i)), i);
        const auto F = plane.field();
        const auto two = F.from_int(2);
        const auto p = plane.point(i);
        EXPECT_EQ(plane.index_of({F.mul(two, p[0]), F.mul(two, p[1]), F.mul(two, p[2])}), i);
    }
    EXPECT_TRUE(plane.collinear(0, 1, 2));  // all on x = 0
}

TEST(Conics, DesignsPackExactly) {
    const auto e5 = enumerate_conics(5);
    const auto d5 = build_conic_design(e5, 5);
    EXPECT_TRUE(d5.coverage.is_packing);
    EXPECT_EQ(d5.coverage.covered_once, 18600u);
    EXPECT_EQ(d5.expected_covered, 18600u);
    EXPECT_TRUE(d5.matches_formula);

    const auto d4 = build_conic_design(e5, 4);
    EXPECT_EQ(d4.design.n(), 30u);
    EXPECT_EQ(d4.design.size(), 600u);
    EXPECT_TRUE(d4.coverage.is_packing);
    EXPECT_EQ(d4.coverage.covered_once, 3000u);
    EXPECT_TRUE(d4.matches_formula);

    const auto mult = oracle::rset_multiplicities(d4.design.blocks(), 4);
    EXPECT_EQ(mult.size(), 3000u);

    const auto d7 = build_conic_design(7, 5);
    EXPECT_TRUE(d7.matches_formula);
    EXPECT_EQ(d7.coverage.covered_once, 16758u * 56u);
}

TEST(Conics, Errors) {
    EXPECT_EQ(code_of([] { (void)enumerate_conics(4); }), ErrorCode::EvenCharacteristic);
    EXPECT_EQ(code_of([] { (void)enumerate_conics(11); }), ErrorCode::BudgetExceeded);
    EXPECT_EQ(code_of([] { (void)enumerate_conics(6); }), ErrorCode::NotPrimePower);
    EXPECT_EQ(code_of([] { (void)build_conic_design(3, 4); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { (void)build_conic_design(5, 3); }), ErrorCode::BadParams);
}
