#include <gtest/gtest.h>

#include <bit>

#include "cliquepart/bounds.hpp"
#include "cliquepart/exact_search.hpp"
#include "cliquepart/witt_designs.hpp"
#include "oracles.hpp"

using namespace cliquepart;

TEST(Golay, WeightDistributionAndSelfDuality) {
    const auto code = build_golay();
    EXPECT_EQ(code.dimension(), 12u);
    ASSERT_EQ(code.codewords.size(), 4096u);
    std::map<unsigned, std::uint64_t> weights;
    std::set<std::uint32_t> distinct;
    for (auto w : code.codewords) {
        ++weights[static_cast<unsigned>(std::popcount(w))];
        distinct.insert(w);
        for (auto g : code.generator) ASSERT_EQ(std::popcount(w & g) % 2, 0);
    }
    EXPECT_EQ(distinct.size(), 4096u);
    const std::map<unsigned, std::uint64_t> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    EXPECT_EQ(weights, expected);
    EXPECT_EQ(code.weight_distribution, expected);
    EXPECT_EQ(code.minimum_weight(), 8u);
    EXPECT_TRUE(code.generator_self_orthogonal());
    EXPECT_TRUE(code.contains(0xFFFFFFu));
    EXPECT_FALSE(code.contains(1u));
}

TEST(Witt, SteinerChain) {
    const auto w = octad_designs(build_golay());
    const std::vector<std::tuple<const Design*, std::uint32_t, std::uint32_t, std::size_t, std::size_t>> chain{
        {&w.s24, 24, 5, 8, 759}, {&w.s23, 23, 4, 7, 253}, {&w.s22, 22, 3, 6, 77}};
    for (const auto& [d, n, r, k, blocks] : chain) {
        SCOPED_TRACE(n);
        EXPECT_EQ(d->n(), n);
        EXPECT_EQ(d->r(), r);
        EXPECT_EQ(d->size(), blocks);
        for (const auto& b : d->blocks()) ASSERT_EQ(b.size(), k);
        EXPECT_TRUE(verify_coverage(*d).is_partition);
        const auto mult = oracle::rset_multiplicities(d->blocks(), r);
        EXPECT_EQ(mult.size(), binomial(n, r));
        // phi meets the block count exactly
        const auto ph = phi(n, r);
        EXPECT_TRUE(ph.q_is_integer);
        EXPECT_TRUE(ph.phi.is_rational());
        EXPECT_EQ(ph.phi.a(), Rational(blocks));
        EXPECT_EQ(known_cp(n, r), std::optional<std::uint64_t>(blocks));
        EXPECT_TRUE(certify_with_bound(*d).optimal);
    }
    EXPECT_EQ(pairwise_intersection_sizes(w.s24), (std::set<std::size_t>{0, 2, 4}));
    EXPECT_EQ(w.s24.label(), "witt s24");
    EXPECT_EQ(w.s22.label(), "witt s22");
}

TEST(Witt, S843) {
    const auto d = build_s843();
    EXPECT_EQ(d.size(), 14u);
    EXPECT_TRUE(verify_coverage(d).is_partition);
    EXPECT_EQ(pairwise_intersection_sizes(d), (std::set<std::size_t>{0, 2}));
    EXPECT_NE(std::find(d.blocks().begin(), d.blocks().end(), Block{0, 1, 2, 3}), d.blocks().end());
    const auto cert = certify_with_bound(d);
    EXPECT_EQ(cert.phi_ceiling, 14u);
    EXPECT_TRUE(cert.optimal);
}
