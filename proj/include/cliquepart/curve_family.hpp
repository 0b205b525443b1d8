#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "cliquepart/design.hpp"
#include "cliquepart/finite_field.hpp"

namespace cliquepart {

inline constexpr std::uint64_t kDefaultCurveBudget = std::uint64_t{1} << 22;

/// Graphs {(x, p(x))} of all polynomials of degree <= r-1 over F_q, on the
/// q^2 points (x, y) -> index(x) * q + index(y).
class CurveFamily {
public:
    static CurveFamily build(std::uint64_t q, std::uint32_t r, std::uint64_t budget = kDefaultCurveBudget) {
        if (r < 2) throw Error(ErrorCode::BadParams, "curve family needs r >= 2");
        if (q < r) throw Error(ErrorCode::BadParams, "curve family needs q >= r");
        const auto pp = as_prime_power(q);
        if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < r; ++i) {
            count *= q;
            if (count > budget)
                throw Error(ErrorCode::BudgetExceeded, "q^r = " + std::to_string(q) + "^" + std::to_string(r) +
                                                           " blocks exceeds budget " + std::to_string(budget));
        }
        return CurveFamily(Field::make(pp->p, pp->k), r, count);
    }

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::uint32_t q() const { return field_.q(); }
    [[nodiscard]] std::uint32_t r() const { return r_; }
    [[nodiscard]] const Design& design() const { return design_; }

    /// Coefficients (c_0, ..., c_{r-1}) of block i.
    [[nodiscard]] std::vector<FieldElement> coefficients(std::size_t block) const {
        std::vector<FieldElement> c(r_);
        for (std::uint32_t j = r_; j-- > 0;) {
            c[j] = {static_cast<std::uint32_t>(block % q())};
            block /= q();
        }
        return c;
    }

private:
    CurveFamily(Field field, std::uint32_t r, std::uint64_t count) : field_(std::move(field)), r_(r) {
        const Field& f = field_;
        const std::uint32_t q = f.q();
        std::vector<Block> blocks;
        blocks.reserve(count);
        for (std::uint64_t t = 0; t < count; ++t) {
            const auto c = coefficients(t);
            Block b(q);
            for (std::uint32_t x = 0; x < q; ++x) {
                FieldElement y = f.zero();
                for (std::uint32_t j = r; j-- > 0;) y = f.add(f.mul(y, {x}), c[j]);  // Horner
                b[x] = x * q + y.index;
            }
            blocks.push_back(std::move(b));
        }
        design_ = Design(q * q, r, std::move(blocks), "curves q=" + std::to_string(q) + " r=" + std::to_string(r));
    }

    Field field_;
    std::uint32_t r_;
    Design design_;
};

struct CurveCensus {
    CoverageReport coverage;
    std::uint64_t expected_covered = 0;    // C(q, r) * q^r
    std::uint64_t expected_uncovered = 0;  // C(q^2, r) - C(q, r) * q^r
    double leading_order_uncovered = 0;    // q^(2r-1) / (2 (r-2)!)
    bool matches_closed_form = false;
};

inline CurveCensus coverage_census(const CurveFamily& fam, const CensusOptions& opts = {}) {
    CurveCensus c;
    c.coverage = verify_coverage(fam.design(), CoverageMode::Packing, opts);
    const std::uint64_t q = fam.q(), r = fam.r();
    c.expected_covered = binomial(q, r) * checked_pow(q, static_cast<unsigned>(r));
    c.expected_uncovered = binomial(q * q, r) - c.expected_covered;
    double fact = 1;
    for (std::uint64_t i = 2; i + 2 <= r; ++i) fact *= static_cast<double>(i);
    c.leading_order_uncovered = std::pow(static_cast<double>(q), static_cast<double>(2 * r - 1)) / (2.0 * fact);
    c.matches_closed_form = c.coverage.multicovered == 0 && c.coverage.covered_once == c.expected_covered &&
                            c.coverage.uncovered == c.expected_uncovered;
    return c;
}

/// Largest intersection between two distinct blocks.
inline std::size_t pairwise_intersection_check(const Design& d) {
    std::size_t best = 0;
    const auto& blocks = d.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            const auto& a = blocks[i];
            const auto& b = blocks[j];
            std::size_t ia = 0, ib = 0, common = 0;
            while (ia < a.size() && ib < b.size()) {
                if (a[ia] == b[ib]) {
                    ++common;
                    ++ia;
                    ++ib;
                } else if (a[ia] < b[ib]) {
                    ++ia;
                } else {
                    ++ib;
                }
            }
            best = std::max(best, common);
        }
    return best;
}

inline std::size_t pairwise_intersection_check(const CurveFamily& fam) {
    return pairwise_intersection_check(fam.design());
}

/// For arbitrary n: the curve family for the smallest prime power q with
/// q^2 >= n (and q >= r), restricted to the fixed points {0, ..., n-1}.
/// Restricted blocks with fewer than r points or covering all n points are dropped.
inline Design curves_for_n(std::uint32_t n, std::uint32_t r, std::uint64_t budget = kDefaultCurveBudget) {
    std::uint64_t q = r;
    while (q * q < n || !as_prime_power(q)) ++q;
    const auto fam = CurveFamily::build(q, r, budget);
    std::vector<Block> blocks;
    for (const auto& b : fam.design().blocks()) {
        Block out;
        for (Point x : b)
            if (x < n) out.push_back(x);
        if (out.size() >= r && out.size() < n) blocks.push_back(std::move(out));
    }
    // Two curves share at most r-1 points, so kept restrictions are distinct.
    return Design(n, r, std::move(blocks),
                  "curves q=" + std::to_string(q) + " r=" + std::to_string(r) + " induced n=" + std::to_string(n));
}

}  // namespace cliquepart
