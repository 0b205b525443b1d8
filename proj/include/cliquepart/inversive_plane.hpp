#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "cliquepart/design.hpp"
#include "cliquepart/finite_field.hpp"

namespace cliquepart {

/// C(a, lambda) = {(x1, x2) : (x1 - a1)^2 + (x2 - a2)^2 = lambda}
struct FiniteCircle {
    FieldElement a1, a2, lambda;
    friend bool operator==(const FiniteCircle&, const FiniteCircle&) = default;
};
/// C(a) = {(x1, a1 x1 + a2)} plus the point at infinity
struct SlopeLine {
    FieldElement a1, a2;
    friend bool operator==(const SlopeLine&, const SlopeLine&) = default;
};
/// C(mu) = {(mu, x2)} plus the point at infinity
struct VerticalLine {
    FieldElement mu;
    friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};
using CircleKind = std::variant<FiniteCircle, SlopeLine, VerticalLine>;

struct AffinePoint {
    FieldElement x1, x2;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Circles of the inversive plane of order q, q = 3 (mod 4), on F_q^2 plus one
/// point at infinity. Block order: finite circles by (a1, a2, lambda), then
/// slope lines by (a1, a2), then vertical lines by mu.
class InversivePlane {
public:
    /// Finite circles are scanned point-by-point up to this order and
    /// translated from one reference circle per radius above it.
    static constexpr std::uint32_t kScanMaxOrder = 31;

    static InversivePlane build(std::uint64_t q, std::uint64_t order_cap = kDefaultOrderCap) {
        const auto pp = as_prime_power(q);
        if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
        if (q % 4 != 3) throw Error(ErrorCode::BadResidue, "inversive construction needs q = 3 (mod 4), got q = " + std::to_string(q));
        return InversivePlane(Field::make(pp->p, pp->k, order_cap));
    }

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::uint32_t q() const { return field_.q(); }
    [[nodiscard]] const Design& design() const { return design_; }
    [[nodiscard]] const std::vector<CircleKind>& kinds() const { return kinds_; }
    [[nodiscard]] Point infinity() const { return q() * q(); }

    [[nodiscard]] Point index_of(AffinePoint pt) const { return pt.x1.index * q() + pt.x2.index; }
    [[nodiscard]] AffinePoint point_at(Point idx) const { return {{idx / q()}, {idx % q()}}; }

    [[nodiscard]] std::uint32_t finite_circle_id(const FiniteCircle& c) const {
        return (c.a1.index * q() + c.a2.index) * (q() - 1) + (c.lambda.index - 1);
    }
    [[nodiscard]] std::uint32_t slope_line_id(const SlopeLine& l) const {
        return q() * q() * (q() - 1) + l.a1.index * q() + l.a2.index;
    }
    [[nodiscard]] std::uint32_t vertical_line_id(const VerticalLine& l) const {
        return q() * q() * (q() - 1) + q() * q() + l.mu.index;
    }

    struct CircleRef {
        std::uint32_t id;
        CircleKind kind;
    };

    /// The unique circle through three distinct affine points: a finite circle
    /// when they are not collinear (centre from the 2x2 perpendicular-bisector
    /// system), otherwise the line through them.
    [[nodiscard]] CircleRef unique_circle_through(AffinePoint x, AffinePoint y, AffinePoint z) const {
        const Field& f = field_;
        if (x == y || y == z || x == z) throw Error(ErrorCode::BadParams, "points must be distinct");
        const auto two = f.from_int(2);
        const FieldElement m11 = f.mul(two, f.sub(x.x1, y.x1));
        const FieldElement m12 = f.mul(two, f.sub(x.x2, y.x2));
        const FieldElement m21 = f.mul(two, f.sub(y.x1, z.x1));
        const FieldElement m22 = f.mul(two, f.sub(y.x2, z.x2));
        const FieldElement det = f.sub(f.mul(m11, m22), f.mul(m12, m21));
        if (det == f.zero()) {
            if (x.x1 == y.x1) {
                const VerticalLine l{x.x1};
                return {vertical_line_id(l), l};
            }
            const FieldElement slope = f.div(f.sub(y.x2, x.x2), f.sub(y.x1, x.x1));
            const SlopeLine l{slope, f.sub(x.x2, f.mul(slope, x.x1))};
            return {slope_line_id(l), l};
        }
        const auto norm = [&](AffinePoint p) { return f.add(f.mul(p.x1, p.x1), f.mul(p.x2, p.x2)); };
        const FieldElement rhs1 = f.sub(norm(x), norm(y));
        const FieldElement rhs2 = f.sub(norm(y), norm(z));
        // Cramer's rule
        const FieldElement a1 = f.div(f.sub(f.mul(rhs1, m22), f.mul(m12, rhs2)), det);
        const FieldElement a2 = f.div(f.sub(f.mul(m11, rhs2), f.mul(rhs1, m21)), det);
        const auto dist = [&](AffinePoint p) {
            const auto d1 = f.sub(p.x1, a1), d2 = f.sub(p.x2, a2);
            return f.add(f.mul(d1, d1), f.mul(d2, d2));
        };
        const FieldElement lambda = dist(x);
        if (lambda == f.zero() || dist(y) != lambda || dist(z) != lambda)
            throw Error(ErrorCode::ConstructionFailed, "circle through three points has degenerate radius");
        const FiniteCircle c{a1, a2, lambda};
        return {finite_circle_id(c), c};
    }

private:
    explicit InversivePlane(Field field) : field_(std::move(field)) {
        const Field& f = field_;
        const std::uint32_t q = f.q();
        const std::uint32_t n = q * q + 1;
        std::vector<Block> blocks;
        blocks.reserve(static_cast<std::size_t>(q) * q * q + q);
        kinds_.reserve(blocks.capacity());

        std::vector<FieldElement> square(q);
        for (std::uint32_t i = 0; i < q; ++i) square[i] = f.mul({i}, {i});

        // Reference circles centred at the origin, one per nonzero radius.
        std::vector<std::vector<AffinePoint>> reference(q);
        if (q > kScanMaxOrder) {
            for (std::uint32_t x = 0; x < q; ++x)
                for (std::uint32_t y = 0; y < q; ++y) {
                    const auto s = f.add(square[x], square[y]);
                    if (s != f.zero()) reference[s.index].push_back({{x}, {y}});
                }
        }

        for (std::uint32_t a1 = 0; a1 < q; ++a1) {
            for (std::uint32_t a2 = 0; a2 < q; ++a2) {
                for (std::uint32_t lam = 1; lam < q; ++lam) {
                    Block b;
                    b.reserve(q + 1);
                    if (q <= kScanMaxOrder) {
                        for (std::uint32_t x = 0; x < q; ++x) {
                            const auto dx = square[f.sub({x}, {a1}).index];
                            for (std::uint32_t y = 0; y < q; ++y)
                                if (f.add(dx, square[f.sub({y}, {a2}).index]).index == lam) b.push_back(x * q + y);
                        }
                    } else {
                        for (const auto& p : reference[lam])
                            b.push_back(f.add(p.x1, {a1}).index * q + f.add(p.x2, {a2}).index);
                        std::sort(b.begin(), b.end());
                    }
                    if (b.size() != q + 1)
                        throw Error(ErrorCode::ConstructionFailed, "finite circle with " + std::to_string(b.size()) + " points");
                    blocks.push_back(std::move(b));
                    kinds_.emplace_back(FiniteCircle{{a1}, {a2}, {lam}});
                }
            }
        }
        for (std::uint32_t a1 = 0; a1 < q; ++a1) {
            for (std::uint32_t a2 = 0; a2 < q; ++a2) {
                Block b;
                for (std::uint32_t x = 0; x < q; ++x) b.push_back(x * q + f.add(f.mul({a1}, {x}), {a2}).index);
                b.push_back(q * q);
                blocks.push_back(std::move(b));
                kinds_.emplace_back(SlopeLine{{a1}, {a2}});
            }
        }
        for (std::uint32_t mu = 0; mu < q; ++mu) {
            Block b;
            for (std::uint32_t y = 0; y < q; ++y) b.push_back(mu * q + y);
            b.push_back(q * q);
            blocks.push_back(std::move(b));
            kinds_.emplace_back(VerticalLine{{mu}});
        }
        design_ = Design(n, 3, std::move(blocks), "inversive q=" + std::to_string(q));
    }

    Field field_;
    Design design_;
    std::vector<CircleKind> kinds_;
};

/// Brute-force count of (x, y) with (x - a)^2 + (y - b)^2 = lambda.
inline std::uint64_t circle_solution_count(const Field& f, FieldElement a, FieldElement b, FieldElement lambda) {
    if (f.p() == 2) throw Error(ErrorCode::EvenCharacteristic, "circle count needs odd q");
    if (lambda == f.zero()) throw Error(ErrorCode::BadParams, "radius must be nonzero");
    std::uint64_t count = 0;
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        const auto dx = f.sub({x}, a);
        const auto dx2 = f.mul(dx, dx);
        for (std::uint32_t y = 0; y < f.q(); ++y) {
            const auto dy = f.sub({y}, b);
            if (f.add(dx2, f.mul(dy, dy)) == lambda) ++count;
        }
    }
    return count;
}

struct AxiomOptions {
    /// Axiom 3 is checked over every (circle, point on it, point off it)
    /// triple up to this order, and sampled above it.
    std::uint32_t exhaustive_max_order = 7;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    CensusOptions census;
};

struct AxiomReport {
    bool axiom1 = false;
    bool axiom2 = false;
    bool axiom3 = false;
    CoverageReport coverage;
    std::optional<std::vector<Point>> axiom1_counterexample;  // an r-set with multiplicity != 1
    std::optional<std::vector<Point>> axiom2_witness;         // four points on no common circle
    /// (circle index, u, w, number of tangent circles found)
    std::optional<std::vector<std::uint64_t>> axiom3_counterexample;
    bool sampled = false;
    std::uint64_t seed = 0;
    std::uint64_t axiom3_checks = 0;

    [[nodiscard]] bool all() const { return axiom1 && axiom2 && axiom3; }
};

/// Checks the three inversive-plane axioms on an arbitrary design with r = 3.
inline AxiomReport verify_axioms(const Design& d, std::uint32_t order, const AxiomOptions& opts = {}) {
    if (d.r() != 3) throw Error(ErrorCode::WrongUniformity, "inversive-plane axioms need r = 3");
    AxiomReport rep;
    rep.seed = opts.seed;

    rep.coverage = verify_coverage(d, CoverageMode::Partition, opts.census);
    rep.axiom1 = rep.coverage.is_partition;
    if (!rep.axiom1 && !rep.coverage.violation_samples.empty())
        rep.axiom1_counterexample = rep.coverage.violation_samples.front();

    const auto through = blocks_through_points(d);
    const std::uint32_t n = d.n();

    // Axiom 2: first 4-set, in lexicographic order, contained in no block.
    for_each_rset(n, 4, [&](std::span<const Point> s) {
        std::vector<std::uint32_t> common = through[s[0]];
        for (std::size_t i = 1; i < 4 && !common.empty(); ++i) {
            std::vector<std::uint32_t> next;
            std::set_intersection(common.begin(), common.end(), through[s[i]].begin(), through[s[i]].end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        if (common.empty()) {
            rep.axiom2 = true;
            rep.axiom2_witness = std::vector<Point>(s.begin(), s.end());
            return false;
        }
        return true;
    });

    // Axiom 3: for circle C, u in C, w not in C, exactly one D through u, w
    // with C and D meeting only in u.
    std::vector<std::uint8_t> in_c(n, 0);
    const auto tangent_count = [&](std::uint32_t c, Point u, Point w) {
        const auto& cb = d.blocks()[c];
        for (Point x : cb) in_c[x] = 1;
        std::vector<std::uint32_t> both;
        std::set_intersection(through[u].begin(), through[u].end(), through[w].begin(), through[w].end(),
                              std::back_inserter(both));
        std::uint64_t count = 0;
        for (std::uint32_t di : both) {
            std::uint32_t meet = 0;
            for (Point x : d.blocks()[di]) meet += in_c[x];
            if (meet == 1) ++count;
        }
        for (Point x : cb) in_c[x] = 0;
        return count;
    };
    rep.axiom3 = true;
    const auto record = [&](std::uint32_t c, Point u, Point w) {
        ++rep.axiom3_checks;
        const auto count = tangent_count(c, u, w);
        if (count != 1) {
            rep.axiom3 = false;
            rep.axiom3_counterexample = std::vector<std::uint64_t>{c, u, w, count};
            return false;
        }
        return true;
    };
    if (order <= opts.exhaustive_max_order) {
        std::vector<std::uint8_t> member(n, 0);
        for (std::uint32_t c = 0; c < d.size() && rep.axiom3; ++c) {
            const auto& cb = d.blocks()[c];
            for (Point x : cb) member[x] = 1;
            for (std::size_t ui = 0; ui < cb.size() && rep.axiom3; ++ui)
                for (Point w = 0; w < n; ++w)
                    if (!member[w] && !record(c, cb[ui], w)) break;
            for (Point x : cb) member[x] = 0;
        }
    } else if (!d.empty()) {
        rep.sampled = true;
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::uint32_t> pick_circle(0, static_cast<std::uint32_t>(d.size() - 1));
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
            const std::uint32_t c = pick_circle(rng);
            const auto& cb = d.blocks()[c];
            const Point u = cb[std::uniform_int_distribution<std::size_t>(0, cb.size() - 1)(rng)];
            // w uniform over the complement of C: the k-th non-member point
            std::uint32_t k = std::uniform_int_distribution<std::uint32_t>(0, n - static_cast<std::uint32_t>(cb.size()) - 1)(rng);
            Point w = k;
            for (Point x : cb) {
                if (x <= w) ++w;
                else break;
            }
            if (!record(c, u, w)) break;
        }
    }
    return rep;
}

inline AxiomReport verify_axioms(const InversivePlane& m, const AxiomOptions& opts = {}) {
    return verify_axioms(m.design(), m.q(), opts);
}

}  // namespace cliquepart
