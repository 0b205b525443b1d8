#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cliquepart/design.hpp"
#include "cliquepart/finite_field.hpp"

namespace cliquepart {

inline constexpr std::uint32_t kDefaultConicMaxOrder = 9;

using ProjectivePoint = std::array<FieldElement, 3>;

/// PG(2, q) with points normalised so the first nonzero coordinate is 1,
/// indexed in lexicographic order of coordinate indices:
/// (0,0,1), then (0,1,z), then (1,y,z).
class ProjectivePlane {
public:
    explicit ProjectivePlane(Field field) : field_(std::move(field)) {
        const std::uint32_t q = field_.q();
        points_.push_back({FieldElement{0}, FieldElement{0}, FieldElement{1}});
        for (std::uint32_t z = 0; z < q; ++z) points_.push_back({FieldElement{0}, FieldElement{1}, FieldElement{z}});
        for (std::uint32_t y = 0; y < q; ++y)
            for (std::uint32_t z = 0; z < q; ++z) points_.push_back({FieldElement{1}, FieldElement{y}, FieldElement{z}});
    }

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] std::uint32_t size() const { return static_cast<std::uint32_t>(points_.size()); }
    [[nodiscard]] const ProjectivePoint& point(Point i) const { return points_[i]; }

    [[nodiscard]] ProjectivePoint normalize(ProjectivePoint p) const {
        for (const auto& c : p) {
            if (c != field_.zero()) {
                const auto s = field_.inv(c);
                for (auto& x : p) x = field_.mul(x, s);
                return p;
            }
        }
        throw Error(ErrorCode::BadParams, "(0,0,0) is not a projective point");
    }

    [[nodiscard]] Point index_of(ProjectivePoint p) const {
        p = normalize(p);
        const std::uint32_t q = field_.q();
        if (p[0].index == 0) return p[1].index == 0 ? 0 : 1 + p[2].index;
        return 1 + q + p[1].index * q + p[2].index;
    }

    [[nodiscard]] bool collinear(Point i, Point j, Point k) const {
        const Field& f = field_;
        const auto& a = points_[i];
        const auto& b = points_[j];
        const auto& c = points_[k];
        return det3(f, a, b, c) == f.zero();
    }

    static FieldElement det3(const Field& f, const ProjectivePoint& a, const ProjectivePoint& b,
                             const ProjectivePoint& c) {
        const auto minor = [&](int i, int j) { return f.sub(f.mul(b[i], c[j]), f.mul(b[j], c[i])); };
        return f.add(f.sub(f.mul(a[0], minor(1, 2)), f.mul(a[1], minor(0, 2))), f.mul(a[2], minor(0, 1)));
    }

private:
    Field field_;
    std::vector<ProjectivePoint> points_;
};

/// Nondegenerate conic a x^2 + b y^2 + c z^2 + 2d xy + 2e xz + 2f yz = 0, i.e.
/// the symmetric matrix [[a,d,e],[d,b,f],[e,f,c]] scaled so its first nonzero
/// entry in row-major order is 1.
struct Conic {
    FieldElement a, b, c, d, e, f;
    std::vector<Point> points;  // sorted indices in the ProjectivePlane

    [[nodiscard]] bool contains(Point p) const { return std::binary_search(points.begin(), points.end(), p); }
};

inline FieldElement conic_form(const Field& F, const Conic& k, const ProjectivePoint& p) {
    const auto two = F.from_int(2);
    const auto& [x, y, z] = p;
    auto sum = F.mul(k.a, F.mul(x, x));
    sum = F.add(sum, F.mul(k.b, F.mul(y, y)));
    sum = F.add(sum, F.mul(k.c, F.mul(z, z)));
    sum = F.add(sum, F.mul(two, F.mul(k.d, F.mul(x, y))));
    sum = F.add(sum, F.mul(two, F.mul(k.e, F.mul(x, z))));
    sum = F.add(sum, F.mul(two, F.mul(k.f, F.mul(y, z))));
    return sum;
}

inline FieldElement conic_determinant(const Field& F, const Conic& k) {
    const ProjectivePoint r0{k.a, k.d, k.e}, r1{k.d, k.b, k.f}, r2{k.e, k.f, k.c};
    return ProjectivePlane::det3(F, r0, r1, r2);
}

inline std::vector<Point> conic_points(const ProjectivePlane& plane, const Conic& k) {
    std::vector<Point> pts;
    for (Point i = 0; i < plane.size(); ++i)
        if (conic_form(plane.field(), k, plane.point(i)) == plane.field().zero()) pts.push_back(i);
    return pts;
}

/// No three points collinear.
inline bool is_arc(const ProjectivePlane& plane, const std::vector<Point>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (plane.collinear(pts[i], pts[j], pts[k])) return false;
    return true;
}

struct ConicEnumeration {
    ProjectivePlane plane;
    std::vector<Conic> conics;
};

/// All nondegenerate conics of PG(2, q), q odd, by scanning every projective
/// class of symmetric 3x3 matrices. The count is checked against q^5 - q^2.
inline ConicEnumeration enumerate_conics(std::uint64_t q, std::uint32_t max_order = kDefaultConicMaxOrder) {
    const auto pp = as_prime_power(q);
    if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
    if (pp->p == 2) throw Error(ErrorCode::EvenCharacteristic, "conic enumeration needs odd q");
    if (q > max_order)
        throw Error(ErrorCode::BudgetExceeded, "conic enumeration limited to q <= " + std::to_string(max_order));
    ConicEnumeration out{ProjectivePlane(Field::make(pp->p, pp->k)), {}};
    const Field& F = out.plane.field();
    const std::uint32_t qq = F.q();

    std::set<std::vector<Point>> seen;
    // coefficient order a, d, e, b, f, c is row-major order of the upper triangle
    std::array<std::uint32_t, 6> t{};
    const std::uint64_t total = checked_pow(qq, 6);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t v = code;
        for (int i = 5; i >= 0; --i) {
            t[i] = static_cast<std::uint32_t>(v % qq);
            v /= qq;
        }
        int lead = 0;
        while (lead < 6 && t[lead] == 0) ++lead;
        if (lead == 6 || t[lead] != 1) continue;
        Conic k{{t[0]}, {t[3]}, {t[5]}, {t[1]}, {t[2]}, {t[4]}, {}};
        if (conic_determinant(F, k) == F.zero()) continue;
        k.points = conic_points(out.plane, k);
        if (!seen.insert(k.points).second) continue;
        out.conics.push_back(std::move(k));
    }
    const std::uint64_t expected = checked_pow(q, 5) - q * q;
    if (out.conics.size() != expected)
        throw Error(ErrorCode::ConstructionFailed, "found " + std::to_string(out.conics.size()) +
                                                       " conics, expected q^5 - q^2 = " + std::to_string(expected));
    return out;
}

inline std::vector<const Conic*> conics_through_point(const ConicEnumeration& e, Point p) {
    std::vector<const Conic*> out;
    for (const auto& k : e.conics)
        if (k.contains(p)) out.push_back(&k);
    return out;
}

struct ConicDesign {
    Design design;
    CoverageReport coverage;
    std::uint64_t expected_covered = 0;
    bool matches_formula = false;
};

/// r = 4: conics through P = (1,0,0) with P removed, on PG(2,q) minus P.
/// r = 5: all conics on all of PG(2,q).
inline ConicDesign build_conic_design(const ConicEnumeration& e, std::uint32_t r, const CensusOptions& opts = {}) {
    const std::uint64_t q = e.plane.field().q();
    if (r != 4 && r != 5) throw Error(ErrorCode::BadParams, "conic designs exist for r in {4, 5}");
    const std::uint64_t block_size = r == 4 ? q : q + 1;
    if (block_size < r)
        throw Error(ErrorCode::BadParams, "q = " + std::to_string(q) + " gives blocks too small to cover " +
                                              std::to_string(r) + "-sets");
    ConicDesign out;
    std::vector<Block> blocks;
    const std::string label = "conics q=" + std::to_string(q) + " r=" + std::to_string(r);
    if (r == 4) {
        const Point P = e.plane.index_of({FieldElement{1}, FieldElement{0}, FieldElement{0}});
        for (const auto* k : conics_through_point(e, P)) {
            Block b;
            for (Point x : k->points)
                if (x != P) b.push_back(x > P ? x - 1 : x);
            blocks.push_back(std::move(b));
        }
        out.design = Design(e.plane.size() - 1, 4, std::move(blocks), label);
        out.expected_covered = (q * q * q * q - q * q) * binomial(q, 4);
    } else {
        for (const auto& k : e.conics) blocks.push_back(k.points);
        out.design = Design(e.plane.size(), 5, std::move(blocks), label);
        out.expected_covered = (checked_pow(q, 5) - q * q) * binomial(q + 1, 5);
    }
    out.coverage = verify_coverage(out.design, CoverageMode::Packing, opts);
    out.matches_formula = out.coverage.is_packing && out.coverage.covered_once == out.expected_covered;
    return out;
}

inline ConicDesign build_conic_design(std::uint64_t q, std::uint32_t r, const CensusOptions& opts = {}) {
    if (r == 4 && q < 4) throw Error(ErrorCode::BadParams, "r = 4 conic design is degenerate for q < 4");
    if (r == 5 && q + 1 < 5) throw Error(ErrorCode::BadParams, "r = 5 conic design is degenerate for q < 4");
    return build_conic_design(enumerate_conics(q), r, opts);
}

}  // namespace cliquepart
