#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquepart/surd.hpp"

namespace cliquepart {

/// x (x-1) ... (x-r+1) / r! at any rational x.
inline Rational generalized_binomial(const Rational& x, std::uint32_t r) {
    Rational acc = 1;
    for (std::uint32_t i = 0; i < r; ++i) acc *= (x - Rational(i)) / Rational(i + 1);
    return acc;
}

inline QuadraticSurd generalized_binomial(const QuadraticSurd& x, std::uint32_t r) {
    QuadraticSurd acc = QuadraticSurd::rational(1, x.d());
    for (std::uint32_t i = 0; i < r; ++i) acc = acc * (x - Rational(i)) / Rational(i + 1);
    return acc;
}

inline BigInt big_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

struct PhiResult {
    std::uint64_t n = 0;
    std::uint32_t r = 0;
    QuadraticSurd q;    // positive root of q^2 + q + r - 1 = n
    QuadraticSurd phi;  // C(n, r) / C(q + r - 1, r)
    BigInt phi_ceiling = 0;
    bool q_is_integer = false;
};

/// Positive real q with n = q^2 + q + r - 1, as (-1 + sqrt(4(n - r + 1) + 1)) / 2.
inline QuadraticSurd real_order(std::uint64_t n, std::uint32_t r) {
    const BigInt d = BigInt(4) * (BigInt(n) - r + 1) + 1;
    return QuadraticSurd(Rational(-1, 2), Rational(1, 2), d);
}

/// Lower bound cp(n, r) >= C(n, r) / C(q + r - 1, r), evaluated exactly.
inline PhiResult phi(std::uint64_t n, std::uint32_t r) {
    if (r < 2 || n <= r) throw Error(ErrorCode::BadParams, "phi needs n > r >= 2");
    PhiResult res;
    res.n = n;
    res.r = r;
    res.q = real_order(n, r);
    res.q_is_integer = res.q.is_rational() && boost::multiprecision::denominator(res.q.a()) == 1;
    const QuadraticSurd denom = generalized_binomial(res.q + Rational(r - 1), r);
    res.phi = Rational(big_binomial(n, r)) / denom;
    res.phi_ceiling = res.phi.ceil();
    return res;
}

/// phi(n, r) (q + r - 1) == n phi(n - 1, r - 1), checked exactly; both sides
/// share the same q.
inline bool identity_check_phi(std::uint64_t n, std::uint32_t r) {
    if (r < 3 || n <= r) throw Error(ErrorCode::BadParams, "identity check needs n > r >= 3");
    const PhiResult big = phi(n, r);
    const PhiResult small = phi(n - 1, r - 1);
    return big.phi * (big.q + Rational(r - 1)) == small.phi * Rational(n);
}

/// Least integer x >= 1 with x * C(nL / x, r) <= C(n, r), where L is a
/// certified lower bound on cp(n-1, r-1). The left side is nonincreasing while
/// nL / x >= r - 1, and at the first x with nL / x <= r - 1 it is <= 0, so a
/// binary search over that prefix finds the least admissible x.
inline BigInt link_lower_bound(std::uint64_t n, std::uint32_t r, std::uint64_t lower_bound) {
    if (r < 2 || n <= r) throw Error(ErrorCode::BadParams, "link bound needs n > r >= 2");
    if (lower_bound < 1) throw Error(ErrorCode::BadParams, "lower bound L must be >= 1");
    const BigInt c = BigInt(n) * lower_bound;
    const Rational total(big_binomial(n, r));
    const auto admissible = [&](const BigInt& x) {
        return Rational(x) * generalized_binomial(Rational(c, x), r) <= total;
    };
    BigInt lo = 1;
    BigInt hi = ceil_rational(Rational(c, r - 1));
    if (hi < 1) hi = 1;
    if (admissible(lo)) return lo;
    if (!admissible(hi))
        throw Error(ErrorCode::BadParams, "n L = " + c.str() + " is too small relative to r for the bound to apply");
    // invariant: admissible(hi) and !admissible(lo)
    while (hi - lo > 1) {
        const BigInt mid = (lo + hi) / 2;
        if (admissible(mid)) hi = mid;
        else lo = mid;
    }
    return hi;
}

struct DivisibilityProfile {
    std::uint32_t r = 0;
    std::uint64_t q_max = 0;
    std::vector<std::uint64_t> admissible;  // Q_r restricted to [1, q_max]
};

/// Necessary divisibility for a Steiner (q^2+q+r-1, q+r-1, r)-system:
/// prod_{j=1}^{r-i} (q + r - i - j) divides prod_{j=1}^{r-i} (q^2 + q + r - i - j)
/// for every i in [0, r-1].
inline bool steiner_divisibility(std::uint64_t q, std::uint32_t r) {
    for (std::uint32_t i = 0; i < r; ++i) {
        BigInt lhs = 1, rhs = 1;
        for (std::uint32_t j = 1; j <= r - i; ++j) {
            lhs *= BigInt(q) + r - i - j;
            rhs *= BigInt(q) * q + q + r - i - j;
        }
        if (rhs % lhs != 0) return false;
    }
    return true;
}

inline DivisibilityProfile qr_sieve(std::uint32_t r, std::uint64_t q_max) {
    if (r < 3 || q_max < 1) throw Error(ErrorCode::BadParams, "sieve needs r >= 3 and q_max >= 1");
    DivisibilityProfile out{r, q_max, {}};
    for (std::uint64_t q = 1; q <= q_max; ++q)
        if (steiner_divisibility(q, r)) out.admissible.push_back(q);
    return out;
}

struct ChebyshevResult {
    Rational lhs;  // sum f g
    Rational rhs;  // (1/p) (sum f) (sum g)
    bool holds = false;
};

inline ChebyshevResult chebyshev_sum_check(std::span<const std::uint64_t> f, std::span<const std::uint64_t> g) {
    if (f.size() != g.size() || f.size() < 2)
        throw Error(ErrorCode::BadParams, "sequences must have equal length >= 2");
    BigInt sf = 0, sg = 0, sfg = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0 || g[i] == 0) throw Error(ErrorCode::BadParams, "sequences must be positive");
        if (i && (f[i] < f[i - 1] || g[i] < g[i - 1])) throw Error(ErrorCode::NotMonotone, "sequences must be nondecreasing");
        sf += f[i];
        sg += g[i];
        sfg += BigInt(f[i]) * g[i];
    }
    ChebyshevResult res;
    res.lhs = Rational(sfg);
    res.rhs = Rational(sf * sg, BigInt(f.size()));
    res.holds = res.lhs >= res.rhs;
    return res;
}

struct KnownCp {
    std::uint64_t n;
    std::uint32_t r;
    std::uint64_t cp;
    const char* source;
};

/// Lower bound cp(20, 2) >= 21 from the classification of linear spaces with
/// few lines; an input constant, not derived here.
inline constexpr std::uint64_t kCp20_2LowerBound = 21;

inline const std::vector<KnownCp>& known_cp_table() {
    static const std::vector<KnownCp> table{
        {4, 3, 4, "phi(4,3) attained by all triples of [4]"},
        {8, 3, 14, "phi(8,3) attained by S(8,4,3)"},
        {22, 3, 77, "phi(22,3) attained by S(22,6,3)"},
        {5, 4, 5, "phi(5,4) attained by all 4-sets of [5]"},
        {23, 4, 253, "phi(23,4) attained by S(23,7,4)"},
        {6, 5, 6, "phi(6,5) attained by all 5-sets of [6]"},
        {24, 5, 759, "phi(24,5) attained by S(24,8,5)"},
        {21, 3, 77, "link bound from cp(20,2) >= 21, attained by deleting a point of S(22,6,3)"},
    };
    return table;
}

/// Known exact value, including cp(n, 2) = n.
inline std::optional<std::uint64_t> known_cp(std::uint64_t n, std::uint32_t r) {
    if (r == 2 && n >= 3) return n;
    for (const auto& e : known_cp_table())
        if (e.n == n && e.r == r) return e.cp;
    return std::nullopt;
}

enum class PlaneExistence { Exists, DoesNotExist, Unknown };

/// Tabled projective-plane orders only; everything else is reported unknown.
inline PlaneExistence projective_plane_exists(std::uint64_t order) {
    switch (order) {
        case 2: case 3: case 4: case 5: case 7: case 8: case 9: return PlaneExistence::Exists;
        case 10: return PlaneExistence::DoesNotExist;
        default: return PlaneExistence::Unknown;
    }
}

}  // namespace cliquepart
