#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cliquepart/combinatorics.hpp"
#include "cliquepart/error.hpp"

namespace cliquepart {

/// An element of GF(p^k), identified by its canonical index
/// sum_i c_i p^i where c_0 is the constant coefficient.
struct FieldElement {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

enum class FieldOp { Add, Sub, Mul, Div, Neg, Inv, Pow };

inline constexpr std::uint64_t kDefaultOrderCap = std::uint64_t{1} << 20;

namespace detail {

using Poly = std::vector<std::uint64_t>;  // constant term first, over F_p

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // p prime, a != 0 mod p
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

inline Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint64_t lead_inv = inv_mod(f.back(), p);
    while (a.size() >= f.size()) {
        const std::uint64_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) a[shift + i] = (a[shift + i] + (p - factor) * f[i]) % p;
        trim(a);
    }
    return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mod(poly_mul(result, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// f monic of degree k. Irreducible iff gcd(x^(p^i) - x, f) = 1 for 1 <= i <= k/2;
/// the i = 1 step is exactly the "no roots" test.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k <= 1) return k == 1;
    Poly h{0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        h = poly_powmod(h, p, f, p);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) return false;  // f divides x^(p^i) - x
        if (poly_gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// GF(p^k) with the lexicographically smallest monic irreducible modulus.
/// Immutable once built; copies share the lookup tables.
class Field {
public:
    static Field make(std::uint32_t p, unsigned k, std::uint64_t order_cap = kDefaultOrderCap) {
        if (k < 1) throw Error(ErrorCode::BadParams, "field exponent must be >= 1");
        if (!is_prime(p)) throw Error(ErrorCode::CompositeP, std::to_string(p) + " is not prime");
        std::uint64_t q = 1;
        for (unsigned i = 0; i < k; ++i) {
            q *= p;
            if (q > order_cap)
                throw Error(ErrorCode::CapExceeded,
                            std::to_string(p) + "^" + std::to_string(k) + " exceeds order cap " +
                                std::to_string(order_cap));
        }
        return Field(p, k, static_cast<std::uint32_t>(q));
    }

    /// Field of prime-power order q.
    static Field of_order(std::uint64_t q, std::uint64_t order_cap = kDefaultOrderCap) {
        const auto pp = as_prime_power(q);
        if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
        return make(pp->p, pp->k, order_cap);
    }

    [[nodiscard]] std::uint32_t p() const { return p_; }
    [[nodiscard]] unsigned k() const { return k_; }
    [[nodiscard]] std::uint32_t q() const { return q_; }
    /// Monic modulus, constant term first. For k = 1 this is the placeholder x.
    [[nodiscard]] const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    [[nodiscard]] FieldElement zero() const { return {0}; }
    [[nodiscard]] FieldElement one() const { return {1}; }
    [[nodiscard]] FieldElement element(std::uint32_t index) const {
        if (index >= q_) throw Error(ErrorCode::BadParams, "element index out of range");
        return {index};
    }
    /// Image of an integer in the prime subfield.
    [[nodiscard]] FieldElement from_int(std::int64_t v) const {
        const auto p = static_cast<std::int64_t>(p_);
        return {static_cast<std::uint32_t>(((v % p) + p) % p)};
    }

    [[nodiscard]] std::vector<std::uint64_t> coeffs(FieldElement a) const {
        std::vector<std::uint64_t> out(k_);
        std::uint32_t v = a.index;
        for (unsigned i = 0; i < k_; ++i) {
            out[i] = v % p_;
            v /= p_;
        }
        return out;
    }

    [[nodiscard]] FieldElement from_coeffs(const std::vector<std::uint64_t>& c) const {
        std::uint64_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (i >= k_ && c[i] % p_ != 0)
                throw Error(ErrorCode::BadParams, "coefficient vector longer than field degree");
            if (i < k_) idx = idx * p_ + c[i] % p_;
        }
        return {static_cast<std::uint32_t>(idx)};
    }

    [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const {
        if (k_ == 1) return {(a.index + b.index) % p_};
        if (p_ == 2) return {a.index ^ b.index};
        if (!tables_->add.empty()) return {tables_->add[a.index * q_ + b.index]};
        return add_digits(a, b);
    }

    [[nodiscard]] FieldElement neg(FieldElement a) const { return {tables_->neg[a.index]}; }
    [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

    [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.index == 0 || b.index == 0) return zero();
        const auto& t = *tables_;
        std::uint32_t e = t.log[a.index] + t.log[b.index];
        if (e >= q_ - 1) e -= q_ - 1;
        return {t.exp[e]};
    }

    /// Multiplication by polynomial product reduced mod the modulus. Slow
    /// reference path that does not touch the log tables.
    [[nodiscard]] FieldElement mul_poly(FieldElement a, FieldElement b) const {
        return from_poly(detail::poly_mod(detail::poly_mul(to_poly(a), to_poly(b), p_), modulus_, p_));
    }

    [[nodiscard]] FieldElement inv(FieldElement a) const {
        if (a.index == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
        const auto& t = *tables_;
        const std::uint32_t l = t.log[a.index];
        return {t.exp[l == 0 ? 0 : q_ - 1 - l]};
    }

    [[nodiscard]] FieldElement div(FieldElement a, FieldElement b) const {
        if (b.index == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
        return mul(a, inv(b));
    }

    [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t e) const {
        if (e == 0) return one();
        if (a.index == 0) return zero();
        const auto& t = *tables_;
        const std::uint64_t l = (static_cast<std::uint64_t>(t.log[a.index]) * (e % (q_ - 1))) % (q_ - 1);
        return {t.exp[l]};
    }

    [[nodiscard]] FieldElement apply(FieldOp op, FieldElement a, FieldElement b = {0}, std::uint64_t e = 0) const {
        switch (op) {
            case FieldOp::Add: return add(a, b);
            case FieldOp::Sub: return sub(a, b);
            case FieldOp::Mul: return mul(a, b);
            case FieldOp::Div: return div(a, b);
            case FieldOp::Neg: return neg(a);
            case FieldOp::Inv: return inv(a);
            case FieldOp::Pow: return pow(a, e);
        }
        return a;
    }

    /// Quadratic character: 0 at zero, +1 on nonzero squares, -1 otherwise.
    [[nodiscard]] int chi(FieldElement a) const {
        require_odd();
        if (a.index == 0) return 0;
        return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
    }

    /// Square roots of a: empty for non-squares, {0} for zero, otherwise
    /// {s, -s} with the smaller index first.
    [[nodiscard]] std::vector<FieldElement> sqrt(FieldElement a) const {
        require_odd();
        if (a.index == 0) return {zero()};
        const std::uint32_t l = tables_->log[a.index];
        if (l % 2 != 0) return {};
        FieldElement s{tables_->exp[l / 2]};
        FieldElement t = neg(s);
        if (t < s) std::swap(s, t);
        return {s, t};
    }

    [[nodiscard]] FieldElement primitive_element() const { return {tables_->exp[q_ > 1 ? 1 : 0]}; }

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_ && a.k_ == b.k_; }

private:
    struct Tables {
        std::vector<std::uint32_t> exp;  // exp[i] = g^i, i in [0, q-1)
        std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
        std::vector<std::uint32_t> neg;
        std::vector<std::uint32_t> add;  // dense q*q table for small q only
    };

    static constexpr std::uint32_t kAddTableMaxOrder = 256;

    Field(std::uint32_t p, unsigned k, std::uint32_t q) : p_(p), k_(k), q_(q) {
        modulus_ = smallest_irreducible();
        auto tables = std::make_shared<Tables>();
        tables->neg.resize(q_);
        for (std::uint32_t i = 0; i < q_; ++i) {
            auto c = coeffs({i});
            for (auto& x : c) x = (p_ - x) % p_;
            tables->neg[i] = from_coeffs(c).index;
        }
        if (k_ > 1 && p_ != 2 && q_ <= kAddTableMaxOrder) {
            tables->add.resize(static_cast<std::size_t>(q_) * q_);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b) tables->add[a * q_ + b] = add_digits({a}, {b}).index;
        }
        build_log_tables(*tables);
        tables_ = std::move(tables);
    }

    void require_odd() const {
        if (p_ == 2) throw Error(ErrorCode::EvenCharacteristic, "operation requires odd characteristic");
    }

    [[nodiscard]] FieldElement add_digits(FieldElement a, FieldElement b) const {
        std::uint32_t x = a.index, y = b.index, out = 0, place = 1;
        for (unsigned i = 0; i < k_; ++i) {
            out += ((x % p_ + y % p_) % p_) * place;
            x /= p_;
            y /= p_;
            place *= p_;
        }
        return {out};
    }

    [[nodiscard]] detail::Poly to_poly(FieldElement a) const {
        detail::Poly poly = coeffs(a);
        detail::trim(poly);
        return poly;
    }

    [[nodiscard]] FieldElement from_poly(const detail::Poly& poly) const {
        std::vector<std::uint64_t> c(k_, 0);
        for (std::size_t i = 0; i < poly.size() && i < k_; ++i) c[i] = poly[i];
        return from_coeffs(c);
    }

    // Lexicographic over (c_0, ..., c_{k-1}) with c_0 the most significant key.
    [[nodiscard]] detail::Poly smallest_irreducible() const {
        if (k_ == 1) return {0, 1};
        const std::uint64_t count = checked_pow(p_, k_);
        for (std::uint64_t t = 0; t < count; ++t) {
            detail::Poly f(k_ + 1, 0);
            std::uint64_t v = t;
            for (unsigned i = k_; i-- > 0;) {
                f[i] = v % p_;
                v /= p_;
            }
            f[k_] = 1;
            if (f[0] == 0) continue;
            if (detail::is_irreducible(f, p_)) return f;
        }
        throw Error(ErrorCode::ConstructionFailed, "no irreducible polynomial found");
    }

    void build_log_tables(Tables& t) const {
        const std::uint64_t order = q_ - 1;
        const auto factors = detail::prime_factors(order);
        FieldElement g{0};
        for (std::uint32_t cand = 1; cand < q_; ++cand) {
            bool primitive = true;
            for (auto f : factors) {
                if (pow_poly({cand}, order / f) == one()) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                g = {cand};
                break;
            }
        }
        t.exp.resize(order == 0 ? 1 : order);
        t.log.assign(q_, 0);
        FieldElement cur = one();
        for (std::uint64_t i = 0; i < order; ++i) {
            t.exp[i] = cur.index;
            t.log[cur.index] = static_cast<std::uint32_t>(i);
            cur = mul_poly(cur, g);
        }
        if (cur != one()) throw Error(ErrorCode::ConstructionFailed, "generator order mismatch");
    }

    [[nodiscard]] FieldElement pow_poly(FieldElement a, std::uint64_t e) const {
        return from_poly(detail::poly_powmod(to_poly(a), e, modulus_, p_));
    }

    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    detail::Poly modulus_;
    std::shared_ptr<const Tables> tables_;
};

}  // namespace cliquepart
