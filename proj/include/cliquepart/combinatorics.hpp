#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cliquepart/error.hpp"

namespace cliquepart {

using Point = std::uint32_t;

/// Exact C(n, k) in 64 bits; throws Overflow instead of wrapping.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is exact at every step
        const std::uint64_t factor = n - k + i;
        const unsigned __int128 wide = static_cast<unsigned __int128>(result) * factor / i;
        if (wide > std::numeric_limits<std::uint64_t>::max())
            throw Error(ErrorCode::Overflow, "binomial coefficient exceeds 64 bits");
        result = static_cast<std::uint64_t>(wide);
    }
    return result;
}

inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            throw Error(ErrorCode::Overflow, "integer power exceeds 64 bits");
        result *= base;
    }
    return result;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

struct PrimePower {
    std::uint32_t p;
    unsigned k;
};

inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;  // q itself is prime
    unsigned k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{static_cast<std::uint32_t>(p), k};
}

/// Binomial table sized for colexicographic ranking of r-subsets of [n].
class ColexRanker {
public:
    ColexRanker(std::uint32_t n, std::uint32_t r) : n_(n), r_(r), table_((n + 1) * (r + 1), 0) {
        for (std::uint32_t m = 0; m <= n; ++m)
            for (std::uint32_t j = 0; j <= r; ++j) table_[m * (r + 1) + j] = binomial(m, j);
    }

    [[nodiscard]] std::uint64_t choose(std::uint32_t m, std::uint32_t j) const {
        return table_[m * (r_ + 1) + j];
    }
    [[nodiscard]] std::uint64_t total() const { return choose(n_, r_); }
    [[nodiscard]] std::uint32_t n() const { return n_; }
    [[nodiscard]] std::uint32_t r() const { return r_; }

    /// rank({c_1 < ... < c_r}) = sum_i C(c_i, i)
    [[nodiscard]] std::uint64_t rank(std::span<const Point> sorted_set) const {
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < sorted_set.size(); ++i) acc += choose(sorted_set[i], i + 1);
        return acc;
    }

    [[nodiscard]] std::vector<Point> unrank(std::uint64_t rank) const {
        std::vector<Point> out(r_);
        std::uint32_t m = n_;
        for (std::uint32_t i = r_; i > 0; --i) {
            // largest c with C(c, i) <= rank
            while (choose(m, i) > rank) --m;
            out[i - 1] = m;
            rank -= choose(m, i);
        }
        return out;
    }

private:
    std::uint32_t n_;
    std::uint32_t r_;
    std::vector<std::uint64_t> table_;
};

/// Calls fn(subset) for every r-subset of `items`, in lexicographic order of
/// positions. `items` must be sorted for the subsets to come out sorted.
/// fn returns false to stop early.
template <class Fn>
bool for_each_subset(std::span<const Point> items, std::uint32_t r, Fn&& fn) {
    const auto size = static_cast<std::uint32_t>(items.size());
    if (r > size) return true;
    std::vector<std::uint32_t> pos(r);
    std::vector<Point> subset(r);
    for (std::uint32_t i = 0; i < r; ++i) pos[i] = i;
    while (true) {
        for (std::uint32_t i = 0; i < r; ++i) subset[i] = items[pos[i]];
        if (!fn(std::span<const Point>(subset))) return false;
        std::int64_t i = static_cast<std::int64_t>(r) - 1;
        while (i >= 0 && pos[i] == size - r + static_cast<std::uint32_t>(i)) --i;
        if (i < 0) return true;
        ++pos[i];
        for (auto j = static_cast<std::uint32_t>(i) + 1; j < r; ++j) pos[j] = pos[j - 1] + 1;
    }
}

/// Every r-subset of [0, n) in lexicographic order.
template <class Fn>
bool for_each_rset(std::uint32_t n, std::uint32_t r, Fn&& fn) {
    std::vector<Point> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    return for_each_subset(std::span<const Point>(all), r, std::forward<Fn>(fn));
}

}  // namespace cliquepart
