#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquepart/bounds.hpp"
#include "cliquepart/design.hpp"

namespace cliquepart {

/// m x n bipartite graph; row i is the neighbourhood of A-side vertex i.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::uint32_t m, std::uint32_t n) : m_(m), n_(n), words_((n + 63) / 64), bits_(std::size_t{m} * words_, 0) {}

    [[nodiscard]] std::uint32_t m() const { return m_; }
    [[nodiscard]] std::uint32_t n() const { return n_; }
    [[nodiscard]] std::uint64_t edge_count() const { return edges_; }

    void set(std::uint32_t i, std::uint32_t j) {
        auto& w = bits_[std::size_t{i} * words_ + j / 64];
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        if (!(w & bit)) {
            w |= bit;
            ++edges_;
        }
    }
    [[nodiscard]] bool test(std::uint32_t i, std::uint32_t j) const {
        return bits_[std::size_t{i} * words_ + j / 64] >> (j % 64) & 1u;
    }
    /// |N(i) ∩ N(j)|
    [[nodiscard]] std::uint32_t common(std::uint32_t i, std::uint32_t j) const {
        std::uint32_t c = 0;
        for (std::uint32_t w = 0; w < words_; ++w)
            c += static_cast<std::uint32_t>(std::popcount(bits_[std::size_t{i} * words_ + w] & bits_[std::size_t{j} * words_ + w]));
        return c;
    }
    [[nodiscard]] std::uint32_t degree(std::uint32_t i) const {
        std::uint32_t c = 0;
        for (std::uint32_t w = 0; w < words_; ++w) c += static_cast<std::uint32_t>(std::popcount(bits_[std::size_t{i} * words_ + w]));
        return c;
    }
    /// Row i as a string of '0'/'1', column 0 first.
    [[nodiscard]] std::string row_string(std::uint32_t i) const {
        std::string s(n_, '0');
        for (std::uint32_t j = 0; j < n_; ++j)
            if (test(i, j)) s[j] = '1';
        return s;
    }

private:
    std::uint32_t m_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::uint64_t edges_ = 0;
};

/// Blocks on the A side, points on the B side.
inline BipartiteGraph incidence_graph(const Design& d) {
    BipartiteGraph g(static_cast<std::uint32_t>(d.size()), d.n());
    for (std::uint32_t i = 0; i < d.size(); ++i)
        for (Point x : d.blocks()[i]) g.set(i, x);
    return g;
}

struct FreenessResult {
    bool free = true;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> violation;  // first offending row pair
};

/// True iff no two A-side rows share r or more columns.
inline FreenessResult ktwo_r_free(const BipartiteGraph& g, std::uint32_t r) {
    FreenessResult res;
    for (std::uint32_t i = 0; i < g.m(); ++i)
        for (std::uint32_t j = i + 1; j < g.m(); ++j)
            if (g.common(i, j) >= r) {
                res.free = false;
                res.violation = std::make_pair(i, j);
                return res;
            }
    return res;
}

/// Largest e with m C(e/m, r) <= C(n, r); an upper bound on z(m, n, 2, r).
/// The left side increases in e once e/m >= r - 1, where it starts at 0.
inline std::uint64_t convexity_upper_bound(std::uint64_t m, std::uint64_t n, std::uint32_t r) {
    if (m < 1 || n < 1 || r < 2) throw Error(ErrorCode::BadParams, "convexity bound needs m, n >= 1 and r >= 2");
    const std::uint64_t full = m * n;
    if (n < r) return full;
    const Rational total(big_binomial(n, r));
    const auto ok = [&](std::uint64_t e) {
        return Rational(m) * generalized_binomial(Rational(BigInt(e), BigInt(m)), r) <= total;
    };
    std::uint64_t lo = std::min<std::uint64_t>(m * (r - 1), full);  // ok(lo)
    if (ok(full)) return full;
    std::uint64_t hi = full;  // !ok(hi)
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (ok(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

struct EqualBlockZReport {
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    std::uint32_t r = 0;
    std::uint64_t k = 0;
    std::uint64_t km = 0;
    std::uint64_t edges = 0;
    bool k2r_free = false;
    std::uint64_t upper_bound = 0;  // convexity bound
    bool meets = false;             // edges == km and free: z(m, n, 2, r) >= km
    bool exact = false;             // additionally upper_bound == km
};

/// Equal-size-block partition to a certified z(m, n, 2, r) >= km, and = km
/// when the convexity bound closes the gap.
inline EqualBlockZReport z_from_equal_blocks(const Design& d) {
    if (d.empty()) throw Error(ErrorCode::BadParams, "design has no blocks");
    const std::uint64_t k = d.blocks().front().size();
    for (const auto& b : d.blocks())
        if (b.size() != k) throw Error(ErrorCode::UnequalBlockSizes, "blocks of sizes " + std::to_string(k) + " and " + std::to_string(b.size()));
    EqualBlockZReport rep;
    rep.m = d.size();
    rep.n = d.n();
    rep.r = d.r();
    rep.k = k;
    if (big_binomial(rep.m, 1) * big_binomial(k, d.r()) != big_binomial(rep.n, d.r()))
        throw Error(ErrorCode::CardinalityMismatch, "m C(k, r) != C(n, r)");
    const auto g = incidence_graph(d);
    rep.km = k * rep.m;
    rep.edges = g.edge_count();
    rep.k2r_free = ktwo_r_free(g, d.r()).free;
    rep.upper_bound = convexity_upper_bound(rep.m, rep.n, d.r());
    rep.meets = rep.k2r_free && rep.edges == rep.km;
    rep.exact = rep.meets && rep.upper_bound == rep.km;
    return rep;
}

struct ZInstance {
    std::uint32_t m = 0, n = 0, s = 0, t = 0;
    std::uint64_t value = 0;
    BipartiteGraph witness;
    bool exact = false;
    std::uint64_t nodes = 0;
};

namespace detail {

class ZSearch {
public:
    ZSearch(std::uint32_t m, std::uint32_t n, std::uint32_t s, std::uint32_t t, std::chrono::steady_clock::time_point deadline)
        : m_(m), n_(n), s_(s), t_(t), deadline_(deadline) {
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) candidates_.push_back(v);
        std::stable_sort(candidates_.begin(), candidates_.end(), [](auto a, auto b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa > pb : a > b;
        });
    }

    void run() {
        rows_.clear();
        dfs(~std::uint64_t{0} >> (64 - n_), 0);
    }

    std::uint64_t best = 0;
    std::vector<std::uint64_t> best_rows;
    bool timed_out = false;
    std::uint64_t nodes = 0;

private:
    // does adding `row` create s rows sharing t columns?
    bool violates(std::uint64_t row) const {
        if (s_ == 1) return std::popcount(row) >= static_cast<int>(t_);
        return violates_from(row, 0, s_ - 1);
    }
    bool violates_from(std::uint64_t acc, std::size_t start, std::uint32_t need) const {
        if (std::popcount(acc) < static_cast<int>(t_)) return false;
        if (need == 0) return true;
        for (std::size_t i = start; i + need <= rows_.size(); ++i)
            if (violates_from(acc & rows_[i], i + 1, need - 1)) return true;
        return false;
    }

    void dfs(std::uint64_t max_row, std::uint64_t edges) {
        if (timed_out) return;
        if ((++nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
            timed_out = true;
            return;
        }
        const std::uint64_t remaining = m_ - rows_.size();
        if (remaining == 0) {
            if (edges > best || best_rows.empty()) {
                best = edges;
                best_rows = rows_;
            }
            return;
        }
        for (std::uint64_t v : candidates_) {
            if (v > max_row) continue;
            // rows are taken in nonincreasing integer order; weights in
            // later rows are at most n each
            if (edges + std::popcount(v) + (remaining - 1) * n_ <= best && !best_rows.empty()) break;
            if (violates(v)) continue;
            rows_.push_back(v);
            dfs(v, edges + std::popcount(v));
            rows_.pop_back();
            if (timed_out) return;
        }
    }

    std::uint32_t m_, n_, s_, t_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<std::uint64_t> candidates_;
    std::vector<std::uint64_t> rows_;
};

}  // namespace detail

inline constexpr std::uint32_t kMaxBruteZColumns = 20;

/// Exact z(m, n, s, t) by complete branch-and-bound over row-sorted matrices
/// (rows nonincreasing as integers, which removes row permutations). On
/// timeout the best matrix found so far is returned with exact = false.
inline ZInstance brute_z(std::uint32_t m, std::uint32_t n, std::uint32_t s, std::uint32_t t,
                         std::chrono::milliseconds time_limit = std::chrono::seconds(60)) {
    if (m < 1 || n < 1 || s < 1 || t < 1) throw Error(ErrorCode::BadParams, "z(m, n, s, t) needs all parameters >= 1");
    ZInstance out{m, n, s, t, 0, BipartiteGraph(m, n), false, 0};
    if (s > m || t > n) {
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < n; ++j) out.witness.set(i, j);
        out.value = std::uint64_t{m} * n;
        out.exact = true;
        return out;
    }
    if (n > kMaxBruteZColumns)
        throw Error(ErrorCode::BudgetExceeded, "brute-force z limited to n <= " + std::to_string(kMaxBruteZColumns));
    detail::ZSearch search(m, n, s, t, std::chrono::steady_clock::now() + time_limit);
    search.run();
    out.value = search.best;
    out.exact = !search.timed_out;
    out.nodes = search.nodes;
    for (std::uint32_t i = 0; i < search.best_rows.size(); ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (search.best_rows[i] >> j & 1u) out.witness.set(i, j);
    return out;
}

}  // namespace cliquepart
