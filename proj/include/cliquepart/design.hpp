#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cliquepart/combinatorics.hpp"
#include "cliquepart/error.hpp"
#include "cliquepart/parallel.hpp"

namespace cliquepart {

using Block = std::vector<Point>;

inline std::string block_to_string(std::span<const Point> block) {
    std::string s = "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(block[i]);
    }
    return s + "}";
}

/// A set system over points 0..n-1 whose blocks are meant to cover r-sets.
/// Blocks are strictly increasing, proper (r <= |B| < n), and pairwise distinct.
class Design {
public:
    Design() = default;

    Design(std::uint32_t n, std::uint32_t r, std::vector<Block> blocks, std::string label = {})
        : n_(n), r_(r), blocks_(std::move(blocks)), label_(std::move(label)) {
        validate();
    }

    [[nodiscard]] std::uint32_t n() const { return n_; }
    [[nodiscard]] std::uint32_t r() const { return r_; }
    [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] std::size_t size() const { return blocks_.size(); }
    [[nodiscard]] bool empty() const { return blocks_.empty(); }

    friend bool operator==(const Design&, const Design&) = default;

private:
    void validate() const {
        if (r_ < 1) throw Error(ErrorCode::InvariantViolation, "uniformity r must be >= 1");
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            const Block& b = blocks_[i];
            const auto name = [&] { return "block " + std::to_string(i) + " " + block_to_string(b); };
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (b[j] >= n_) throw Error(ErrorCode::InvariantViolation, name() + " has a point outside [0, n)");
                if (j && b[j - 1] >= b[j])
                    throw Error(ErrorCode::InvariantViolation, name() + " is not strictly increasing");
            }
            if (b.size() < r_) throw Error(ErrorCode::InvariantViolation, name() + " has fewer than r points");
            if (b.size() >= n_) throw Error(ErrorCode::InvariantViolation, name() + " is not a proper subset");
        }
        std::vector<std::size_t> order(blocks_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return blocks_[a] < blocks_[b]; });
        for (std::size_t i = 1; i < order.size(); ++i)
            if (blocks_[order[i - 1]] == blocks_[order[i]])
                throw Error(ErrorCode::InvariantViolation,
                            "block " + std::to_string(std::max(order[i - 1], order[i])) + " " +
                                block_to_string(blocks_[order[i]]) + " is a duplicate");
    }

    std::uint32_t n_ = 0;
    std::uint32_t r_ = 1;
    std::vector<Block> blocks_;
    std::string label_;
};

enum class CoverageMode { Partition, Packing };

inline constexpr std::uint64_t kDefaultRsetBudget = std::uint64_t{1} << 31;
inline constexpr std::size_t kMaxViolationSamples = 20;

struct CensusOptions {
    std::uint64_t budget = kDefaultRsetBudget;
    unsigned threads = 1;
};

struct CoverageReport {
    CoverageMode mode = CoverageMode::Partition;
    std::uint64_t total_rsets = 0;
    std::uint64_t covered_once = 0;
    std::uint64_t uncovered = 0;
    std::uint64_t multicovered = 0;
    std::vector<Block> violation_samples;  // lexicographically smallest first
    bool is_partition = false;
    bool is_packing = false;

    [[nodiscard]] bool passed() const { return mode == CoverageMode::Partition ? is_partition : is_packing; }
};

/// Multiplicity of every r-set, keyed by colex rank, saturating at 255.
class Census {
public:
    Census(const Design& d, const CensusOptions& opts) : ranker_(d.n(), d.r()) {
        const std::uint64_t total = ranker_.total();
        if (total > opts.budget)
            throw Error(ErrorCode::RsetSpaceTooLarge,
                        "C(" + std::to_string(d.n()) + "," + std::to_string(d.r()) + ") = " + std::to_string(total) +
                            " exceeds census budget " + std::to_string(opts.budget));
        counts_.assign(total, 0);
        const auto& blocks = d.blocks();
        const unsigned threads = resolve_threads(opts.threads);
        if (threads == 1) {
            for (const auto& b : blocks) add_block(b, [](std::uint8_t& c) { c = c == 255 ? c : c + 1; });
            return;
        }
        // Saturating addition commutes, so the shared table ends up identical
        // to the sequential one regardless of interleaving.
        parallel_chunks(blocks.size(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
            for (std::size_t i = begin; i < end; ++i)
                add_block(blocks[i], [](std::uint8_t& c) {
                    std::atomic_ref<std::uint8_t> cell(c);
                    std::uint8_t cur = cell.load(std::memory_order_relaxed);
                    while (cur != 255 && !cell.compare_exchange_weak(cur, cur + 1, std::memory_order_relaxed)) {
                    }
                });
        });
    }

    [[nodiscard]] const ColexRanker& ranker() const { return ranker_; }
    [[nodiscard]] std::uint8_t multiplicity(std::span<const Point> rset) const { return counts_[ranker_.rank(rset)]; }
    [[nodiscard]] const std::vector<std::uint8_t>& counts() const { return counts_; }

private:
    template <class Bump>
    void add_block(const Block& b, Bump bump) {
        for_each_subset(std::span<const Point>(b), ranker_.r(), [&](std::span<const Point> s) {
            bump(counts_[ranker_.rank(s)]);
            return true;
        });
    }

    ColexRanker ranker_;
    std::vector<std::uint8_t> counts_;
};

inline CoverageReport summarize(const Census& census, CoverageMode mode) {
    CoverageReport rep;
    rep.mode = mode;
    const auto& counts = census.counts();
    rep.total_rsets = counts.size();
    for (std::uint8_t c : counts) {
        if (c == 0) ++rep.uncovered;
        else if (c == 1) ++rep.covered_once;
        else ++rep.multicovered;
    }
    rep.is_packing = rep.multicovered == 0;
    rep.is_partition = rep.is_packing && rep.uncovered == 0;
    if (!rep.passed()) {
        const auto& ranker = census.ranker();
        const bool packing = mode == CoverageMode::Packing;
        for_each_rset(ranker.n(), ranker.r(), [&](std::span<const Point> s) {
            const auto c = counts[ranker.rank(s)];
            if (packing ? c > 1 : c != 1) rep.violation_samples.emplace_back(s.begin(), s.end());
            return rep.violation_samples.size() < kMaxViolationSamples;
        });
    }
    return rep;
}

/// Exact r-set multiplicity census of a design.
inline CoverageReport verify_coverage(const Design& d, CoverageMode mode = CoverageMode::Partition,
                                      const CensusOptions& opts = {}) {
    return summarize(Census(d, opts), mode);
}

struct LinkResult {
    Design design;
    bool degenerate = false;            // v lies in no block
    bool uniformity_underflow = false;  // result has r = 1; only good for statistics
};

/// Blocks through v with v removed; points above v shift down by one.
inline LinkResult derive_link(const Design& d, Point v) {
    if (v >= d.n()) throw Error(ErrorCode::BadParams, "link point " + std::to_string(v) + " outside [0, n)");
    if (d.r() < 2) throw Error(ErrorCode::UniformityUnderflow, "cannot take the link of a design with r < 2");
    std::vector<Block> blocks;
    for (const auto& b : d.blocks()) {
        if (!std::binary_search(b.begin(), b.end(), v)) continue;
        Block out;
        out.reserve(b.size() - 1);
        for (Point x : b)
            if (x != v) out.push_back(x > v ? x - 1 : x);
        blocks.push_back(std::move(out));
    }
    LinkResult res;
    res.degenerate = blocks.empty();
    res.uniformity_underflow = d.r() == 2;
    res.design = Design(d.n() - 1, d.r() - 1, std::move(blocks), "link v=" + std::to_string(v) + " of " + d.label());
    return res;
}

struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    friend bool operator==(const Fraction&, const Fraction&) = default;
    [[nodiscard]] double value() const { return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0; }
};

inline Fraction make_fraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0) return {0, 1};
    const auto g = std::gcd(num, den);
    return {num / (g ? g : 1), den / (g ? g : 1)};
}

struct PartitionStats {
    std::vector<std::uint32_t> sizes;  // nondecreasing
    std::uint64_t p = 0;
    Fraction average_size;
    std::uint64_t sum_sizes = 0;
    std::uint64_t sum_r_binomials = 0;
};

inline PartitionStats partition_stats(const Design& d) {
    PartitionStats s;
    s.p = d.size();
    for (const auto& b : d.blocks()) {
        s.sizes.push_back(static_cast<std::uint32_t>(b.size()));
        s.sum_sizes += b.size();
        s.sum_r_binomials += binomial(b.size(), d.r());
    }
    std::sort(s.sizes.begin(), s.sizes.end());
    s.average_size = make_fraction(s.sum_sizes, s.p);
    return s;
}

/// Number of blocks through each point, i.e. |P_v*| for every v.
inline std::vector<std::uint64_t> point_degrees(const Design& d) {
    std::vector<std::uint64_t> deg(d.n(), 0);
    for (const auto& b : d.blocks())
        for (Point x : b) ++deg[x];
    return deg;
}

/// For each point, indices of the blocks containing it (ascending).
inline std::vector<std::vector<std::uint32_t>> blocks_through_points(const Design& d) {
    std::vector<std::vector<std::uint32_t>> out(d.n());
    for (std::uint32_t i = 0; i < d.size(); ++i)
        for (Point x : d.blocks()[i]) out[x].push_back(i);
    return out;
}

/// One (n-1)-set plus the n-1 pairs joining the remaining point to it.
inline bool is_near_pencil(const Design& d) {
    if (d.r() != 2) throw Error(ErrorCode::WrongUniformity, "near-pencil test needs r = 2");
    const std::uint32_t n = d.n();
    if (n < 3 || d.size() != n) return false;
    for (const auto& big : d.blocks()) {
        if (big.size() != n - 1) continue;
        // the excluded point is the one missing from `big`
        Point excluded = n - 1;
        for (Point i = 0; i + 1 < n; ++i)
            if (big[i] != i) {
                excluded = i;
                break;
            }
        std::vector<bool> seen(n, false);
        bool ok = true;
        for (const auto& b : d.blocks()) {
            if (&b == &big) continue;
            if (b.size() != 2 || (b[0] != excluded && b[1] != excluded)) {
                ok = false;
                break;
            }
            const Point other = b[0] == excluded ? b[1] : b[0];
            if (seen[other]) {
                ok = false;
                break;
            }
            seen[other] = true;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace cliquepart
