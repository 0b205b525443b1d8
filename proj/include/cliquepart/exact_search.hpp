#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquepart/bounds.hpp"
#include "cliquepart/design.hpp"

namespace cliquepart {

enum class LowerBoundOracle { Phi, LinkBound, None };

inline constexpr std::uint64_t kMaxSearchRsets = 10000;

struct SearchConfig {
    std::uint32_t n = 0;
    std::uint32_t r = 0;
    std::uint32_t max_block_size = 0;  // 0 means n - 1
    LowerBoundOracle lower_bound_oracle = LowerBoundOracle::Phi;
    std::chrono::milliseconds time_limit = std::chrono::seconds(60);
    std::optional<Design> upper_bound_seed;
    std::uint64_t max_rsets = kMaxSearchRsets;
};

struct PruneStats {
    std::uint64_t bound_prunes = 0;
    std::uint64_t candidates_tried = 0;
    bool stopped_at_lower_bound = false;
};

struct SearchResult {
    std::uint64_t optimum = 0;  // best found; optimal when proven_optimal
    Design certificate;
    bool proven_optimal = false;
    bool timed_out = false;
    std::uint64_t lower_bound = 0;
    std::uint64_t nodes_explored = 0;
    PruneStats prune_stats;
};

/// Certified lower bound on cp(n, r) from the chosen oracle.
inline std::uint64_t search_lower_bound(std::uint32_t n, std::uint32_t r, LowerBoundOracle oracle) {
    if (n <= r) return 1;
    switch (oracle) {
        case LowerBoundOracle::None: return 1;
        case LowerBoundOracle::LinkBound:
            if (r >= 3) {
                std::uint64_t link = 1;
                if (n - 1 > r - 1) link = static_cast<std::uint64_t>(phi(n - 1, r - 1).phi_ceiling);
                return static_cast<std::uint64_t>(link_lower_bound(n, r, link));
            }
            [[fallthrough]];
        case LowerBoundOracle::Phi: return static_cast<std::uint64_t>(phi(n, r).phi_ceiling);
    }
    return 1;
}

namespace detail {

class CpSearch {
public:
    CpSearch(const SearchConfig& cfg, std::uint64_t lower_bound)
        : n_(cfg.n), r_(cfg.r), kmax_(cfg.max_block_size), lb_(lower_bound), ranker_(cfg.n, cfg.r),
          deadline_(std::chrono::steady_clock::now() + cfg.time_limit) {
        covered_.assign(ranker_.total(), 0);
        per_block_ = binomial(kmax_, r_);
        for_each_rset(n_, r_, [&](std::span<const Point> s) {
            lex_rsets_.emplace_back(s.begin(), s.end());
            lex_ranks_.push_back(ranker_.rank(s));
            return true;
        });
    }

    void seed(std::vector<Block> blocks) {
        best_ = std::move(blocks);
    }

    void run() { dfs(0, ranker_.total()); }

    std::vector<Block> best_;
    std::vector<Block> current_;
    std::uint64_t nodes = 0;
    PruneStats stats;
    bool timed_out = false;
    bool done = false;

private:
    bool subsets_uncovered_with(const Block& base, Point p) const {
        // every r-subset of base + {p} that contains p
        bool ok = true;
        for_each_subset(std::span<const Point>(base), r_ - 1, [&](std::span<const Point> t) {
            Block s(t.begin(), t.end());
            s.insert(std::upper_bound(s.begin(), s.end(), p), p);
            if (covered_[ranker_.rank(s)]) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    }

    void extend(Block& block, Point from, std::vector<Block>& out) const {
        out.push_back(block);
        if (block.size() >= kmax_) return;
        for (Point p = from; p < n_; ++p) {
            if (std::binary_search(block.begin(), block.end(), p)) continue;
            if (!subsets_uncovered_with(block, p)) continue;
            Block next = block;
            next.insert(std::upper_bound(next.begin(), next.end(), p), p);
            extend(next, p + 1, out);
        }
    }

    void mark(const Block& b, std::uint8_t value) {
        for_each_subset(std::span<const Point>(b), r_, [&](std::span<const Point> s) {
            covered_[ranker_.rank(s)] = value;
            return true;
        });
    }

    void dfs(std::size_t cursor, std::uint64_t remaining) {
        if (done || timed_out) return;
        if ((++nodes & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline_) {
            timed_out = true;
            return;
        }
        const std::uint64_t used = current_.size();
        if (remaining == 0) {
            if (used < best_.size()) {
                best_ = current_;
                if (best_.size() <= lb_) {
                    stats.stopped_at_lower_bound = true;
                    done = true;
                }
            }
            return;
        }
        if (used + (remaining + per_block_ - 1) / per_block_ >= best_.size()) {
            ++stats.bound_prunes;
            return;
        }
        while (covered_[lex_ranks_[cursor]]) ++cursor;
        Block start = lex_rsets_[cursor];
        std::vector<Block> candidates;
        extend(start, 0, candidates);
        std::stable_sort(candidates.begin(), candidates.end(), [](const Block& a, const Block& b) {
            return a.size() != b.size() ? a.size() > b.size() : a < b;
        });
        for (const auto& b : candidates) {
            ++stats.candidates_tried;
            mark(b, 1);
            current_.push_back(b);
            dfs(cursor + 1, remaining - binomial(b.size(), r_));
            current_.pop_back();
            mark(b, 0);
            if (done || timed_out) return;
        }
    }

    std::uint32_t n_, r_, kmax_;
    std::uint64_t lb_;
    ColexRanker ranker_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<std::uint8_t> covered_;
    std::uint64_t per_block_ = 1;
    std::vector<Block> lex_rsets_;
    std::vector<std::uint64_t> lex_ranks_;
};

}  // namespace detail

/// Minimum clique partition of the r-subsets of [n] by exact-cover
/// branch-and-bound: branch on the lexicographically smallest uncovered
/// r-set, try every admissible superset (largest first).
inline SearchResult solve_cp(const SearchConfig& cfg_in) {
    SearchConfig cfg = cfg_in;
    if (cfg.r < 2 || cfg.n <= cfg.r) throw Error(ErrorCode::BadParams, "search needs n > r >= 2");
    if (cfg.max_block_size == 0) cfg.max_block_size = cfg.n - 1;
    if (cfg.max_block_size < cfg.r || cfg.max_block_size >= cfg.n)
        throw Error(ErrorCode::BadParams, "max block size must satisfy r <= size < n");
    const std::uint64_t total = binomial(cfg.n, cfg.r);
    if (total > cfg.max_rsets)
        throw Error(ErrorCode::RsetSpaceTooLarge, "C(n, r) = " + std::to_string(total) + " exceeds search limit " +
                                                      std::to_string(cfg.max_rsets));

    SearchResult res;
    res.lower_bound = search_lower_bound(cfg.n, cfg.r, cfg.lower_bound_oracle);
    detail::CpSearch search(cfg, res.lower_bound);

    std::vector<Block> seed;
    if (cfg.upper_bound_seed) {
        const Design& s = *cfg.upper_bound_seed;
        if (s.n() != cfg.n || s.r() != cfg.r || !verify_coverage(s).is_partition)
            throw Error(ErrorCode::InvariantViolation, "seed design is not a clique partition for (n, r)");
        seed = s.blocks();
    } else {
        for_each_rset(cfg.n, cfg.r, [&](std::span<const Point> rs) {
            seed.emplace_back(rs.begin(), rs.end());
            return true;
        });
    }
    search.seed(seed);
    if (search.best_.size() > res.lower_bound) search.run();

    auto blocks = search.best_;
    std::sort(blocks.begin(), blocks.end());
    res.optimum = blocks.size();
    res.certificate = Design(cfg.n, cfg.r, std::move(blocks),
                             "search cp n=" + std::to_string(cfg.n) + " r=" + std::to_string(cfg.r));
    res.nodes_explored = search.nodes;
    res.prune_stats = search.stats;
    res.timed_out = search.timed_out;
    res.proven_optimal = !search.timed_out || res.optimum <= res.lower_bound;
    return res;
}

struct GreedyCompletion {
    Design design;
    std::uint64_t added = 0;
    double reference = 0;  // n^(r/2)
};

/// Heuristic, not an optimality claim: adds every uncovered r-set as its own block.
inline GreedyCompletion greedy_complete(const Design& partial, const CensusOptions& opts = {}) {
    const Census census(partial, opts);
    const auto rep = summarize(census, CoverageMode::Packing);
    if (!rep.is_packing) throw Error(ErrorCode::NotAPacking, "input covers some r-set more than once");
    GreedyCompletion out;
    std::vector<Block> blocks = partial.blocks();
    for_each_rset(partial.n(), partial.r(), [&](std::span<const Point> s) {
        if (census.multiplicity(s) == 0) {
            blocks.emplace_back(s.begin(), s.end());
            ++out.added;
        }
        return true;
    });
    out.design = Design(partial.n(), partial.r(), std::move(blocks), "greedy-complete (heuristic) of " + partial.label());
    out.reference = std::pow(static_cast<double>(partial.n()), partial.r() / 2.0);
    return out;
}

struct BoundCertificate {
    bool is_partition = false;
    std::uint64_t blocks = 0;
    std::uint64_t phi_ceiling = 0;
    bool optimal = false;  // witness meets the phi lower bound
};

/// cp(n, r) certified without search: a verified witness whose size equals
/// the ceiling of phi(n, r).
inline BoundCertificate certify_with_bound(const Design& witness, const CensusOptions& opts = {}) {
    BoundCertificate c;
    c.is_partition = verify_coverage(witness, CoverageMode::Partition, opts).is_partition;
    c.blocks = witness.size();
    c.phi_ceiling = static_cast<std::uint64_t>(phi(witness.n(), witness.r()).phi_ceiling);
    c.optimal = c.is_partition && c.blocks == c.phi_ceiling;
    return c;
}

}  // namespace cliquepart
