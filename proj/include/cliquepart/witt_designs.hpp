#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cliquepart/design.hpp"

namespace cliquepart {

/// S(8, 4, 3): the 14 affine planes of AG(3, 2), points indexed by their
/// binary value.
inline Design build_s843() {
    std::set<Block> planes;
    for (Point x = 0; x < 8; ++x)
        for (Point y = x + 1; y < 8; ++y)
            for (Point z = y + 1; z < 8; ++z) {
                Block b{x, y, z, x ^ y ^ z};
                std::sort(b.begin(), b.end());
                planes.insert(b);
            }
    return Design(8, 3, {planes.begin(), planes.end()}, "steiner s843");
}

/// Binary code of length 24 stored as 24-bit words (bit i = coordinate i).
struct LinearCode {
    std::uint32_t length = 24;
    std::vector<std::uint32_t> generator;  // row-reduced basis
    std::vector<std::uint32_t> codewords;  // all 2^dim words, Gray-code order
    std::map<unsigned, std::uint64_t> weight_distribution;

    [[nodiscard]] std::size_t dimension() const { return generator.size(); }
    [[nodiscard]] bool contains(std::uint32_t word) const {
        // reduce against the echelon basis
        for (auto row : generator) {
            const std::uint32_t pivot = std::bit_floor(row);
            if (word & pivot) word ^= row;
        }
        return word == 0;
    }
    [[nodiscard]] std::uint32_t minimum_weight() const {
        for (const auto& [w, count] : weight_distribution)
            if (w > 0 && count > 0) return w;
        return 0;
    }
    [[nodiscard]] bool generator_self_orthogonal() const {
        for (auto a : generator)
            for (auto b : generator)
                if (std::popcount(a & b) % 2 != 0) return false;
        return true;
    }
};

namespace detail {

/// Gaussian elimination into a basis with distinct leading bits, each
/// leading bit cleared from every other row.
inline std::vector<std::uint32_t> echelon_basis(std::vector<std::uint32_t> rows) {
    std::vector<std::uint32_t> basis;
    for (auto v : rows) {
        for (auto b : basis)
            if (v & std::bit_floor(b)) v ^= b;
        if (!v) continue;
        for (auto& b : basis)
            if (b & std::bit_floor(v)) b ^= v;
        basis.push_back(v);
    }
    std::sort(basis.begin(), basis.end(), std::greater<>());
    return basis;
}

}  // namespace detail

/// Extended binary Golay code: the cyclic span of the quadratic-residue
/// indicator mod 23 (the [23,12,7] QR code), plus an overall parity bit in
/// coordinate 23.
inline LinearCode build_golay() {
    constexpr std::uint32_t p = 23;
    std::uint32_t residues = 0;
    for (std::uint32_t i = 1; i < p; ++i) residues |= 1u << (i * i % p);
    std::vector<std::uint32_t> shifts;
    for (std::uint32_t s = 0; s < p; ++s) {
        std::uint32_t v = 0;
        for (std::uint32_t i = 0; i < p; ++i)
            if (residues >> i & 1u) v |= 1u << ((i + s) % p);
        shifts.push_back(v);
    }
    std::vector<std::uint32_t> extended;
    for (auto v : detail::echelon_basis(shifts)) extended.push_back(v | (std::popcount(v) % 2 ? 1u << p : 0u));

    LinearCode code;
    code.generator = detail::echelon_basis(extended);
    const std::size_t dim = code.generator.size();
    code.codewords.reserve(std::size_t{1} << dim);
    std::uint32_t word = 0;
    for (std::uint32_t i = 0; i < (1u << dim); ++i) {
        if (i) word ^= code.generator[std::countr_zero(i)];
        code.codewords.push_back(word);
        ++code.weight_distribution[static_cast<unsigned>(std::popcount(word))];
    }
    const std::map<unsigned, std::uint64_t> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    if (dim != 12 || code.weight_distribution != expected || !code.generator_self_orthogonal())
        throw Error(ErrorCode::ConstructionFailed, "Golay code failed its weight-distribution check");
    return code;
}

struct WittDesigns {
    Design s24;  // S(24, 8, 5), r = 5
    Design s23;  // S(23, 7, 4), r = 4
    Design s22;  // S(22, 6, 3), r = 3
};

/// Octads of the code, then successive links at points 23 and 22.
inline WittDesigns octad_designs(const LinearCode& code) {
    std::vector<Block> octads;
    for (auto w : code.codewords) {
        if (std::popcount(w) != 8) continue;
        Block b;
        for (Point i = 0; i < 24; ++i)
            if (w >> i & 1u) b.push_back(i);
        octads.push_back(std::move(b));
    }
    std::sort(octads.begin(), octads.end());
    WittDesigns out;
    out.s24 = Design(24, 5, std::move(octads), "witt s24");
    out.s23 = derive_link(out.s24, 23).design;
    out.s23 = Design(23, 4, out.s23.blocks(), "witt s23");
    out.s22 = derive_link(out.s23, 22).design;
    out.s22 = Design(22, 3, out.s22.blocks(), "witt s22");
    return out;
}

/// Sizes of pairwise octad intersections that occur.
inline std::set<std::size_t> pairwise_intersection_sizes(const Design& d) {
    std::set<std::size_t> sizes;
    std::vector<std::uint32_t> masks;
    for (const auto& b : d.blocks()) {
        std::uint32_t m = 0;
        for (Point x : b) m |= 1u << x;
        masks.push_back(m);
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            sizes.insert(static_cast<std::size_t>(std::popcount(masks[i] & masks[j])));
    return sizes;
}

}  // namespace cliquepart
