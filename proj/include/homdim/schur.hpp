#pragma once

#include "homdim/hom_dim.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace homdim {

/// An integer partition stored as weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidParams unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t size() const;
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Comma-separated parts, e.g. "2,1"; the empty partition prints as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on the parts.
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<std::size_t> parts_;
};

/// All partitions of n, in decreasing lexicographic order (n, then n-1,1, ...).
std::vector<Partition> partitions_of(std::size_t n);

struct SchurParams {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t ell = 0;  // 0 when q is not a root of unity
    std::uint64_t p = 0;  // characteristic: 0 or a prime
};

/// The least ℓ ≥ 1 with 1 + q + ... + q^{ℓ-1} = 0, or 0 when there is none.
/// For p prime q is read modulo p; for p = 0 only q = ±1 can be given.
/// Throws ZeroQ when q vanishes and InvalidParams for other q in
/// characteristic 0 or a non-prime p.
std::size_t ell_from_q(std::uint64_t p, long long q);

/// ℓ-core and ℓ-weight via the abacus: beads on ℓ runners are slid up as
/// far as possible. Throws InvalidParams when ell < 2.
std::pair<Partition, std::size_t> ell_core_weight(const Partition& lam, std::size_t ell);

/// Write r = r₋₁ + ℓ r′ with 0 ≤ r₋₁ < ℓ; returns r₋₁ + r′ when p = 0 and
/// r₋₁ + (base-p digit sum of r′) otherwise. Throws InvalidParams when
/// ell < 2 or p is neither 0 nor prime.
std::size_t d_ell_p(std::size_t r, std::size_t ell, std::uint64_t p);

struct DimPair {
    HomDim gldim;
    HomDim domdim;
};

/// Global and dominant dimension of S_q(n, r). Throws InvalidParams when
/// n < r, ell = 1, or p is neither 0 nor prime.
DimPair schur_dims(const SchurParams& params);

struct BlockLabel {
    Partition core;
    std::size_t weight = 0;
    friend bool operator==(const BlockLabel&, const BlockLabel&) = default;
};

/// Every (τ, w) with wℓ ≤ r and τ an ℓ-core of r − wℓ, ordered by w and then
/// lexicographically by τ. Throws InvalidParams when ell < 2.
std::vector<BlockLabel> blocks_enumerate(std::size_t r, std::size_t ell);

/// Global and dominant dimension of a block of weight w. Throws
/// InvalidParams when ell < 2 or p is neither 0 nor prime.
DimPair block_dims(std::size_t w, std::size_t ell, std::uint64_t p);

}  // namespace homdim
