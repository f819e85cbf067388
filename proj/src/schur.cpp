#include "homdim/schur.hpp"

#include "homdim/error.hpp"
#include "homdim/scalar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace homdim {

Partition::Partition(std::vector<std::size_t> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) throw InvalidParams("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidParams("partition parts must be weakly decreasing");
    }
}

std::size_t Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(std::size_t n)
{
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

namespace {

void check_ell(std::size_t ell)
{
    if (ell < 2) throw InvalidParams("ell must be at least 2 (got " + std::to_string(ell) + ")");
}

void check_characteristic(std::uint64_t p)
{
    if (p != 0 && !is_prime(p)) throw InvalidParams("p must be 0 or a prime (got " + std::to_string(p) + ")");
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    unsigned __int128 result = 1;
    unsigned __int128 base = b % m;
    while (e > 0) {
        if (e & 1) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

}  // namespace

std::size_t ell_from_q(std::uint64_t p, long long q)
{
    if (p == 0) {
        if (q == 0) throw ZeroQ();
        if (q == 1) return 0;
        if (q == -1) return 2;
        throw InvalidParams("in characteristic 0 only q = 1 or q = -1 are supported");
    }
    check_characteristic(p);
    const long long pm = static_cast<long long>(p);
    const std::uint64_t qr = static_cast<std::uint64_t>(((q % pm) + pm) % pm);
    if (qr == 0) throw ZeroQ();
    // q = 1: the sum is ℓ·1, which first vanishes at ℓ = p.
    if (qr == 1) return static_cast<std::size_t>(p);
    // Otherwise 1 + ... + q^{ℓ-1} = (q^ℓ - 1)/(q - 1) vanishes exactly when
    // q^ℓ = 1, so ℓ is the multiplicative order of q.
    std::uint64_t order = p - 1;
    std::uint64_t rest = p - 1;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        if (rest % f != 0) continue;
        while (rest % f == 0) rest /= f;
        while (order % f == 0 && pow_mod(qr, order / f, p) == 1) order /= f;
    }
    if (rest > 1) {
        while (order % rest == 0 && pow_mod(qr, order / rest, p) == 1) order /= rest;
    }
    return static_cast<std::size_t>(order);
}

std::pair<Partition, std::size_t> ell_core_weight(const Partition& lam, std::size_t ell)
{
    check_ell(ell);
    const auto& parts = lam.parts();
    const std::size_t n = parts.size();
    // β_i = λ_i + (n - 1 - i), distinct and decreasing.
    std::vector<std::size_t> beads_on(ell, 0);
    std::size_t weight = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t beta = parts[i] + (n - 1 - i);
        ++beads_on[beta % ell];
        weight += beta / ell;
    }
    std::vector<std::size_t> beta;
    for (std::size_t runner = 0; runner < ell; ++runner) {
        const std::size_t c = beads_on[runner];
        weight -= c * (c - 1) / 2;  // levels 0..c-1 stay occupied after sliding
        for (std::size_t level = 0; level < c; ++level) beta.push_back(runner + level * ell);
    }
    std::sort(beta.begin(), beta.end(), std::greater<>());
    std::vector<std::size_t> core;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t part = beta[i] - (n - 1 - i);
        if (part > 0) core.push_back(part);
    }
    return {Partition(std::move(core)), weight};
}

std::size_t d_ell_p(std::size_t r, std::size_t ell, std::uint64_t p)
{
    check_ell(ell);
    check_characteristic(p);
    const std::size_t low = r % ell;
    std::size_t high = r / ell;
    if (p == 0) return low + high;
    std::size_t digits = 0;
    while (high > 0) {
        digits += high % p;
        high /= p;
    }
    return low + digits;
}

DimPair schur_dims(const SchurParams& params)
{
    if (params.n < params.r) {
        throw InvalidParams("the formulas need n >= r (got n = " + std::to_string(params.n) +
                            ", r = " + std::to_string(params.r) + ")");
    }
    check_characteristic(params.p);
    if (params.ell == 0) return {HomDim::finite(0), HomDim::infinite("semisimple")};
    check_ell(params.ell);
    const std::size_t d = d_ell_p(params.r, params.ell, params.p);
    return {HomDim::finite(2 * (params.r - d)), HomDim::finite(2 * (params.ell - 1))};
}

std::vector<BlockLabel> blocks_enumerate(std::size_t r, std::size_t ell)
{
    check_ell(ell);
    std::vector<BlockLabel> out;
    for (std::size_t w = 0; w * ell <= r; ++w) {
        std::vector<Partition> cores;
        for (auto& lam : partitions_of(r - w * ell)) {
            if (ell_core_weight(lam, ell).second == 0) cores.push_back(std::move(lam));
        }
        std::sort(cores.begin(), cores.end());
        for (auto& c : cores) out.push_back({std::move(c), w});
    }
    return out;
}

DimPair block_dims(std::size_t w, std::size_t ell, std::uint64_t p)
{
    check_ell(ell);
    check_characteristic(p);
    if (w == 0) return {HomDim::finite(0), HomDim::infinite("semisimple")};
    const std::size_t lw = ell * w;
    return {HomDim::finite(2 * (lw - d_ell_p(lw, ell, p))), HomDim::finite(2 * (ell - 1))};
}

}  // namespace homdim
