#pragma once

#include "homdim/hom_dim.hpp"
#include "homdim/module.hpp"

#include <cstddef>
#include <vector>

namespace homdim {

/// Cap on resolution length used when none is given; HOMDIM_CAP overrides it.
inline constexpr std::size_t kDefaultCap = 40;

/// A resolution also stops once a (co)syzygy has more than this many
/// dimensions. It is then reported exactly like a cap, with the number of
/// terms built so far, since dense linear algebra on larger modules is not
/// practical.
inline constexpr std::size_t kMaxSyzygyDim = 512;

/// kDefaultCap, or the value of the HOMDIM_CAP environment variable when it
/// holds a positive integer.
std::size_t default_cap();

/// A projective cover P(M) ↠ M or an injective envelope M ↪ E(M), together
/// with the vertex of each indecomposable summand of P(M) (resp. E(M)).
struct Cover {
    ModulePtr module;                   // P(M) or E(M)
    std::vector<std::size_t> summands;  // P(M) = projective_sum(summands), E(M) = injective_sum(summands)
    ModuleMap map;                      // P(M) -> M, or M -> E(M)
};

/// Generators are lifts of a basis of the top, so the kernel lies in rad P(M).
Cover projective_cover(const ModulePtr& m);
/// One injective summand per socle basis vector, built from functionals that
/// restrict to a dual basis of the socle.
Cover injective_envelope(const ModulePtr& m);

/// Ω^k(M); syzygy(m, 0) is m itself.
ModulePtr syzygy(const ModulePtr& m, std::size_t k);
/// Ω^{-k}(M), the k-th cokernel in the minimal injective resolution.
ModulePtr cosyzygy(const ModulePtr& m, std::size_t k);

enum class ResolutionKind { Projective, Injective };

struct ResolutionStatus {
    enum class Kind { Terminated, CapReached, Periodic };
    Kind kind = Kind::CapReached;
    std::size_t length = 0;        // Terminated: index of the last nonzero term; CapReached: terms built
    std::size_t period_start = 0;  // Periodic: Ω^{start + length'} ≅ Ω^{start}
    std::size_t period_length = 0;
};

/// Minimal projective resolution ... -> P_1 -> P_0 -> M, or minimal injective
/// resolution M -> I^0 -> I^1 -> ...
///
/// maps[0] is the augmentation P_0 -> M (resp. M -> I^0); maps[k] for k ≥ 1
/// is P_k -> P_{k-1} (resp. I^{k-1} -> I^k). syzygies[k] is Ω^k(M) (resp.
/// Ω^{-k}(M)), with syzygies[0] = M.
struct Resolution {
    ResolutionKind kind = ResolutionKind::Projective;
    std::vector<ModulePtr> terms;
    std::vector<std::vector<std::size_t>> summands;
    std::vector<ModuleMap> maps;
    std::vector<ModulePtr> syzygies;
    ResolutionStatus status;
};

/// Builds a minimal resolution one term at a time.
class ResolutionBuilder {
public:
    ResolutionBuilder(ModulePtr m, ResolutionKind kind, bool detect_periodic = false);

    /// Adds the next term. Returns false (and adds nothing) once the last
    /// (co)syzygy is zero or periodicity has been detected.
    bool step();

    bool finished() const { return finished_; }
    /// Number of terms computed so far.
    std::size_t size() const { return res_.terms.size(); }
    const Resolution& resolution() const { return res_; }

private:
    struct Fingerprint {
        std::vector<std::size_t> dims;
        std::vector<std::size_t> top;
        std::vector<std::size_t> socle;
    };
    static Fingerprint fingerprint(const Module& m);
    bool check_periodic();

    Resolution res_;
    bool detect_periodic_;
    bool finished_ = false;
    std::vector<Fingerprint> prints_;
    ModuleMap last_inclusion_;  // Ω^k -> P_{k-1}, or the projection I^{k-1} -> Ω^{-k}
};

/// Computes at most `cap` terms. Status Terminated(n) when Ω^{n+1} = 0,
/// Periodic when a (co)syzygy is isomorphic to an earlier one (including M),
/// CapReached(k) when k terms were built and the next (co)syzygy is nonzero,
/// where k = cap unless a (co)syzygy outgrew kMaxSyzygyDim first.
Resolution min_resolution(const ModulePtr& m, ResolutionKind kind, std::size_t cap = default_cap());

/// dim Ext^k(M, N) for k = 0..max_degree, via Hom(P_•, N) with
/// Hom(P_k, N) = ⊕_c N_{v(c)} over the summands of P_k. Throws AlgebraMismatch.
std::vector<std::size_t> ext_dims(const ModulePtr& m, const ModulePtr& n, std::size_t max_degree);

/// dim Ext^i(M, N). Throws ResolutionTooShort when i > cap.
std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t i, std::size_t cap = default_cap());

/// Finite(n) when the minimal projective resolution terminates at n;
/// Infinite when it is periodic, or when the algebra is self-injective and M
/// is not projective; AtLeast(k) otherwise, with k the number of terms built.
HomDim projdim(const ModulePtr& m, std::size_t cap = default_cap());

/// Maximum of projdim over the simple modules; Infinite dominates, then AtLeast.
HomDim gldim(const AlgebraPtr& a, std::size_t cap = default_cap());

/// Largest g with Ext^g(D(A), A) ≠ 0, where D(A) = ⊕ injective(i).
/// Throws NotApplicable unless gldim(a, cap) is Finite.
HomDim gldim_via_ext(const AlgebraPtr& a, std::size_t cap = default_cap());

}  // namespace homdim
