#pragma once

#include "homdim/algebra.hpp"
#include "homdim/hom_dim.hpp"
#include "homdim/resolution.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace homdim {

/// The Nakayama functor on indecomposable projectives: ν(P_i) = I_i.
///
/// sigma[i] = j when injective(i) ≅ projective(j); proj_inj lists (ascending)
/// the vertices i whose injective is projective, i.e. the domain of sigma.
/// The image of sigma is the set of vertices whose projective is injective.
struct NakayamaMap {
    std::vector<std::optional<std::size_t>> sigma;
    std::vector<std::size_t> proj_inj;

    /// Vertices j with projective(j) injective, ascending.
    std::vector<std::size_t> image() const;
    bool is_permutation() const { return proj_inj.size() == sigma.size(); }
};

NakayamaMap nakayama_map(const AlgebraPtr& a);

/// Vertices whose forward sigma-orbit never leaves proj_inj. These form a
/// union of sigma-cycles, so the set is the same whether read as projective
/// or injective labels.
std::vector<std::size_t> strongly_pi_vertices(const NakayamaMap& nm);
std::vector<std::size_t> strongly_pi_vertices(const AlgebraPtr& a);

/// Number of leading terms of the minimal injective resolution of the regular
/// module that are projective. Infinite only for self-injective algebras.
HomDim domdim(const AlgebraPtr& a, std::size_t cap = default_cap());

/// As domdim, but every summand of a counted term must be strongly
/// projective-injective.
HomDim nu_domdim(const AlgebraPtr& a, std::size_t cap = default_cap());

/// Dominant dimension through the double centraliser: with e the sum of the
/// idempotents e_v whose left projective A e_v is injective (so A e is a
/// minimal faithful left module), 1 + the least i ≥ 1 such that Ext^i over
/// eAe of the right module (Ae, Ae) is nonzero. Throws NotApplicable when domdim is
/// known to be below 2.
HomDim muller_domdim(const AlgebraPtr& a, std::size_t cap = default_cap());

/// eAe for e the sum of the idempotents at the strongly projective-injective
/// vertices. Throws NuDomdimZero when nu_domdim(a) = 0.
AlgebraPtr associated_selfinjective(const AlgebraPtr& a, std::size_t cap = default_cap());

/// Outcome of the search for a nondegenerate symmetric associative form.
struct SymmetryResult {
    enum class Kind { Yes, No, ProbabilisticNo };
    Kind kind = Kind::No;
    std::size_t trials = 0;  // points tried when ProbabilisticNo
    std::string to_string() const;
};

inline constexpr std::size_t kDefaultSymmetryTrials = 64;

/// Searches W = {λ : λ(ab) = λ(ba)} for a λ whose Gram matrix λ(b_i b_j) is
/// invertible: the basis of W first, then random points. No is returned only
/// when it is certain (not self-injective, nontrivial Nakayama permutation,
/// or W = 0).
SymmetryResult symmetric_test(const AlgebraPtr& a, std::size_t trials = kDefaultSymmetryTrials);

struct ClassReport {
    enum class Gendo { Yes, No, NotApplicable };
    bool self_injective = false;
    SymmetryResult symmetric;
    bool morita = false;
    bool almost_self_injective = false;
    /// Operational: Morita and the associated self-injective algebra symmetric.
    /// NotApplicable when the symmetry search for that algebra was inconclusive.
    Gendo gendo_symmetric = Gendo::No;
};

std::string to_string(ClassReport::Gendo g);

ClassReport classify(const AlgebraPtr& a, std::size_t cap = default_cap());

/// For gendo-symmetric algebras: 1 + the least i ≥ 1 with Ext^i(D(A), A) ≠ 0,
/// Infinite when D(A) is projective. Throws NotGendoSymmetric unless
/// classify reports gendo_symmetric = Yes.
HomDim gendo_domdim_crosscheck(const AlgebraPtr& a, std::size_t cap = default_cap());

}  // namespace homdim
