#pragma once

#include "homdim/module.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace homdim {

/// Default number of candidate endomorphisms tried when looking for a
/// splitting idempotent.
inline constexpr std::size_t kDefaultSplitBudget = 200;

/// If End(M) is local with one-dimensional residue field, a basis of its
/// radical; otherwise nullopt. `end_basis` must be a basis of End(M).
/// Every element f is tested for the form λ·id + nilpotent, and the span of
/// the nilpotent parts is checked to be a nilpotent ideal.
std::optional<std::vector<ModuleMap>> local_radical(const ModulePtr& m, const std::vector<ModuleMap>& end_basis);

/// True when End(M) is local with residue field k. The zero module is not indecomposable.
bool is_indecomposable(const ModulePtr& m);

struct Summand {
    ModulePtr module;
    std::size_t multiplicity;
};

/// Indecomposable direct summands of M, one module per summand, in the order
/// they are split off. Throws
/// SplitFailure when no splitting endomorphism turns up within `budget`
/// candidates, or when a summand's endomorphism ring has a residue field
/// larger than k.
std::vector<ModulePtr> indecomposable_summands(const ModulePtr& m, std::size_t budget = kDefaultSplitBudget);

/// Krull–Schmidt decomposition grouped into isomorphism classes, in order of
/// first appearance.
std::vector<Summand> decompose(const ModulePtr& m, std::size_t budget = kDefaultSplitBudget);

/// For indecomposable X and Y with split local endomorphism rings: X ≅ Y iff
/// g∘f is non-nilpotent for some f in a basis of Hom(X, Y) and g in a basis of Hom(Y, X).
bool indecomposables_isomorphic(const ModulePtr& x, const ModulePtr& y);

/// Exact isomorphism test: cheap invariants, then a search for an invertible
/// homomorphism, then comparison of Krull–Schmidt decompositions.
/// Throws AlgebraMismatch.
bool is_isomorphic(const ModulePtr& m, const ModulePtr& n);

/// Eigenvalues in k of a square matrix, without multiplicity, in increasing
/// order of discovery. Over Q these are the rational roots of the
/// characteristic polynomial; over F_p all roots are found by exhaustive
/// evaluation when p ≤ 65536, otherwise only roots among small integers.
std::vector<Scalar> eigenvalues_in_field(const Matrix& m);

/// Characteristic polynomial det(x·I − m), coefficients from constant term up.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

/// True when every injective(i) is isomorphic to some projective(j).
bool is_selfinjective(const AlgebraPtr& a);

}  // namespace homdim
