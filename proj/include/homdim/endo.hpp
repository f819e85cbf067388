#pragma once

#include "homdim/algebra.hpp"
#include "homdim/decompose.hpp"
#include "homdim/module.hpp"

#include <cstddef>
#include <vector>

namespace homdim {

/// Pairwise non-isomorphic indecomposable modules over one algebra, each with
/// a split local endomorphism ring. Build one with normalize_summands.
class SummandList {
public:
    const std::vector<ModulePtr>& modules() const { return modules_; }
    std::size_t size() const { return modules_.size(); }
    const ModulePtr& operator[](std::size_t i) const { return modules_[i]; }

private:
    friend SummandList normalize_summands(const std::vector<ModulePtr>& ms, std::size_t budget);
    std::vector<ModulePtr> modules_;
};

/// Decomposes every input, then keeps the first representative of each
/// isomorphism class in order of appearance. Throws AlgebraMismatch,
/// SplitFailure, or NotSplit when a summand's endomorphism ring has a residue
/// field larger than k.
SummandList normalize_summands(const std::vector<ModulePtr>& ms, std::size_t budget = kDefaultSplitBudget);

/// End(X_1 ⊕ ... ⊕ X_n) as a BasicAlgebra with one vertex per summand.
///
/// Basis: the identities of X_1..X_n (the idempotents), then a basis of
/// rad End(X_i) for each i, then bases of Hom(X_i, X_j) for i ≠ j. A map
/// X_i -> X_j is supported at (j, i) and the product is composition,
/// f*g = f∘g. Throws NotSplit when some End(X_i) is not local with residue
/// field k.
AlgebraPtr endomorphism_algebra(const SummandList& s);

/// M e as a module over eAe, for e the sum of the idempotents at `verts`:
/// the vertex spaces of M at `verts`, acted on by the basis elements of A
/// supported between them. The result lives over `target` when given (which
/// must be centraliser(a, verts)), otherwise over a freshly built centraliser.
/// Throws EmptyVertexSet or UnknownVertex.
ModulePtr restrict_module(const AlgebraPtr& a, std::vector<std::size_t> verts, const ModulePtr& m,
                          AlgebraPtr target = nullptr);

}  // namespace homdim
