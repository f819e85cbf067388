#pragma once

#include "homdim/algebra.hpp"
#include "homdim/matrix.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace homdim {

class Module;
using ModulePtr = std::shared_ptr<const Module>;

/// A finite-dimensional right module over a BasicAlgebra, stored as a quiver
/// representation.
///
/// The underlying space is the direct sum of the vertex spaces M_v = M e_v,
/// laid out in vertex order. For a basis element b supported at (s, t) the
/// action m -> m*b maps M_s to M_t and is stored as a d_t × d_s block. The
/// right-module axiom reads action(b*c) = action(c) * action(b).
///
/// Right modules here are the left modules of the opposite (right to left)
/// path convention, so e.g. projective(i) is spanned by the paths starting at i.
class Module {
public:
    /// Checks block sizes, idempotent actions and compatibility with every
    /// structure constant unless `verify` is false.
    Module(AlgebraPtr algebra, std::vector<std::size_t> vertex_dims, std::vector<Matrix> actions, bool verify = true);

    const AlgebraPtr& algebra() const { return algebra_; }
    const FieldSpec& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }
    const std::vector<std::size_t>& vertex_dims() const { return vertex_dims_; }
    std::size_t vertex_dim(std::size_t v) const { return vertex_dims_[v]; }
    /// Position of the first coordinate of M_v in the total space.
    std::size_t offset(std::size_t v) const { return offsets_[v]; }

    const Matrix& action(std::size_t b) const { return actions_[b]; }
    /// Action of basis element b on the total space (dim × dim).
    Matrix global_action(std::size_t b) const;

private:
    void verify() const;

    AlgebraPtr algebra_;
    std::vector<std::size_t> vertex_dims_;
    std::vector<std::size_t> offsets_;
    std::size_t dim_ = 0;
    std::vector<Matrix> actions_;
};

/// A module homomorphism, stored as one block per vertex (target_v × source_v).
class ModuleMap {
public:
    ModuleMap() = default;
    ModuleMap(ModulePtr source, ModulePtr target, std::vector<Matrix> blocks);

    static ModuleMap zero(ModulePtr source, ModulePtr target);
    static ModuleMap identity(ModulePtr m);

    const ModulePtr& source() const { return source_; }
    const ModulePtr& target() const { return target_; }
    const Matrix& block(std::size_t v) const { return blocks_[v]; }
    const std::vector<Matrix>& blocks() const { return blocks_; }

    /// Block-diagonal matrix on the total spaces.
    Matrix matrix() const;

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const;
    /// True when the map commutes with the action of every algebra basis element.
    bool intertwines() const;

    ModuleMap operator+(const ModuleMap& o) const;
    ModuleMap scaled(const Scalar& s) const;

private:
    ModulePtr source_;
    ModulePtr target_;
    std::vector<Matrix> blocks_;
};

/// Composite g∘f (apply f first). Throws std::invalid_argument when the
/// target of f and the source of g differ in shape.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

struct Submodule {
    ModulePtr module;
    ModuleMap inclusion;
};

struct Quotient {
    ModulePtr module;
    ModuleMap projection;
};

/// Submodule spanned per vertex by the columns of `spans[v]` (need not be
/// independent). The span must be closed under the action; this is checked.
Submodule submodule(const ModulePtr& m, const std::vector<Matrix>& spans);
/// Quotient of m by the submodule spanned by `spans`.
Quotient quotient(const ModulePtr& m, const std::vector<Matrix>& spans);

Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);
Quotient cokernel(const ModuleMap& f);

struct LoewyPieces {
    Submodule radical;
    Submodule socle;
    Quotient top;
};

/// Radical (sum of images of the arrow actions), socle (joint kernel of the
/// arrow actions) and top = M / rad M.
LoewyPieces radical_socle_top(const ModulePtr& m);

/// Per-vertex dimensions of the top and of the socle; cheaper than radical_socle_top.
std::vector<std::size_t> top_dims(const Module& m);
std::vector<std::size_t> socle_dims(const Module& m);

/// Direct sum with the vertex spaces concatenated in argument order.
ModulePtr direct_sum(const std::vector<ModulePtr>& parts);

ModulePtr zero_module(const AlgebraPtr& a);
ModulePtr simple(const AlgebraPtr& a, std::size_t i);
/// e_i A: the span of the basis elements supported at (i, ·).
ModulePtr projective(const AlgebraPtr& a, std::size_t i);
/// D(A e_i): the dual of the span of the basis elements supported at (·, i).
ModulePtr injective(const AlgebraPtr& a, std::size_t i);
/// The regular module A_A = ⊕ projective(i).
ModulePtr regular(const AlgebraPtr& a);

/// ⊕_c projective(verts[c]), laid out so that at vertex t the summands appear
/// in order, each contributing the basis elements supported at (verts[c], t).
ModulePtr projective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& verts);
/// ⊕_c injective(verts[c]), each contributing the dual of the basis elements
/// supported at (t, verts[c]) at vertex t.
ModulePtr injective_sum(const AlgebraPtr& a, const std::vector<std::size_t>& verts);

/// k-dual D(M), a module over `op` (which must be the opposite of M's algebra;
/// computed when null). Basis element b supported at (s, t) in A acts by the
/// transpose of its action on M.
ModulePtr dual(const ModulePtr& m, AlgebraPtr op = nullptr);

/// Basis of Hom(M, N) as the kernel of the stacked intertwining constraints
/// for the arrow generators. Throws AlgebraMismatch.
std::vector<ModuleMap> hom_basis(const ModulePtr& m, const ModulePtr& n);
std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n);

}  // namespace homdim
