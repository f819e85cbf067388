#pragma once

#include "homdim/matrix.hpp"
#include "homdim/scalar.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homdim {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    /// Throws MalformedRelation on duplicate names or dangling endpoints.
    void validate() const;
};

/// A path traversed left to right; an empty arrow list is the trivial path at `source`.
struct Path {
    std::size_t source = 0;
    std::size_t target = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
};

struct RelationTerm {
    Scalar coefficient;
    Path path;
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct Presentation {
    FieldSpec field;
    Quiver quiver;
    std::vector<Relation> relations;
    std::size_t degree_cap = 50;
};

/// Sparse vector over the basis of an algebra: (basis index, nonzero coefficient), sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

struct Support {
    std::size_t source;
    std::size_t target;
    friend bool operator==(const Support&, const Support&) = default;
};

class BasicAlgebra;
using AlgebraPtr = std::shared_ptr<const BasicAlgebra>;

/// A split basic finite-dimensional algebra given by structure constants.
///
/// Multiplication b*c is nonzero only when b is supported at (s, t) and c at
/// (t, u); the product is then supported at (s, u). For path algebras this is
/// "traverse b, then c". The basis always consists of the primitive
/// idempotents e_1..e_n followed by elements of the Jacobson radical, so every
/// non-idempotent basis element acts nilpotently.
///
/// Modules over a BasicAlgebra are right modules; these are the left modules
/// of the opposite convention (arrows composed right to left), which is the
/// convention under which every reported invariant is stated.
class BasicAlgebra {
public:
    struct Data {
        FieldSpec field;
        std::vector<std::string> vertex_names;
        std::vector<std::string> labels;
        std::vector<Support> supports;
        std::vector<std::size_t> idempotents;  // basis index of e_v for each vertex v
        std::vector<SparseVector> products;    // dim*dim table, row-major
        std::optional<Quiver> quiver;          // present when built from a presentation
    };

    /// Validates every invariant (throws InvariantViolation) unless
    /// `verify` is false, and derives the arrow generators spanning rad/rad^2.
    /// Skip verification only for data derived from an already verified algebra.
    explicit BasicAlgebra(Data data, bool verify = true);

    const FieldSpec& field() const { return d_.field; }
    std::size_t dim() const { return d_.labels.size(); }
    std::size_t vertex_count() const { return d_.vertex_names.size(); }
    const std::vector<std::string>& vertex_names() const { return d_.vertex_names; }
    const std::string& label(std::size_t b) const { return d_.labels[b]; }
    const std::vector<std::string>& labels() const { return d_.labels; }
    Support support(std::size_t b) const { return d_.supports[b]; }
    std::size_t idempotent(std::size_t v) const { return d_.idempotents[v]; }
    const std::vector<std::size_t>& idempotents() const { return d_.idempotents; }
    bool is_idempotent(std::size_t b) const { return is_idempotent_[b]; }
    const SparseVector& product(std::size_t a, std::size_t b) const { return d_.products[a * dim() + b]; }
    const std::optional<Quiver>& quiver() const { return d_.quiver; }

    /// Basis elements supported at (s, t), in increasing index order.
    const std::vector<std::size_t>& between(std::size_t s, std::size_t t) const
    {
        return between_[s * vertex_count() + t];
    }
    /// Radical generators: basis elements whose classes form a basis of rad/rad^2.
    const std::vector<std::size_t>& arrows() const { return arrows_; }

    /// Matrix of x -> b*x on the full basis (column j = coordinates of b * basis_j).
    Matrix left_mult(std::size_t b) const;

    /// Product of two arbitrary elements given by coordinates.
    Vector multiply(const Vector& x, const Vector& y) const;

    const Data& data() const { return d_; }

    /// Same field, supports, idempotents and structure constants.
    bool structurally_equal(const BasicAlgebra& o) const;

private:
    void verify() const;
    void derive_arrows();

    Data d_;
    std::vector<bool> is_idempotent_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::size_t> arrows_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Basis of kQ/I by a degreewise linear-algebra fixpoint; see build_algebra.cpp.
/// Throws MalformedRelation or NotAdmissible.
AlgebraPtr build_algebra(const Presentation& p);

AlgebraPtr opposite(const BasicAlgebra& a);

/// eAe for e the sum of the idempotents at `verts` (vertex indices, any order).
AlgebraPtr centraliser(const BasicAlgebra& a, std::vector<std::size_t> verts);

/// True iff for all vertex pairs the number of arrows i->j equals the number j->i.
bool ext1_symmetry_necessary(const BasicAlgebra& a);

}  // namespace homdim
