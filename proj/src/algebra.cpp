#include "homdim/algebra.hpp"

#include "homdim/error.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace homdim {

namespace {

void add_scaled(Vector& acc, const SparseVector& v, const Scalar& c)
{
    for (const auto& [idx, coeff] : v) acc[idx] += coeff * c;
}

Vector densify(const SparseVector& v, std::size_t dim, const FieldSpec& f)
{
    Vector out(dim, f.zero());
    for (const auto& [idx, coeff] : v) out[idx] = coeff;
    return out;
}

}  // namespace

void Quiver::validate() const
{
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (!seen.insert(v).second) throw MalformedRelation("duplicate vertex name '" + v + "'");
    }
    std::set<std::string> arrow_names;
    for (const auto& a : arrows) {
        if (!arrow_names.insert(a.name).second) throw MalformedRelation("duplicate arrow name '" + a.name + "'");
        if (a.source >= vertices.size() || a.target >= vertices.size()) {
            throw MalformedRelation("arrow '" + a.name + "' has an undeclared endpoint");
        }
    }
}

BasicAlgebra::BasicAlgebra(Data data, bool verify_now) : d_(std::move(data))
{
    const std::size_t n = dim();
    const std::size_t nv = vertex_count();
    if (d_.supports.size() != n || d_.products.size() != n * n || d_.idempotents.size() != nv) {
        throw InvariantViolation("inconsistent algebra table sizes");
    }
    is_idempotent_.assign(n, false);
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t e = d_.idempotents[v];
        if (e >= n || is_idempotent_[e]) throw InvariantViolation("idempotent list is not a set of basis indices");
        is_idempotent_[e] = true;
    }
    between_.assign(nv * nv, {});
    for (std::size_t b = 0; b < n; ++b) {
        const Support s = d_.supports[b];
        if (s.source >= nv || s.target >= nv) throw InvariantViolation("basis support outside the vertex set");
        between_[s.source * nv + s.target].push_back(b);
    }
    if (verify_now) verify();
    derive_arrows();
}

void BasicAlgebra::verify() const
{
    const std::size_t n = dim();
    const std::size_t nv = vertex_count();
    const FieldSpec& f = field();

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const Support sa = support(a);
            const Support sb = support(b);
            const SparseVector& p = product(a, b);
            if (sa.target != sb.source && !p.empty()) {
                throw InvariantViolation("product of non-composable basis elements is nonzero");
            }
            for (const auto& [idx, coeff] : p) {
                if (idx >= n || coeff.is_zero() || coeff.modulus() != f.characteristic()) {
                    throw InvariantViolation("malformed structure constant");
                }
                if (!(support(idx) == Support{sa.source, sb.target})) {
                    throw InvariantViolation("product leaves its support pair: " + label(a) + "*" + label(b));
                }
                if (is_idempotent(idx) && !is_idempotent(a) && !is_idempotent(b)) {
                    throw InvariantViolation("radical basis elements multiply into an idempotent");
                }
            }
        }
    }

    // Idempotent relations: e_v b = [s(b)=v] b and b e_v = [t(b)=v] b.
    for (std::size_t v = 0; v < nv; ++v) {
        const std::size_t e = idempotent(v);
        if (!(support(e) == Support{v, v})) throw InvariantViolation("idempotent is not supported at its vertex");
        for (std::size_t b = 0; b < n; ++b) {
            const SparseVector unit{{b, f.one()}};
            const SparseVector left = support(b).source == v ? unit : SparseVector{};
            const SparseVector right = support(b).target == v ? unit : SparseVector{};
            if (product(e, b) != left || product(b, e) != right) {
                throw InvariantViolation("idempotent relations fail for " + label(b));
            }
        }
    }

    // Associativity: exhaustive on composable triples for small algebras, sampled otherwise.
    auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
        Vector lhs(n, f.zero());
        for (const auto& [k, coeff] : product(a, b)) add_scaled(lhs, product(k, c), coeff);
        Vector rhs(n, f.zero());
        for (const auto& [k, coeff] : product(b, c)) add_scaled(rhs, product(a, k), coeff);
        if (lhs != rhs) {
            throw InvariantViolation("multiplication is not associative on " + label(a) + ", " + label(b) + ", " +
                                     label(c));
        }
    };
    if (n <= 64) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (support(a).target != support(b).source) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (support(b).target == support(c).source) check_triple(a, b, c);
                }
            }
        }
    } else {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int t = 0; t < 20000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }

    // The span R of the non-idempotent basis elements is closed under
    // multiplication (checked above); it must also be nilpotent.
    std::vector<Vector> power;
    for (std::size_t b = 0; b < n; ++b) {
        if (!is_idempotent(b)) power.push_back(densify({{b, f.one()}}, n, f));
    }
    std::size_t prev_dim = power.size();
    for (std::size_t step = 0; step <= n && !power.empty(); ++step) {
        std::vector<Vector> next;
        for (std::size_t r = 0; r < n; ++r) {
            if (is_idempotent(r)) continue;
            for (const Vector& x : power) {
                Vector y(n, f.zero());
                for (std::size_t k = 0; k < n; ++k) {
                    if (!x[k].is_zero()) add_scaled(y, product(r, k), x[k]);
                }
                next.push_back(std::move(y));
            }
        }
        if (next.empty()) break;
        const Matrix span = Matrix::from_columns(f, n, next);
        const auto cols = independent_columns(span);
        power.clear();
        for (std::size_t c : cols) power.push_back(next[c]);
        if (!power.empty() && power.size() >= prev_dim) throw InvariantViolation("radical part is not nilpotent");
        prev_dim = power.size();
    }
}

void BasicAlgebra::derive_arrows()
{
    const std::size_t nv = vertex_count();
    const FieldSpec& f = field();
    arrows_.clear();
    for (std::size_t s = 0; s < nv; ++s) {
        for (std::size_t t = 0; t < nv; ++t) {
            std::vector<std::size_t> rad;
            for (std::size_t b : between(s, t)) {
                if (!is_idempotent(b)) rad.push_back(b);
            }
            if (rad.empty()) continue;
            std::map<std::size_t, std::size_t> pos;
            for (std::size_t i = 0; i < rad.size(); ++i) pos[rad[i]] = i;
            std::vector<Vector> cols;
            for (std::size_t u = 0; u < nv; ++u) {
                for (std::size_t a : between(s, u)) {
                    if (is_idempotent(a)) continue;
                    for (std::size_t b : between(u, t)) {
                        if (is_idempotent(b)) continue;
                        Vector v(rad.size(), f.zero());
                        for (const auto& [idx, coeff] : product(a, b)) v[pos.at(idx)] = coeff;
                        cols.push_back(std::move(v));
                    }
                }
            }
            const std::size_t squares = cols.size();
            for (std::size_t i = 0; i < rad.size(); ++i) {
                Vector unit(rad.size(), f.zero());
                unit[i] = f.one();
                cols.push_back(std::move(unit));
            }
            for (std::size_t c : independent_columns(Matrix::from_columns(f, rad.size(), cols))) {
                if (c >= squares) arrows_.push_back(rad[c - squares]);
            }
        }
    }
    std::sort(arrows_.begin(), arrows_.end());
}

Matrix BasicAlgebra::left_mult(std::size_t b) const
{
    Matrix m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        for (const auto& [idx, coeff] : product(b, j)) m(idx, j) = coeff;
    }
    return m;
}

Vector BasicAlgebra::multiply(const Vector& x, const Vector& y) const
{
    Vector out(dim(), field().zero());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            add_scaled(out, product(i, j), x[i] * y[j]);
        }
    }
    return out;
}

bool BasicAlgebra::structurally_equal(const BasicAlgebra& o) const
{
    return d_.field == o.d_.field && vertex_count() == o.vertex_count() && d_.supports == o.d_.supports &&
           d_.idempotents == o.d_.idempotents && d_.products == o.d_.products;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    return a == b || (a && b && a->structurally_equal(*b));
}

AlgebraPtr opposite(const BasicAlgebra& a)
{
    BasicAlgebra::Data d = a.data();
    const std::size_t n = a.dim();
    for (auto& s : d.supports) std::swap(s.source, s.target);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d.products[i * n + j] = a.product(j, i);
    }
    if (d.quiver) {
        for (auto& arrow : d.quiver->arrows) std::swap(arrow.source, arrow.target);
    }
    return std::make_shared<const BasicAlgebra>(std::move(d), false);
}

AlgebraPtr centraliser(const BasicAlgebra& a, std::vector<std::size_t> verts)
{
    if (verts.empty()) throw EmptyVertexSet();
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const std::size_t nv = a.vertex_count();
    std::vector<std::size_t> new_vertex(nv, nv);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] >= nv) throw UnknownVertex(verts[i]);
        new_vertex[verts[i]] = i;
    }

    std::vector<std::size_t> kept;
    std::vector<std::size_t> new_index(a.dim(), a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support s = a.support(b);
        if (new_vertex[s.source] < nv && new_vertex[s.target] < nv) {
            new_index[b] = kept.size();
            kept.push_back(b);
        }
    }

    BasicAlgebra::Data d;
    d.field = a.field();
    for (std::size_t v : verts) {
        d.vertex_names.push_back(a.vertex_names()[v]);
        d.idempotents.push_back(new_index[a.idempotent(v)]);
    }
    for (std::size_t b : kept) {
        d.labels.push_back(a.label(b));
        d.supports.push_back({new_vertex[a.support(b).source], new_vertex[a.support(b).target]});
    }
    const std::size_t m = kept.size();
    d.products.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            SparseVector p;
            for (const auto& [idx, coeff] : a.product(kept[i], kept[j])) p.emplace_back(new_index[idx], coeff);
            d.products[i * m + j] = std::move(p);
        }
    }
    if (verts.size() == nv) d.quiver = a.quiver();
    return std::make_shared<const BasicAlgebra>(std::move(d), false);
}

bool ext1_symmetry_necessary(const BasicAlgebra& a)
{
    std::map<std::pair<std::size_t, std::size_t>, long> count;
    for (std::size_t b : a.arrows()) {
        const Support s = a.support(b);
        ++count[{s.source, s.target}];
        --count[{s.target, s.source}];
    }
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace homdim
