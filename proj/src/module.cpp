#include "homdim/module.hpp"

#include "homdim/error.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homdim {

namespace {

Matrix zero_block(const FieldSpec& f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

// Position of each basis element inside its between(s, t) list.
std::vector<std::size_t> positions_in_support(const BasicAlgebra& a)
{
    std::vector<std::size_t> pos(a.dim(), 0);
    for (std::size_t s = 0; s < a.vertex_count(); ++s) {
        for (std::size_t t = 0; t < a.vertex_count(); ++t) {
            const auto& list = a.between(s, t);
            for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
        }
    }
    return pos;
}

Matrix independent_span(const Matrix& spans)
{
    if (spans.cols() == 0) return spans;
    const auto cols = independent_columns(spans);
    return spans.select_cols(cols);
}

Matrix left_inverse_of(const Matrix& basis)
{
    if (basis.cols() == 0) return Matrix(basis.field(), 0, basis.rows());
    return SubspaceCoords(basis).left_inverse();
}

Submodule make_submodule(const ModulePtr& m, const std::vector<Matrix>& spans, bool check)
{
    const BasicAlgebra& a = *m->algebra();
    const std::size_t nv = a.vertex_count();
    if (spans.size() != nv) throw std::invalid_argument("submodule needs one span per vertex");
    std::vector<Matrix> basis(nv);
    std::vector<Matrix> coords(nv);
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        if (spans[v].rows() != m->vertex_dim(v)) throw std::invalid_argument("span has the wrong height");
        basis[v] = independent_span(spans[v]);
        coords[v] = left_inverse_of(basis[v]);
        dims[v] = basis[v].cols();
    }
    std::vector<Matrix> actions(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support sp = a.support(b);
        const Matrix image = m->action(b) * basis[sp.source];
        actions[b] = coords[sp.target] * image;
        if (check && !(basis[sp.target] * actions[b] == image)) {
            throw std::invalid_argument("span is not closed under the action of " + a.label(b));
        }
    }
    auto sub = std::make_shared<const Module>(m->algebra(), std::move(dims), std::move(actions), false);
    return {sub, ModuleMap(sub, m, std::move(basis))};
}

Quotient make_quotient(const ModulePtr& m, const std::vector<Matrix>& spans, bool check)
{
    const BasicAlgebra& a = *m->algebra();
    const std::size_t nv = a.vertex_count();
    if (spans.size() != nv) throw std::invalid_argument("quotient needs one span per vertex");
    std::vector<QuotientSpace> q(nv);
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        if (spans[v].rows() != m->vertex_dim(v)) throw std::invalid_argument("span has the wrong height");
        q[v] = quotient_space(spans[v], m->vertex_dim(v));
        dims[v] = q[v].complement.size();
    }
    std::vector<Matrix> actions(a.dim());
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support sp = a.support(b);
        const Matrix pushed = q[sp.target].projection * m->action(b);
        if (check && spans[sp.source].cols() > 0 && !(pushed * spans[sp.source]).is_zero()) {
            throw std::invalid_argument("span is not closed under the action of " + a.label(b));
        }
        actions[b] = pushed.select_cols(q[sp.source].complement);
    }
    auto quo = std::make_shared<const Module>(m->algebra(), std::move(dims), std::move(actions), false);
    std::vector<Matrix> proj(nv);
    for (std::size_t v = 0; v < nv; ++v) proj[v] = std::move(q[v].projection);
    return {quo, ModuleMap(m, quo, std::move(proj))};
}

// Images of the arrows landing at each vertex, stacked side by side.
std::vector<Matrix> radical_spans(const Module& m)
{
    const BasicAlgebra& a = *m.algebra();
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) spans.emplace_back(m.field(), m.vertex_dim(v), 0);
    for (std::size_t arrow : a.arrows()) {
        const std::size_t t = a.support(arrow).target;
        spans[t] = Matrix::hstack(spans[t], m.action(arrow));
    }
    return spans;
}

// Arrows leaving each vertex, stacked vertically; the socle is the kernel.
std::vector<Matrix> socle_constraints(const Module& m)
{
    const BasicAlgebra& a = *m.algebra();
    std::vector<Matrix> rows;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) rows.emplace_back(m.field(), 0, m.vertex_dim(v));
    for (std::size_t arrow : a.arrows()) {
        const std::size_t s = a.support(arrow).source;
        rows[s] = Matrix::vstack(rows[s], m.action(arrow));
    }
    return rows;
}

}  // namespace

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> vertex_dims, std::vector<Matrix> actions, bool verify_now)
    : algebra_(std::move(algebra)), vertex_dims_(std::move(vertex_dims)), actions_(std::move(actions))
{
    const BasicAlgebra& a = *algebra_;
    if (vertex_dims_.size() != a.vertex_count()) throw std::invalid_argument("module needs one dimension per vertex");
    if (actions_.size() != a.dim()) throw std::invalid_argument("module needs one action per basis element");
    offsets_.resize(vertex_dims_.size());
    for (std::size_t v = 0; v < vertex_dims_.size(); ++v) {
        offsets_[v] = dim_;
        dim_ += vertex_dims_[v];
    }
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support s = a.support(b);
        if (actions_[b].rows() != vertex_dims_[s.target] || actions_[b].cols() != vertex_dims_[s.source]) {
            throw std::invalid_argument("action block of " + a.label(b) + " has the wrong shape");
        }
    }
    if (verify_now) verify();
}

void Module::verify() const
{
    const BasicAlgebra& a = *algebra_;
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        if (!action(a.idempotent(v)).is_identity()) {
            throw InvariantViolation("idempotent e_" + a.vertex_names()[v] + " does not act as the identity");
        }
    }
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support sb = a.support(b);
        for (std::size_t u = 0; u < a.vertex_count(); ++u) {
            for (std::size_t c : a.between(sb.target, u)) {
                Matrix expected(field(), vertex_dims_[u], vertex_dims_[sb.source]);
                for (const auto& [k, coeff] : a.product(b, c)) expected += action(k).scaled(coeff);
                if (!(action(c) * action(b) == expected)) {
                    throw InvariantViolation("action does not respect the product " + a.label(b) + "*" + a.label(c));
                }
            }
        }
    }
}

Matrix Module::global_action(std::size_t b) const
{
    Matrix g(field(), dim_, dim_);
    const Support s = algebra_->support(b);
    g.set_block(offsets_[s.target], offsets_[s.source], actions_[b]);
    return g;
}

ModuleMap::ModuleMap(ModulePtr source, ModulePtr target, std::vector<Matrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks))
{
    if (!same_algebra(source_->algebra(), target_->algebra())) throw AlgebraMismatch();
    if (blocks_.size() != source_->vertex_dims().size()) throw std::invalid_argument("map needs one block per vertex");
    for (std::size_t v = 0; v < blocks_.size(); ++v) {
        if (blocks_[v].rows() != target_->vertex_dim(v) || blocks_[v].cols() != source_->vertex_dim(v)) {
            throw std::invalid_argument("map block has the wrong shape");
        }
    }
}

ModuleMap ModuleMap::zero(ModulePtr source, ModulePtr target)
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < source->vertex_dims().size(); ++v) {
        blocks.push_back(zero_block(source->field(), target->vertex_dim(v), source->vertex_dim(v)));
    }
    return ModuleMap(std::move(source), std::move(target), std::move(blocks));
}

ModuleMap ModuleMap::identity(ModulePtr m)
{
    std::vector<Matrix> blocks;
    for (std::size_t d : m->vertex_dims()) blocks.push_back(Matrix::identity(m->field(), d));
    return ModuleMap(m, m, std::move(blocks));
}

Matrix ModuleMap::matrix() const
{
    Matrix g(source_->field(), target_->dim(), source_->dim());
    for (std::size_t v = 0; v < blocks_.size(); ++v) g.set_block(target_->offset(v), source_->offset(v), blocks_[v]);
    return g;
}

bool ModuleMap::is_zero() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return m.is_zero(); });
}

bool ModuleMap::is_injective() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return rank(m) == m.cols(); });
}

bool ModuleMap::is_surjective() const
{
    return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return rank(m) == m.rows(); });
}

bool ModuleMap::is_isomorphism() const
{
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); });
}

bool ModuleMap::intertwines() const
{
    const BasicAlgebra& a = *source_->algebra();
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support s = a.support(b);
        if (!(target_->action(b) * blocks_[s.source] == blocks_[s.target] * source_->action(b))) return false;
    }
    return true;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const
{
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < blocks_.size(); ++v) blocks.push_back(blocks_[v] + o.blocks_[v]);
    return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap ModuleMap::scaled(const Scalar& s) const
{
    std::vector<Matrix> blocks;
    for (const Matrix& m : blocks_) blocks.push_back(m.scaled(s));
    return ModuleMap(source_, target_, std::move(blocks));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f)
{
    if (f.target()->vertex_dims() != g.source()->vertex_dims()) {
        throw std::invalid_argument("maps are not composable");
    }
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < f.blocks().size(); ++v) blocks.push_back(g.block(v) * f.block(v));
    return ModuleMap(f.source(), g.target(), std::move(blocks));
}

Submodule submodule(const ModulePtr& m, const std::vector<Matrix>& spans) { return make_submodule(m, spans, true); }

Quotient quotient(const ModulePtr& m, const std::vector<Matrix>& spans) { return make_quotient(m, spans, true); }

Submodule kernel(const ModuleMap& f)
{
    std::vector<Matrix> spans;
    for (const Matrix& b : f.blocks()) spans.push_back(kernel_matrix(b));
    return make_submodule(f.source(), spans, false);
}

Submodule image(const ModuleMap& f) { return make_submodule(f.target(), f.blocks(), false); }

Quotient cokernel(const ModuleMap& f) { return make_quotient(f.target(), f.blocks(), false); }

LoewyPieces radical_socle_top(const ModulePtr& m)
{
    const auto rad = radical_spans(*m);
    std::vector<Matrix> soc;
    for (const Matrix& c : socle_constraints(*m)) soc.push_back(kernel_matrix(c));
    return {make_submodule(m, rad, false), make_submodule(m, soc, false), make_quotient(m, rad, false)};
}

std::vector<std::size_t> top_dims(const Module& m)
{
    std::vector<std::size_t> out;
    const auto rad = radical_spans(m);
    for (std::size_t v = 0; v < rad.size(); ++v) out.push_back(m.vertex_dim(v) - rank(rad[v]));
    return out;
}

std::vector<std::size_t> socle_dims(const Module& m)
{
    std::vector<std::size_t> out;
    const auto rows = socle_constraints(m);
    for (std::size_t v = 0; v < rows.size(); ++v) out.push_back(m.vertex_dim(v) - rank(rows[v]));
    return out;
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts)
{
    if (parts.empty()) throw std::invalid_argument("direct sum of no modules");
    const AlgebraPtr& alg = parts.front()->algebra();
    for (const auto& p : parts) {
        if (!same_algebra(p->algebra(), alg)) throw AlgebraMismatch();
    }
    const BasicAlgebra& a = *alg;
    std::vector<std::size_t> dims(a.vertex_count(), 0);
    for (const auto& p : parts) {
        for (std::size_t v = 0; v < dims.size(); ++v) dims[v] += p->vertex_dim(v);
    }
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support s = a.support(b);
        Matrix block(a.field(), dims[s.target], dims[s.source]);
        std::size_t r = 0;
        std::size_t c = 0;
        for (const auto& p : parts) {
            block.set_block(r, c, p->action(b));
            r += p->vertex_dim(s.target);
            c += p->vertex_dim(s.source);
        }
        actions.push_back(std::move(block));
    }
    return std::make_shared<const Module>(alg, std::move(dims), std::move(actions), false);
}

ModulePtr zero_module(const AlgebraPtr& a)
{
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < a->dim(); ++b) actions.emplace_back(a->field(), 0, 0);
    return std::make_shared<const Module>(a, std::vector<std::size_t>(a->vertex_count(), 0), std::move(actions), false);
}

ModulePtr simple(const AlgebraPtr& a, std::size_t i)
{
    if (i >= a->vertex_count()) throw UnknownVertex(i);
    std::vector<std::size_t> dims(a->vertex_count(), 0);
    dims[i] = 1;
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < a->dim(); ++b) {
        const Support s = a->support(b);
        Matrix block(a->field(), dims[s.target], dims[s.source]);
        if (b == a->idempotent(i)) block(0, 0) = a->field().one();
        actions.push_back(std::move(block));
    }
    return std::make_shared<const Module>(a, std::move(dims), std::move(actions), false);
}

ModulePtr projective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& verts)
{
    const BasicAlgebra& a = *alg;
    const std::size_t nv = a.vertex_count();
    for (std::size_t v : verts) {
        if (v >= nv) throw UnknownVertex(v);
    }
    const auto pos = positions_in_support(a);
    std::vector<std::size_t> dims(nv, 0);
    for (std::size_t v : verts) {
        for (std::size_t t = 0; t < nv; ++t) dims[t] += a.between(v, t).size();
    }
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support sp = a.support(b);
        Matrix block(a.field(), dims[sp.target], dims[sp.source]);
        std::size_t r = 0;
        std::size_t c = 0;
        for (std::size_t v : verts) {
            const auto& cols = a.between(v, sp.source);
            for (std::size_t j = 0; j < cols.size(); ++j) {
                for (const auto& [k, coeff] : a.product(cols[j], b)) block(r + pos[k], c + j) = coeff;
            }
            r += a.between(v, sp.target).size();
            c += cols.size();
        }
        actions.push_back(std::move(block));
    }
    return std::make_shared<const Module>(alg, std::move(dims), std::move(actions), false);
}

ModulePtr injective_sum(const AlgebraPtr& alg, const std::vector<std::size_t>& verts)
{
    const BasicAlgebra& a = *alg;
    const std::size_t nv = a.vertex_count();
    for (std::size_t v : verts) {
        if (v >= nv) throw UnknownVertex(v);
    }
    const auto pos = positions_in_support(a);
    std::vector<std::size_t> dims(nv, 0);
    for (std::size_t v : verts) {
        for (std::size_t t = 0; t < nv; ++t) dims[t] += a.between(t, v).size();
    }
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        const Support sp = a.support(b);
        Matrix block(a.field(), dims[sp.target], dims[sp.source]);
        std::size_t r = 0;
        std::size_t c = 0;
        for (std::size_t v : verts) {
            // (phi . b)(y) = phi(b * y) for y supported at (t, v).
            const auto& rows = a.between(sp.target, v);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (const auto& [k, coeff] : a.product(b, rows[i])) block(r + i, c + pos[k]) = coeff;
            }
            r += rows.size();
            c += a.between(sp.source, v).size();
        }
        actions.push_back(std::move(block));
    }
    return std::make_shared<const Module>(alg, std::move(dims), std::move(actions), false);
}

ModulePtr projective(const AlgebraPtr& a, std::size_t i) { return projective_sum(a, {i}); }

ModulePtr injective(const AlgebraPtr& a, std::size_t i) { return injective_sum(a, {i}); }

ModulePtr regular(const AlgebraPtr& a)
{
    std::vector<std::size_t> all(a->vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return projective_sum(a, all);
}

ModulePtr dual(const ModulePtr& m, AlgebraPtr op)
{
    if (!op) op = opposite(*m->algebra());
    if (op->dim() != m->algebra()->dim() || op->vertex_count() != m->algebra()->vertex_count()) {
        throw AlgebraMismatch();
    }
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < op->dim(); ++b) actions.push_back(m->action(b).transpose());
    return std::make_shared<const Module>(std::move(op), m->vertex_dims(), std::move(actions), false);
}

std::vector<ModuleMap> hom_basis(const ModulePtr& m, const ModulePtr& n)
{
    if (!same_algebra(m->algebra(), n->algebra())) throw AlgebraMismatch();
    const BasicAlgebra& a = *m->algebra();
    const FieldSpec& f = a.field();
    const std::size_t nv = a.vertex_count();

    // Unknown f_v (n_v × m_v) stored row-major starting at var[v].
    std::vector<std::size_t> var(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) var[v + 1] = var[v] + n->vertex_dim(v) * m->vertex_dim(v);
    const std::size_t nvars = var[nv];
    if (nvars == 0) return {};

    std::size_t nrows = 0;
    for (std::size_t arrow : a.arrows()) {
        const Support s = a.support(arrow);
        nrows += n->vertex_dim(s.target) * m->vertex_dim(s.source);
    }
    Matrix sys(f, nrows, nvars);
    std::size_t row = 0;
    for (std::size_t arrow : a.arrows()) {
        const Support sp = a.support(arrow);
        const std::size_t s = sp.source;
        const std::size_t t = sp.target;
        const Matrix& rn = n->action(arrow);  // n_t × n_s
        const Matrix& rm = m->action(arrow);  // m_t × m_s
        const std::size_t ms = m->vertex_dim(s);
        const std::size_t mt = m->vertex_dim(t);
        const std::size_t ns = n->vertex_dim(s);
        const std::size_t nt = n->vertex_dim(t);
        // (rn f_s - f_t rm)[i, j] = 0
        for (std::size_t i = 0; i < nt; ++i) {
            for (std::size_t j = 0; j < ms; ++j, ++row) {
                for (std::size_t k = 0; k < ns; ++k) {
                    if (!rn(i, k).is_zero()) sys(row, var[s] + k * ms + j) += rn(i, k);
                }
                for (std::size_t k = 0; k < mt; ++k) {
                    if (!rm(k, j).is_zero()) sys(row, var[t] + i * mt + k) -= rm(k, j);
                }
            }
        }
    }

    std::vector<ModuleMap> out;
    for (const Vector& sol : kernel_basis(sys)) {
        std::vector<Matrix> blocks;
        for (std::size_t v = 0; v < nv; ++v) {
            const std::size_t rows = n->vertex_dim(v);
            const std::size_t cols = m->vertex_dim(v);
            Matrix blk(f, rows, cols);
            for (std::size_t i = 0; i < rows; ++i) {
                for (std::size_t j = 0; j < cols; ++j) blk(i, j) = sol[var[v] + i * cols + j];
            }
            blocks.push_back(std::move(blk));
        }
        out.emplace_back(m, n, std::move(blocks));
    }
    return out;
}

std::size_t hom_dim(const ModulePtr& m, const ModulePtr& n) { return hom_basis(m, n).size(); }

}  // namespace homdim
