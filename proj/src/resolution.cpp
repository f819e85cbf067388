#include "homdim/resolution.hpp"

#include "homdim/decompose.hpp"
#include "homdim/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace homdim {

namespace {

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

// Row offset of each summand of projective_sum(verts) inside the vertex-t block.
std::vector<std::size_t> summand_offsets(const BasicAlgebra& a, const std::vector<std::size_t>& verts, std::size_t t)
{
    std::vector<std::size_t> off;
    std::size_t acc = 0;
    for (std::size_t v : verts) {
        off.push_back(acc);
        acc += a.between(v, t).size();
    }
    return off;
}

// Matrix of Hom(P_k, N) -> Hom(P_{k+1}, N), f -> f∘d where d : P_{k+1} -> P_k.
Matrix hom_differential(const Module& n, const std::vector<std::size_t>& lower, const std::vector<std::size_t>& upper,
                        const ModuleMap& d, const std::vector<std::size_t>& pos)
{
    const BasicAlgebra& a = *n.algebra();
    std::vector<std::size_t> col_off;
    std::size_t cols = 0;
    for (std::size_t v : lower) {
        col_off.push_back(cols);
        cols += n.vertex_dim(v);
    }
    std::size_t rows = 0;
    for (std::size_t v : upper) rows += n.vertex_dim(v);
    Matrix delta(a.field(), rows, cols);

    std::size_t row = 0;
    for (std::size_t cu = 0; cu < upper.size(); ++cu) {
        const std::size_t vu = upper[cu];
        // Column of the generator e_{vu} of summand cu inside the vertex-vu block of P_{k+1}.
        const std::size_t gen = summand_offsets(a, upper, vu)[cu] + pos[a.idempotent(vu)];
        const auto lower_off = summand_offsets(a, lower, vu);
        const Matrix& blk = d.block(vu);
        for (std::size_t cl = 0; cl < lower.size(); ++cl) {
            const std::size_t vl = lower[cl];
            const auto& xs = a.between(vl, vu);
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const Scalar& coeff = blk(lower_off[cl] + i, gen);
                if (coeff.is_zero()) continue;
                const Matrix& act = n.action(xs[i]);  // N_vl -> N_vu
                for (std::size_t r = 0; r < act.rows(); ++r) {
                    for (std::size_t c = 0; c < act.cols(); ++c) {
                        if (!act(r, c).is_zero()) delta(row + r, col_off[cl] + c) += coeff * act(r, c);
                    }
                }
            }
        }
        row += n.vertex_dim(vu);
    }
    return delta;
}

}  // namespace

std::size_t default_cap()
{
    if (const char* env = std::getenv("HOMDIM_CAP")) {
        try {
            std::size_t used = 0;
            const std::string s(env);
            const unsigned long v = std::stoul(s, &used);
            if (used == s.size() && v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultCap;
}

Cover projective_cover(const ModulePtr& m)
{
    const AlgebraPtr& alg = m->algebra();
    const BasicAlgebra& a = *alg;
    const std::size_t nv = a.vertex_count();
    const LoewyPieces pieces = radical_socle_top(m);
    std::vector<std::size_t> verts;
    std::vector<std::size_t> gens;  // coordinate of each generator inside M_v
    for (std::size_t v = 0; v < nv; ++v) {
        const Matrix rad = pieces.radical.inclusion.block(v);
        for (std::size_t j : quotient_space(rad, m->vertex_dim(v)).complement) {
            verts.push_back(v);
            gens.push_back(j);
        }
    }
    ModulePtr p = projective_sum(alg, verts);
    std::vector<Matrix> blocks;
    for (std::size_t t = 0; t < nv; ++t) {
        Matrix blk(a.field(), m->vertex_dim(t), p->vertex_dim(t));
        std::size_t col = 0;
        for (std::size_t c = 0; c < verts.size(); ++c) {
            for (std::size_t x : a.between(verts[c], t)) {
                const Matrix& act = m->action(x);
                for (std::size_t r = 0; r < act.rows(); ++r) blk(r, col) = act(r, gens[c]);
                ++col;
            }
        }
        blocks.push_back(std::move(blk));
    }
    ModuleMap map(p, m, std::move(blocks));
    return {p, std::move(verts), std::move(map)};
}

Cover injective_envelope(const ModulePtr& m)
{
    const AlgebraPtr& alg = m->algebra();
    const BasicAlgebra& a = *alg;
    const std::size_t nv = a.vertex_count();
    const LoewyPieces pieces = radical_socle_top(m);
    std::vector<std::size_t> verts;
    std::vector<Vector> functionals;  // on M_{verts[c]}
    for (std::size_t v = 0; v < nv; ++v) {
        const Matrix& soc = pieces.socle.inclusion.block(v);
        if (soc.cols() == 0) continue;
        const Matrix phi = SubspaceCoords(soc).left_inverse();
        for (std::size_t j = 0; j < phi.rows(); ++j) {
            verts.push_back(v);
            functionals.push_back(phi.row(j));
        }
    }
    ModulePtr e = injective_sum(alg, verts);
    std::vector<Matrix> blocks;
    for (std::size_t v = 0; v < nv; ++v) {
        Matrix blk(a.field(), e->vertex_dim(v), m->vertex_dim(v));
        std::size_t row = 0;
        for (std::size_t c = 0; c < verts.size(); ++c) {
            // m -> (y -> phi(m·y)) for y supported at (v, verts[c]).
            for (std::size_t y : a.between(v, verts[c])) {
                const Matrix& act = m->action(y);
                for (std::size_t col = 0; col < act.cols(); ++col) {
                    Scalar s = a.field().zero();
                    for (std::size_t k = 0; k < act.rows(); ++k) {
                        if (!act(k, col).is_zero()) s += functionals[c][k] * act(k, col);
                    }
                    blk(row, col) = s;
                }
                ++row;
            }
        }
        blocks.push_back(std::move(blk));
    }
    ModuleMap map(m, e, std::move(blocks));
    return {e, std::move(verts), std::move(map)};
}

ResolutionBuilder::ResolutionBuilder(ModulePtr m, ResolutionKind kind, bool detect_periodic)
    : detect_periodic_(detect_periodic)
{
    res_.kind = kind;
    res_.syzygies.push_back(std::move(m));
    res_.status.kind = ResolutionStatus::Kind::CapReached;
    if (detect_periodic_) prints_.push_back(fingerprint(*res_.syzygies.front()));
    if (res_.syzygies.front()->is_zero()) {
        finished_ = true;
        res_.status = {ResolutionStatus::Kind::Terminated, 0, 0, 0};
    }
}

ResolutionBuilder::Fingerprint ResolutionBuilder::fingerprint(const Module& m)
{
    return {m.vertex_dims(), top_dims(m), socle_dims(m)};
}

bool ResolutionBuilder::check_periodic()
{
    const ModulePtr& latest = res_.syzygies.back();
    prints_.push_back(fingerprint(*latest));
    const Fingerprint& fp = prints_.back();
    for (std::size_t j = 0; j + 1 < res_.syzygies.size(); ++j) {
        const Fingerprint& other = prints_[j];
        if (other.dims != fp.dims || other.top != fp.top || other.socle != fp.socle) continue;
        if (is_isomorphic(res_.syzygies[j], latest)) {
            res_.status = {ResolutionStatus::Kind::Periodic, 0, j, res_.syzygies.size() - 1 - j};
            return true;
        }
    }
    return false;
}

bool ResolutionBuilder::step()
{
    if (finished_) return false;
    const std::size_t k = res_.terms.size();
    const ModulePtr current = res_.syzygies.back();
    if (res_.kind == ResolutionKind::Projective) {
        Cover cover = projective_cover(current);
        res_.maps.push_back(k == 0 ? cover.map : compose(last_inclusion_, cover.map));
        Submodule ker = kernel(cover.map);
        res_.terms.push_back(cover.module);
        res_.summands.push_back(std::move(cover.summands));
        res_.syzygies.push_back(ker.module);
        last_inclusion_ = std::move(ker.inclusion);
    } else {
        Cover env = injective_envelope(current);
        res_.maps.push_back(k == 0 ? env.map : compose(env.map, last_inclusion_));
        Quotient coker = cokernel(env.map);
        res_.terms.push_back(env.module);
        res_.summands.push_back(std::move(env.summands));
        res_.syzygies.push_back(coker.module);
        last_inclusion_ = std::move(coker.projection);
    }
    if (res_.syzygies.back()->is_zero()) {
        finished_ = true;
        res_.status = {ResolutionStatus::Kind::Terminated, k, 0, 0};
    } else if (detect_periodic_ && check_periodic()) {
        finished_ = true;
    }
    return true;
}

ModulePtr syzygy(const ModulePtr& m, std::size_t k)
{
    ResolutionBuilder b(m, ResolutionKind::Projective);
    for (std::size_t i = 0; i < k && b.step(); ++i) {
    }
    const auto& syz = b.resolution().syzygies;
    return k < syz.size() ? syz[k] : zero_module(m->algebra());
}

ModulePtr cosyzygy(const ModulePtr& m, std::size_t k)
{
    ResolutionBuilder b(m, ResolutionKind::Injective);
    for (std::size_t i = 0; i < k && b.step(); ++i) {
    }
    const auto& syz = b.resolution().syzygies;
    return k < syz.size() ? syz[k] : zero_module(m->algebra());
}

Resolution min_resolution(const ModulePtr& m, ResolutionKind kind, std::size_t cap)
{
    if (cap == 0) throw InvalidParams("resolution cap must be at least 1");
    ResolutionBuilder b(m, kind, true);
    while (b.size() < cap && b.resolution().syzygies.back()->dim() <= kMaxSyzygyDim && b.step()) {
    }
    Resolution res = b.resolution();
    if (!b.finished()) res.status = {ResolutionStatus::Kind::CapReached, b.size(), 0, 0};
    return res;
}

std::vector<std::size_t> ext_dims(const ModulePtr& m, const ModulePtr& n, std::size_t max_degree)
{
    if (!same_algebra(m->algebra(), n->algebra())) throw AlgebraMismatch();
    const BasicAlgebra& a = *m->algebra();
    const auto pos = positions_in_support(a);
    ResolutionBuilder b(m, ResolutionKind::Projective);
    while (b.size() < max_degree + 2 && b.step()) {
    }
    const Resolution& res = b.resolution();

    auto hom_size = [&](std::size_t k) {
        std::size_t d = 0;
        if (k < res.summands.size()) {
            for (std::size_t v : res.summands[k]) d += n->vertex_dim(v);
        }
        return d;
    };
    std::vector<std::size_t> out;
    std::size_t prev_rank = 0;  // rank of δ^{k-1}
    for (std::size_t k = 0; k <= max_degree; ++k) {
        const std::size_t cols = hom_size(k);
        std::size_t rk = 0;
        if (k + 1 < res.terms.size() && cols > 0) {
            rk = rank(hom_differential(*n, res.summands[k], res.summands[k + 1], res.maps[k + 1], pos));
        }
        out.push_back(cols - rk - prev_rank);
        prev_rank = rk;
    }
    return out;
}

std::size_t ext_dim(const ModulePtr& m, const ModulePtr& n, std::size_t i, std::size_t cap)
{
    if (i > cap) {
        throw ResolutionTooShort("Ext degree " + std::to_string(i) + " exceeds the resolution cap " +
                                 std::to_string(cap));
    }
    return ext_dims(m, n, i)[i];
}

namespace {

HomDim projdim_impl(const ModulePtr& m, std::size_t cap, int& selfinjective)
{
    const Resolution res = min_resolution(m, ResolutionKind::Projective, cap);
    switch (res.status.kind) {
    case ResolutionStatus::Kind::Terminated: return HomDim::finite(res.status.length);
    case ResolutionStatus::Kind::Periodic:
        return HomDim::infinite("periodic syzygies: Omega^" +
                                std::to_string(res.status.period_start + res.status.period_length) + " = Omega^" +
                                std::to_string(res.status.period_start));
    case ResolutionStatus::Kind::CapReached: break;
    }
    // Over a self-injective algebra Ext^n(M, A) = 0 for n ≥ 1, so a module of
    // finite projective dimension is projective.
    if (selfinjective < 0) selfinjective = is_selfinjective(m->algebra()) ? 1 : 0;
    if (selfinjective == 1) return HomDim::infinite("non-projective module over a self-injective algebra");
    return HomDim::at_least(res.status.length);
}

}  // namespace

HomDim projdim(const ModulePtr& m, std::size_t cap)
{
    int selfinjective = -1;
    return projdim_impl(m, cap, selfinjective);
}

HomDim gldim(const AlgebraPtr& a, std::size_t cap)
{
    int selfinjective = -1;
    std::size_t finite_max = 0;
    std::size_t lower = 0;
    bool undetermined = false;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        const HomDim d = projdim_impl(simple(a, v), cap, selfinjective);
        if (d.is_infinite()) return d;
        if (d.is_at_least()) {
            undetermined = true;
            lower = std::max(lower, d.value());
        } else {
            finite_max = std::max(finite_max, d.value());
        }
    }
    if (undetermined) return HomDim::at_least(std::max(lower, finite_max));
    return HomDim::finite(finite_max);
}

HomDim gldim_via_ext(const AlgebraPtr& a, std::size_t cap)
{
    const HomDim g = gldim(a, cap);
    if (!g.is_finite()) throw NotApplicable("global dimension is not known to be finite (" + g.to_string() + ")");
    const ModulePtr reg = regular(a);
    std::size_t largest = 0;
    for (std::size_t i = 0; i < a->vertex_count(); ++i) {
        const auto dims = ext_dims(injective(a, i), reg, g.value());
        for (std::size_t k = 0; k < dims.size(); ++k) {
            if (dims[k] != 0) largest = std::max(largest, k);
        }
    }
    return HomDim::finite(largest);
}

}  // namespace homdim
