#include "homdim/endo.hpp"

#include "homdim/error.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace homdim {

SummandList normalize_summands(const std::vector<ModulePtr>& ms, std::size_t budget)
{
    SummandList out;
    if (ms.empty()) return out;
    const AlgebraPtr& a = ms.front()->algebra();
    for (const auto& m : ms) {
        if (!same_algebra(a, m->algebra())) throw AlgebraMismatch();
        for (const auto& part : indecomposable_summands(m, budget)) {
            if (!local_radical(part, hom_basis(part, part))) {
                throw NotSplit("a summand has an endomorphism ring with residue field larger than the ground field");
            }
            const bool seen = std::any_of(out.modules_.begin(), out.modules_.end(), [&](const ModulePtr& x) {
                return x->vertex_dims() == part->vertex_dims() && indecomposables_isomorphic(x, part);
            });
            if (!seen) out.modules_.push_back(part);
        }
    }
    return out;
}

namespace {

Vector flatten(const ModuleMap& f)
{
    Vector v;
    for (const Matrix& b : f.blocks()) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) v.push_back(b(r, c));
        }
    }
    return v;
}

}  // namespace

AlgebraPtr endomorphism_algebra(const SummandList& s)
{
    const std::size_t n = s.size();
    if (n == 0) throw EmptyVertexSet();
    const FieldSpec fld = s[0]->field();

    std::vector<ModuleMap> maps;
    BasicAlgebra::Data d;
    d.field = fld;
    for (std::size_t i = 0; i < n; ++i) {
        d.vertex_names.push_back("X" + std::to_string(i + 1));
        d.idempotents.push_back(i);
        d.labels.push_back("id_X" + std::to_string(i + 1));
        d.supports.push_back({i, i});
        maps.push_back(ModuleMap::identity(s[i]));
    }
    // members[(t, u)] lists the basis elements that are maps X_u -> X_t.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) members[{i, i}].push_back(i);

    auto add = [&](std::size_t t, std::size_t u, ModuleMap f, std::size_t k) {
        members[{t, u}].push_back(maps.size());
        d.labels.push_back("X" + std::to_string(u + 1) + "->X" + std::to_string(t + 1) + "#" + std::to_string(k));
        d.supports.push_back({t, u});
        maps.push_back(std::move(f));
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto rad = local_radical(s[i], hom_basis(s[i], s[i]));
        if (!rad) throw NotSplit("summand " + std::to_string(i + 1) + " does not have a split local endomorphism ring");
        for (std::size_t k = 0; k < rad->size(); ++k) add(i, i, std::move((*rad)[k]), k);
    }
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t u = 0; u < n; ++u) {
            if (t == u) continue;
            auto hom = hom_basis(s[u], s[t]);
            for (std::size_t k = 0; k < hom.size(); ++k) add(t, u, std::move(hom[k]), k);
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, SubspaceCoords> coords;
    for (const auto& [key, idx] : members) {
        std::vector<Vector> cols;
        for (std::size_t b : idx) cols.push_back(flatten(maps[b]));
        const std::size_t len = cols.empty() ? 0 : cols.front().size();
        if (len > 0) coords.emplace(key, SubspaceCoords(Matrix::from_columns(fld, len, cols)));
    }

    const std::size_t dim = maps.size();
    d.products.resize(dim * dim);
    for (std::size_t b = 0; b < dim; ++b) {
        for (std::size_t c = 0; c < dim; ++c) {
            if (d.supports[b].target != d.supports[c].source) continue;
            const std::pair<std::size_t, std::size_t> key{d.supports[b].source, d.supports[c].target};
            const ModuleMap prod = compose(maps[b], maps[c]);
            if (prod.is_zero()) continue;
            const Vector v = flatten(prod);
            const Matrix& li = coords.at(key).left_inverse();
            const auto& idx = members.at(key);
            SparseVector sv;
            for (std::size_t r = 0; r < idx.size(); ++r) {
                Scalar x = fld.zero();
                for (std::size_t k = 0; k < v.size(); ++k) {
                    if (!v[k].is_zero()) x += li(r, k) * v[k];
                }
                if (!x.is_zero()) sv.emplace_back(idx[r], x);
            }
            std::sort(sv.begin(), sv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            d.products[b * dim + c] = std::move(sv);
        }
    }
    return std::make_shared<const BasicAlgebra>(std::move(d));
}

ModulePtr restrict_module(const AlgebraPtr& a, std::vector<std::size_t> verts, const ModulePtr& m, AlgebraPtr target)
{
    if (verts.empty()) throw EmptyVertexSet();
    if (!same_algebra(a, m->algebra())) throw AlgebraMismatch();
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<bool> inside(a->vertex_count(), false);
    for (std::size_t v : verts) {
        if (v >= a->vertex_count()) throw UnknownVertex(v);
        inside[v] = true;
    }
    if (!target) target = centraliser(*a, verts);

    std::vector<std::size_t> dims;
    for (std::size_t v : verts) dims.push_back(m->vertex_dim(v));
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < a->dim(); ++b) {
        const Support sp = a->support(b);
        if (inside[sp.source] && inside[sp.target]) actions.push_back(m->action(b));
    }
    if (actions.size() != target->dim() || target->vertex_count() != verts.size()) throw AlgebraMismatch();
    return std::make_shared<const Module>(std::move(target), std::move(dims), std::move(actions), false);
}

}  // namespace homdim
