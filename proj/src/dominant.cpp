#include "homdim/dominant.hpp"

#include "homdim/decompose.hpp"
#include "homdim/endo.hpp"
#include "homdim/error.hpp"
#include "homdim/module.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace homdim {

std::vector<std::size_t> NakayamaMap::image() const
{
    std::vector<std::size_t> out;
    for (const auto& s : sigma) {
        if (s) out.push_back(*s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

NakayamaMap nakayama_map(const AlgebraPtr& a)
{
    const std::size_t n = a->vertex_count();
    std::vector<ModulePtr> proj;
    for (std::size_t j = 0; j < n; ++j) proj.push_back(projective(a, j));
    NakayamaMap nm;
    nm.sigma.assign(n, std::nullopt);
    for (std::size_t i = 0; i < n; ++i) {
        const ModulePtr inj = injective(a, i);
        for (std::size_t j = 0; j < n; ++j) {
            if (inj->vertex_dims() != proj[j]->vertex_dims()) continue;
            if (is_isomorphic(inj, proj[j])) {
                nm.sigma[i] = j;
                nm.proj_inj.push_back(i);
                break;
            }
        }
    }
    return nm;
}

std::vector<std::size_t> strongly_pi_vertices(const NakayamaMap& nm)
{
    const std::size_t n = nm.sigma.size();
    std::vector<std::size_t> out;
    for (std::size_t i : nm.proj_inj) {
        std::size_t v = i;
        bool stays = true;
        // sigma is injective, so n steps inside its domain close a cycle.
        for (std::size_t step = 0; step < n && stays; ++step) {
            if (!nm.sigma[v]) {
                stays = false;
            } else {
                v = *nm.sigma[v];
            }
        }
        if (stays) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> strongly_pi_vertices(const AlgebraPtr& a) { return strongly_pi_vertices(nakayama_map(a)); }

namespace {

// Number of leading terms of the minimal injective resolution of A_A whose
// summands all sit at allowed vertices.
HomDim leading_allowed_terms(const AlgebraPtr& a, std::size_t cap, const std::vector<bool>& allowed)
{
    if (cap == 0) throw InvalidParams("resolution cap must be at least 1");
    ResolutionBuilder builder(regular(a), ResolutionKind::Injective);
    for (std::size_t k = 0; k < cap; ++k) {
        if (builder.resolution().syzygies.back()->dim() > kMaxSyzygyDim) return HomDim::at_least(k);
        if (!builder.step()) {
            // A finite injective resolution by projective-injectives splits,
            // making A injective; callers rule that case out beforehand.
            throw InvariantViolation("injective resolution of a non-self-injective algebra ended inside the allowed set");
        }
        for (std::size_t v : builder.resolution().summands.back()) {
            if (!allowed[v]) return HomDim::finite(k);
        }
    }
    return HomDim::at_least(cap);
}

HomDim domdim_with(const AlgebraPtr& a, const NakayamaMap& nm, std::size_t cap)
{
    if (nm.is_permutation()) return HomDim::infinite("self-injective");
    std::vector<bool> allowed(a->vertex_count(), false);
    for (std::size_t v : nm.proj_inj) allowed[v] = true;
    return leading_allowed_terms(a, cap, allowed);
}

HomDim nu_domdim_with(const AlgebraPtr& a, const NakayamaMap& nm, std::size_t cap)
{
    const auto spi = strongly_pi_vertices(nm);
    if (spi.size() == a->vertex_count()) return HomDim::infinite("self-injective");
    std::vector<bool> allowed(a->vertex_count(), false);
    for (std::size_t v : spi) allowed[v] = true;
    return leading_allowed_terms(a, cap, allowed);
}

// Least i in [1, max_degree] with Ext^i(m, n) ≠ 0. The degree window doubles
// so that large resolutions are only built when the answer needs them.
std::optional<std::size_t> first_nonzero_ext(const ModulePtr& m, const ModulePtr& n, std::size_t max_degree)
{
    std::size_t searched = 0;
    for (std::size_t window = 2; searched < max_degree; window *= 2) {
        const std::size_t top = std::min(window, max_degree);
        const auto dims = ext_dims(m, n, top);
        for (std::size_t i = searched + 1; i <= top; ++i) {
            if (dims[i] != 0) return i;
        }
        searched = top;
    }
    return std::nullopt;
}

// λ(b_i b_j) for all basis pairs.
Matrix gram(const BasicAlgebra& a, const Vector& lambda)
{
    const std::size_t n = a.dim();
    Matrix g(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Scalar s = a.field().zero();
            for (const auto& [k, c] : a.product(i, j)) {
                if (!lambda[k].is_zero()) s += c * lambda[k];
            }
            g(i, j) = s;
        }
    }
    return g;
}

SymmetryResult symmetric_with(const AlgebraPtr& ap, const NakayamaMap& nm, std::size_t trials)
{
    const BasicAlgebra& a = *ap;
    const FieldSpec& fld = a.field();
    const std::size_t n = a.dim();
    SymmetryResult no{SymmetryResult::Kind::No, 0};
    if (!nm.is_permutation()) return no;
    for (std::size_t i = 0; i < nm.sigma.size(); ++i) {
        if (*nm.sigma[i] != i) return no;
    }

    // Linear conditions λ(b_i b_j − b_j b_i) = 0.
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector r(n, fld.zero());
            bool nonzero = false;
            for (const auto& [k, c] : a.product(i, j)) r[k] += c;
            for (const auto& [k, c] : a.product(j, i)) r[k] -= c;
            for (const auto& x : r) nonzero = nonzero || !x.is_zero();
            if (nonzero) rows.push_back(std::move(r));
        }
    }
    std::vector<Vector> w;
    if (rows.empty()) {
        for (std::size_t k = 0; k < n; ++k) {
            Vector e(n, fld.zero());
            e[k] = fld.one();
            w.push_back(std::move(e));
        }
    } else {
        w = kernel_basis(Matrix::from_columns(fld, n, rows).transpose());
    }
    if (w.empty()) return no;

    auto nondegenerate = [&](const Vector& lambda) { return rank(gram(a, lambda)) == n; };
    for (const auto& v : w) {
        if (nondegenerate(v)) return {SymmetryResult::Kind::Yes, 0};
    }

    auto combine = [&](const std::vector<long long>& coeffs) {
        Vector lambda(n, fld.zero());
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (coeffs[t] == 0) continue;
            const Scalar c = fld.from_int(coeffs[t]);
            for (std::size_t k = 0; k < n; ++k) lambda[k] += c * w[t][k];
        }
        return lambda;
    };

    // Over a small enough prime field W can be searched exhaustively.
    if (!fld.is_rational()) {
        const std::uint64_t p = fld.characteristic();
        std::uint64_t total = 1;
        bool small = true;
        for (std::size_t t = 0; t < w.size() && small; ++t) {
            total *= p;
            small = total <= 4096;
        }
        if (small) {
            std::vector<long long> coeffs(w.size(), 0);
            for (std::uint64_t code = 1; code < total; ++code) {
                std::uint64_t c = code;
                for (auto& x : coeffs) {
                    x = static_cast<long long>(c % p);
                    c /= p;
                }
                if (nondegenerate(combine(coeffs))) return {SymmetryResult::Kind::Yes, 0};
            }
            return no;
        }
    }

    std::mt19937_64 rng(0x5e77a11ULL);
    std::uniform_int_distribution<long long> pick(fld.is_rational() ? -1000 : 0,
                                                  fld.is_rational() ? 1000 : static_cast<long long>(fld.characteristic()) - 1);
    std::vector<long long> coeffs(w.size());
    for (std::size_t t = 0; t < trials; ++t) {
        for (auto& x : coeffs) x = pick(rng);
        if (nondegenerate(combine(coeffs))) return {SymmetryResult::Kind::Yes, 0};
    }
    return {SymmetryResult::Kind::ProbabilisticNo, trials};
}

}  // namespace

HomDim domdim(const AlgebraPtr& a, std::size_t cap) { return domdim_with(a, nakayama_map(a), cap); }

HomDim nu_domdim(const AlgebraPtr& a, std::size_t cap) { return nu_domdim_with(a, nakayama_map(a), cap); }

HomDim muller_domdim(const AlgebraPtr& a, std::size_t cap)
{
    const NakayamaMap nm = nakayama_map(a);
    const HomDim d = domdim_with(a, nm, cap);
    if (d.is_infinite()) return d;
    if (!d.certainly_at_least(2)) {
        throw NotApplicable("dominant dimension is " + d.to_string() + ", below 2");
    }
    // A minimal faithful module on the other side: the vertices v whose left
    // projective A e_v is injective, read off from the opposite algebra.
    const auto verts = nakayama_map(opposite(*a)).image();
    const AlgebraPtr c = centraliser(*a, verts);
    const ModulePtr x = restrict_module(a, verts, regular(a), c);
    const std::size_t top_degree = cap >= 2 ? cap - 2 : 0;
    if (const auto i = first_nonzero_ext(x, x, top_degree)) return HomDim::finite(*i + 1);
    return HomDim::at_least(std::max<std::size_t>(cap, 2));
}

AlgebraPtr associated_selfinjective(const AlgebraPtr& a, std::size_t cap)
{
    const NakayamaMap nm = nakayama_map(a);
    const HomDim nu = nu_domdim_with(a, nm, cap);
    if (nu.is_finite() && nu.value() == 0) throw NuDomdimZero();
    return centraliser(*a, strongly_pi_vertices(nm));
}

std::string SymmetryResult::to_string() const
{
    switch (kind) {
    case Kind::Yes: return "yes";
    case Kind::No: return "no";
    case Kind::ProbabilisticNo: return "probabilistic-no";
    }
    return {};
}

std::string to_string(ClassReport::Gendo g)
{
    switch (g) {
    case ClassReport::Gendo::Yes: return "yes";
    case ClassReport::Gendo::No: return "no";
    case ClassReport::Gendo::NotApplicable: return "not-applicable";
    }
    return {};
}

SymmetryResult symmetric_test(const AlgebraPtr& a, std::size_t trials)
{
    return symmetric_with(a, nakayama_map(a), trials);
}

ClassReport classify(const AlgebraPtr& a, std::size_t cap)
{
    if (cap < 2) throw InvalidParams("classification needs a resolution cap of at least 2");
    const NakayamaMap nm = nakayama_map(a);
    ClassReport r;
    r.self_injective = nm.is_permutation();
    r.symmetric = symmetric_with(a, nm, kDefaultSymmetryTrials);
    const HomDim nu = nu_domdim_with(a, nm, cap);
    r.morita = nu.certainly_at_least(2);
    const std::size_t non_injective_projectives = a->vertex_count() - nm.image().size();
    r.almost_self_injective = nu.certainly_at_least(1) && non_injective_projectives <= 1;
    if (!r.morita) {
        r.gendo_symmetric = ClassReport::Gendo::No;
    } else {
        const AlgebraPtr e = centraliser(*a, strongly_pi_vertices(nm));
        switch (symmetric_test(e).kind) {
        case SymmetryResult::Kind::Yes: r.gendo_symmetric = ClassReport::Gendo::Yes; break;
        case SymmetryResult::Kind::No: r.gendo_symmetric = ClassReport::Gendo::No; break;
        case SymmetryResult::Kind::ProbabilisticNo: r.gendo_symmetric = ClassReport::Gendo::NotApplicable; break;
        }
    }
    return r;
}

HomDim gendo_domdim_crosscheck(const AlgebraPtr& a, std::size_t cap)
{
    if (classify(a, cap).gendo_symmetric != ClassReport::Gendo::Yes) throw NotGendoSymmetric();
    if (nakayama_map(a).is_permutation()) return HomDim::infinite("D(A) is projective");
    std::vector<std::size_t> all(a->vertex_count());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
    if (const auto i = first_nonzero_ext(injective_sum(a, all), regular(a), cap - 2)) return HomDim::finite(*i + 1);
    return HomDim::at_least(cap);
}

}  // namespace homdim
