#include "homdim/decompose.hpp"
#include "homdim/error.hpp"
#include "homdim/module.hpp"
#include "homdim/resolution.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace homdim;
using namespace homdim::test;

namespace {

Matrix random_invertible(const FieldSpec& f, std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-3, 3);
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m(r, c) = f.from_int(dist(rng));
        }
        if (inverse(m)) return m;
    }
}

// The same module written in a random basis of each vertex space.
ModulePtr rebase(const ModulePtr& m, std::mt19937_64& rng)
{
    const AlgebraPtr& a = m->algebra();
    std::vector<Matrix> t, tinv;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        t.push_back(random_invertible(a->field(), m->vertex_dim(v), rng));
        tinv.push_back(*inverse(t.back()));
    }
    std::vector<Matrix> actions;
    for (std::size_t b = 0; b < a->dim(); ++b) {
        const Support s = a->support(b);
        actions.push_back(t[s.target] * m->action(b) * tinv[s.source]);
    }
    return std::make_shared<Module>(a, m->vertex_dims(), std::move(actions));
}

std::vector<ModulePtr> test_modules(const AlgebraPtr& a)
{
    std::vector<ModulePtr> out;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
        out.push_back(simple(a, v));
        out.push_back(projective(a, v));
        out.push_back(injective(a, v));
    }
    return out;
}

std::size_t map_rank(const ModuleMap& f) { return rank(f.matrix()); }

void check_projective_resolution(const Resolution& res)
{
    REQUIRE(res.kind == ResolutionKind::Projective);
    if (res.terms.empty()) return;
    CHECK(res.maps[0].is_surjective());
    for (std::size_t k = 1; k < res.maps.size(); ++k) {
        CHECK(compose(res.maps[k - 1], res.maps[k]).is_zero());
        // Exact at P_{k-1}: the image of d_k is all of the kernel of d_{k-1}.
        CHECK(map_rank(res.maps[k]) == res.terms[k - 1]->dim() - map_rank(res.maps[k - 1]));
        // Minimal: nothing reaches the top of P_{k-1}.
        const auto pieces = radical_socle_top(res.terms[k - 1]);
        CHECK(compose(pieces.top.projection, res.maps[k]).is_zero());
    }
    for (std::size_t k = 0; k < res.terms.size(); ++k) {
        CHECK(is_isomorphic(res.terms[k], projective_sum(res.terms[k]->algebra(), res.summands[k])));
    }
    if (res.status.kind == ResolutionStatus::Kind::Terminated) {
        CHECK(kernel(res.maps.back()).module->is_zero());
    }
}

void check_injective_resolution(const Resolution& res)
{
    REQUIRE(res.kind == ResolutionKind::Injective);
    if (res.terms.empty()) return;
    CHECK(res.maps[0].is_injective());
    for (std::size_t k = 1; k < res.maps.size(); ++k) {
        CHECK(compose(res.maps[k], res.maps[k - 1]).is_zero());
        CHECK(res.terms[k - 1]->dim() - map_rank(res.maps[k]) == map_rank(res.maps[k - 1]));
        const auto pieces = radical_socle_top(res.terms[k - 1]);
        CHECK(compose(res.maps[k], pieces.socle.inclusion).is_zero());
    }
}

}  // namespace

TEST_CASE("simple, projective and injective modules of A2")
{
    const auto a = load_fixture("a2");
    CHECK(simple(a, 0)->dim() == 1);
    CHECK(simple(a, 0)->vertex_dims() == std::vector<std::size_t>{1, 0});
    CHECK(projective(a, 0)->dim() == 2);
    CHECK(projective(a, 1)->dim() == 1);
    CHECK(injective(a, 0)->dim() == 1);
    CHECK(injective(a, 1)->dim() == 2);
    CHECK_THROWS_AS(simple(a, 2), UnknownVertex);
    CHECK_THROWS_AS(projective(a, 7), UnknownVertex);
    CHECK_THROWS_AS(injective(a, 2), UnknownVertex);
    CHECK(regular(a)->dim() == 3);
}

TEST_CASE("modules of the fixture with no strongly projective-injective vertex")
{
    const auto a = load_fixture("stp_zero");
    CHECK(projective(a, 1)->dim() == 5);
    CHECK(injective(a, 2)->dim() == 5);
    CHECK(injective(a, 0)->dim() == 3);
    CHECK(is_isomorphic(injective(a, 2), projective(a, 1)));
    const auto soc = radical_socle_top(projective(a, 1)).socle.module;
    CHECK(is_isomorphic(soc, simple(a, 2)));
}

TEST_CASE("projectives of the linear quiver family")
{
    // Vertex 1 is a sink in the file orientation, so S_1 is projective.
    const auto a = load_fixture("apr_family_A_n2");
    CHECK(is_isomorphic(simple(a, 0), projective(a, 0)));
    CHECK(projdim(simple(a, 0)) == HomDim::finite(0));
    CHECK(projdim(simple(a, 1)) == HomDim::finite(1));
    CHECK(projdim(simple(a, 3)) == HomDim::finite(1));
    CHECK(projdim(simple(a, 2)) == HomDim::finite(2));
    CHECK(projdim(simple(a, 4)) == HomDim::finite(2));
}

TEST_CASE("Yoneda: Hom(P_i, M) has dimension dim M e_i")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto a = load_fixture(name);
        for (const auto& m : test_modules(a)) {
            for (std::size_t i = 0; i < a->vertex_count(); ++i) CHECK(hom_dim(projective(a, i), m) == m->vertex_dim(i));
        }
    }
}

TEST_CASE("Hom between A2 projectives and simples")
{
    const auto a = load_fixture("a2");
    // P_2 = S_2 is the radical of P_1, so the only nonzero map goes P_2 -> P_1.
    CHECK(hom_dim(projective(a, 1), projective(a, 0)) == 1);
    CHECK(hom_dim(projective(a, 0), projective(a, 1)) == 0);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) CHECK(hom_dim(simple(a, i), simple(a, j)) == (i == j ? 1u : 0u));
    }
    for (const auto& f : hom_basis(regular(a), regular(a))) CHECK(f.intertwines());
    const auto other = load_fixture("dual_ext_A");
    CHECK_THROWS_AS(hom_basis(simple(a, 0), simple(other, 0)), AlgebraMismatch);
}

TEST_CASE("isomorphism survives a random change of basis")
{
    std::mt19937_64 rng(7);
    for (const std::string name : {"a2", "almost_si_3vertex", "lambda_kxy", "stp_zero", "dual_ext_B", "nakayama3_rad2_f3"}) {
        CAPTURE(name);
        const auto a = load_fixture(name);
        for (const auto& m : test_modules(a)) {
            const auto n = rebase(m, rng);
            CHECK(is_isomorphic(m, n));
            CHECK(decompose(n).size() == decompose(m).size());
        }
        const auto reg = regular(a);
        CHECK(is_isomorphic(reg, rebase(reg, rng)));
    }
    const auto a = load_fixture("a2");
    CHECK_FALSE(is_isomorphic(projective(a, 0), projective(a, 1)));
    CHECK_FALSE(is_isomorphic(projective(a, 0), direct_sum({simple(a, 0), simple(a, 1)})));
    CHECK(is_isomorphic(projective(a, 1), simple(a, 1)));
}

TEST_CASE("Krull-Schmidt decomposition")
{
    const auto a = load_fixture("a2");
    const auto s = decompose(simple(a, 0));
    REQUIRE(s.size() == 1);
    CHECK(s[0].multiplicity == 1);
    CHECK(is_isomorphic(s[0].module, simple(a, 0)));

    const auto pp = decompose(direct_sum({projective(a, 0), projective(a, 0)}));
    REQUIRE(pp.size() == 1);
    CHECK(pp[0].multiplicity == 2);
    CHECK(is_isomorphic(pp[0].module, projective(a, 0)));

    const auto reg = decompose(regular(a));
    CHECK(reg.size() == 2);

    std::mt19937_64 rng(3);
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto b = load_fixture(name);
        const auto m = rebase(direct_sum({regular(b), injective(b, 0), simple(b, 0)}), rng);
        std::size_t total = 0;
        for (const auto& part : indecomposable_summands(m)) {
            total += part->dim();
            CHECK(is_indecomposable(part));
            const auto again = indecomposable_summands(part);
            REQUIRE(again.size() == 1);
            CHECK(again[0]->dim() == part->dim());
        }
        CHECK(total == m->dim());
    }
}

TEST_CASE("Loewy pieces")
{
    const auto a = load_fixture("a2");
    CHECK(is_isomorphic(radical_socle_top(projective(a, 0)).radical.module, simple(a, 1)));
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto b = load_fixture(name);
        for (std::size_t i = 0; i < b->vertex_count(); ++i) {
            const auto p = radical_socle_top(projective(b, i));
            CHECK(is_isomorphic(p.top.module, simple(b, i)));
            CHECK(p.top.module->dim() + p.radical.module->dim() == projective(b, i)->dim());
            const auto inj = radical_socle_top(injective(b, i));
            CHECK(is_isomorphic(inj.socle.module, simple(b, i)));
            CHECK(top_dims(*projective(b, i)) == p.top.module->vertex_dims());
        }
    }
    const auto lam = load_fixture("lambda_kxy");
    const auto pieces = radical_socle_top(regular(lam));
    CHECK(pieces.radical.module->dim() == 3);
    CHECK(pieces.socle.module->dim() == 1);
}

TEST_CASE("projective covers and injective envelopes")
{
    const auto a = load_fixture("a2");
    const auto rad = radical_socle_top(projective(a, 0)).radical.module;
    CHECK(projective_cover(rad).summands == std::vector<std::size_t>{1});
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto b = load_fixture(name);
        for (std::size_t i = 0; i < b->vertex_count(); ++i) {
            const auto pc = projective_cover(simple(b, i));
            CHECK(pc.summands == std::vector<std::size_t>{i});
            CHECK(pc.map.is_surjective());
            const auto pp = projective_cover(projective(b, i));
            CHECK(pp.map.is_isomorphism());
            const auto ie = injective_envelope(simple(b, i));
            CHECK(ie.summands == std::vector<std::size_t>{i});
            CHECK(ie.map.is_injective());
            CHECK(injective_envelope(injective(b, i)).map.is_isomorphism());
        }
        // The envelope of the regular module has one summand per socle dimension.
        const auto env = injective_envelope(regular(b));
        std::vector<std::size_t> counts(b->vertex_count(), 0);
        for (std::size_t v : env.summands) ++counts[v];
        CHECK(counts == socle_dims(*regular(b)));
        CHECK(env.map.intertwines());
        // The kernel of a cover sits in the radical.
        const auto m = injective(b, 0);
        const auto cover = projective_cover(m);
        const auto ker = kernel(cover.map);
        const auto top = radical_socle_top(cover.module).top;
        CHECK(compose(top.projection, ker.inclusion).is_zero());
    }
}

TEST_CASE("syzygies")
{
    const auto a = load_fixture("a2");
    CHECK(is_isomorphic(syzygy(simple(a, 0), 1), projective(a, 1)));
    CHECK(syzygy(projective(a, 0), 1)->is_zero());
    CHECK(syzygy(simple(a, 0), 0)->dim() == 1);
    const auto lam = load_fixture("lambda_kxy");
    CHECK(syzygy(simple(lam, 0), 1)->dim() == 3);
    CHECK(syzygy(simple(lam, 0), 2)->dim() == 5);
    CHECK(syzygy(simple(lam, 0), 3)->dim() == 7);
    CHECK(cosyzygy(simple(lam, 0), 1)->dim() == 3);
}

TEST_CASE("minimal resolutions are exact and minimal")
{
    const auto a = load_fixture("a2");
    const auto r = min_resolution(simple(a, 0), ResolutionKind::Projective);
    CHECK(r.status.kind == ResolutionStatus::Kind::Terminated);
    CHECK(r.status.length == 1);
    REQUIRE(r.summands.size() == 2);
    CHECK(r.summands[0] == std::vector<std::size_t>{0});
    CHECK(r.summands[1] == std::vector<std::size_t>{1});
    const auto rp = min_resolution(projective(a, 0), ResolutionKind::Projective);
    CHECK(rp.status.kind == ResolutionStatus::Kind::Terminated);
    CHECK(rp.status.length == 0);

    const auto lam = load_fixture("lambda_kxy");
    const auto rl = min_resolution(simple(lam, 0), ResolutionKind::Projective, 10);
    CHECK(rl.status.kind != ResolutionStatus::Kind::Terminated);
    CHECK(rl.terms.size() == 10);
    check_projective_resolution(rl);

    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto b = load_fixture(name);
        for (std::size_t i = 0; i < b->vertex_count(); ++i) {
            check_projective_resolution(min_resolution(simple(b, i), ResolutionKind::Projective, 8));
            check_injective_resolution(min_resolution(simple(b, i), ResolutionKind::Injective, 8));
        }
        check_injective_resolution(min_resolution(regular(b), ResolutionKind::Injective, 8));
    }
}

TEST_CASE("periodic resolutions are detected")
{
    const auto n = load_fixture("nakayama3_rad2");
    const auto r = min_resolution(simple(n, 0), ResolutionKind::Projective, 10);
    CHECK(r.status.kind == ResolutionStatus::Kind::Periodic);
    const HomDim d = projdim(simple(n, 0));
    CHECK(d.is_infinite());
    CHECK(d.certificate().find("periodic") != std::string::npos);
}

TEST_CASE("Ext dimensions")
{
    const auto a = load_fixture("a2");
    CHECK(ext_dim(simple(a, 0), simple(a, 1), 1) == 1);
    CHECK(ext_dim(simple(a, 1), simple(a, 0), 1) == 0);
    CHECK(ext_dim(simple(a, 0), simple(a, 1), 5) == 0);
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto b = load_fixture(name);
        const auto ms = test_modules(b);
        for (const auto& m : ms) {
            for (const auto& n : ms) CHECK(ext_dims(m, n, 0)[0] == hom_dim(m, n));
        }
        // Ext^1 between simples counts arrows.
        for (std::size_t i = 0; i < b->vertex_count(); ++i) {
            for (std::size_t j = 0; j < b->vertex_count(); ++j) {
                std::size_t arrows = 0;
                for (std::size_t x : b->arrows()) arrows += b->support(x) == Support{i, j};
                CHECK(ext_dim(simple(b, i), simple(b, j), 1) == arrows);
            }
        }
    }
}

TEST_CASE("Ext is compatible with duality")
{
    for (const auto& name : fixture_names()) {
        const auto b = load_fixture(name);
        if (b->dim() > 40) continue;
        CAPTURE(name);
        const auto op = opposite(*b);
        const auto ms = test_modules(b);
        for (const auto& m : ms) {
            for (const auto& n : ms) {
                CHECK(ext_dims(m, n, 3) == ext_dims(dual(n, op), dual(m, op), 3));
            }
        }
    }
}

TEST_CASE("duality")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto b = load_fixture(name);
        const auto op = opposite(*b);
        for (std::size_t i = 0; i < b->vertex_count(); ++i) {
            const auto d = dual(simple(b, i), op);
            CHECK(d->vertex_dims() == simple(op, i)->vertex_dims());
            CHECK(is_isomorphic(d, simple(op, i)));
            CHECK(is_isomorphic(dual(projective(b, i), op), injective(op, i)));
            const auto p = projective(b, i);
            const auto dd = dual(dual(p, op), b);
            CHECK(dd->vertex_dims() == p->vertex_dims());
            for (std::size_t x = 0; x < b->dim(); ++x) CHECK(dd->action(x) == p->action(x));
        }
    }
}

TEST_CASE("projective and global dimension")
{
    const auto a = load_fixture("a2");
    CHECK(projdim(projective(a, 0)) == HomDim::finite(0));
    CHECK(gldim(a) == HomDim::finite(1));
    CHECK(gldim(load_fixture("dual_ext_A")) == HomDim::finite(2));
    CHECK(gldim(load_fixture("dual_ext_B")) == HomDim::finite(3));
    CHECK(gldim(load_fixture("apr_family_A_n2")) == HomDim::finite(2));

    const auto lam = load_fixture("lambda_kxy");
    const HomDim pl = projdim(simple(lam, 0), 6);
    CHECK(pl.is_infinite());
    CHECK(gldim(lam, 6).is_infinite());

    // Without a self-injectivity certificate the cap is reported honestly.
    const auto b = load_fixture("apr_family_A_n3");
    CHECK(gldim(b, 2) == HomDim::at_least(2));
    CHECK(gldim(b) == HomDim::finite(3));

    const auto semisimple = parse_and_build("vertices 1 2\n");
    CHECK(gldim(semisimple) == HomDim::finite(0));
    CHECK(gldim_via_ext(semisimple) == HomDim::finite(0));
    CHECK_THROWS_AS(gldim_via_ext(lam), NotApplicable);
    CHECK(gldim_via_ext(load_fixture("dual_ext_A")) == HomDim::finite(2));
    CHECK(gldim_via_ext(load_fixture("apr_family_A_n2")) == HomDim::finite(2));
}

TEST_CASE("global dimension is left-right symmetric and agrees with the Ext formula")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto b = load_fixture(name);
        const HomDim g = gldim(b);
        const HomDim go = gldim(opposite(*b));
        if (g.is_finite() && go.is_finite()) CHECK(g == go);
        if (g.is_finite()) CHECK(gldim_via_ext(b) == g);
    }
}

TEST_CASE("ext_dim beyond the cap")
{
    const auto lam = load_fixture("lambda_kxy");
    CHECK_THROWS_AS(ext_dim(simple(lam, 0), simple(lam, 0), 5, 3), ResolutionTooShort);
    CHECK(ext_dim(simple(lam, 0), simple(lam, 0), 2, 5) == 3);
}
