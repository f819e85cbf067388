#pragma once

// Helpers shared by the test binaries: fixture loading and oracles that are
// computed without going through the code under test.

#include "homdim/algebra_file.hpp"
#include "homdim/decompose.hpp"
#include "homdim/module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace homdim::test {

inline std::string fixture_path(const std::string& name) { return std::string(HOMDIM_FIXTURES_DIR) + "/" + name + ".alg"; }

inline AlgebraPtr load_fixture(const std::string& name)
{
    return build_algebra(load_algebra_file(fixture_path(name)).presentation);
}

inline const std::vector<std::string>& fixture_names()
{
    static const std::vector<std::string> names = {
        "a2",
        "almost_si_3vertex",
        "apr_family_A_n2",
        "apr_family_A_n3",
        "apr_family_B_n2",
        "apr_family_B_n3",
        "dual_ext_A",
        "dual_ext_B",
        "lambda_kxy",
        "lambda_kxy_f2",
        "nakayama3_rad2",
        "nakayama3_rad2_f3",
        "stp_zero",
    };
    return names;
}

inline AlgebraPtr parse_and_build(const std::string& text) { return build_algebra(parse_algebra_file(text)); }

/// Census of paths from s to t that contain no relation as a subpath, for
/// presentations whose relations are all single monomials. Counts are
/// indexed [s][t]. Paths are enumerated directly on the quiver.
inline std::vector<std::vector<std::size_t>> monomial_path_census(const Presentation& p, std::size_t max_len = 64)
{
    const std::size_t n = p.quiver.vertices.size();
    std::set<std::vector<std::size_t>> zero;
    for (const auto& r : p.relations) zero.insert(r.terms.front().path.arrows);
    std::vector<std::vector<std::size_t>> count(n, std::vector<std::size_t>(n, 0));
    std::vector<std::size_t> path;
    auto ends_in_relation = [&]() {
        for (const auto& z : zero) {
            if (z.size() <= path.size() && std::equal(z.rbegin(), z.rend(), path.rbegin())) return true;
        }
        return false;
    };
    auto walk = [&](auto&& self, std::size_t start, std::size_t at) -> void {
        ++count[start][at];
        if (path.size() >= max_len) return;
        for (std::size_t k = 0; k < p.quiver.arrows.size(); ++k) {
            if (p.quiver.arrows[k].source != at) continue;
            path.push_back(k);
            if (!ends_in_relation()) self(self, start, p.quiver.arrows[k].target);
            path.pop_back();
        }
    };
    for (std::size_t s = 0; s < n; ++s) walk(walk, s, s);
    return count;
}

/// Flattened per-vertex blocks of a module map.
inline Vector flatten(const ModuleMap& f)
{
    Vector v;
    for (const Matrix& b : f.blocks()) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < b.cols(); ++c) v.push_back(b(r, c));
        }
    }
    return v;
}

/// Projective dimensions of the simple modules of End(X_1 ⊕ ... ⊕ X_n),
/// computed inside mod Λ without building the endomorphism algebra.
///
/// For the simple at X_t: take the minimal right add(M)-approximation of the
/// radical maps into X_t, then keep taking minimal right add(M)-approximations
/// of kernels until a kernel vanishes. Each step is one term of the
/// projective resolution after applying Hom(M, -).
class ApproximationOracle {
public:
    explicit ApproximationOracle(std::vector<ModulePtr> summands) : ms_(std::move(summands)) {}

    std::vector<std::size_t> simple_projdims(std::size_t limit = 12) const
    {
        std::vector<std::size_t> out;
        for (std::size_t t = 0; t < ms_.size(); ++t) {
            if (!has_radical_maps_into(t)) {
                out.push_back(0);  // the simple is projective
                continue;
            }
            ModulePtr k = approximation_kernel(ms_[t], static_cast<int>(t));
            std::size_t pd = 1;
            while (!k->is_zero() && pd < limit) {
                k = approximation_kernel(k, -1);
                ++pd;
            }
            // pd counts the terms Hom(M, M_0), Hom(M, M_1), ... after P_0.
            out.push_back(pd);
        }
        return out;
    }

private:
    bool has_radical_maps_into(std::size_t t) const
    {
        for (std::size_t u = 0; u < ms_.size(); ++u) {
            if (!radical_maps(u, t).empty()) return true;
        }
        return false;
    }

    std::vector<ModuleMap> radical_maps(std::size_t u, std::size_t w) const
    {
        auto hb = hom_basis(ms_[u], ms_[w]);
        if (u != w) return hb;
        return *local_radical(ms_[u], hb);
    }

    // Maps into y considered by the approximation: all of Hom(X_u, y), or
    // only the radical ones when y is the summand X_{self}.
    std::vector<ModuleMap> maps_into(std::size_t u, const ModulePtr& y, int self) const
    {
        return self == static_cast<int>(u) ? radical_maps(u, u) : hom_basis(ms_[u], y);
    }

    ModulePtr approximation_kernel(const ModulePtr& y, int self) const
    {
        const AlgebraPtr& a = y->algebra();
        std::vector<ModulePtr> parts;
        std::vector<ModuleMap> maps;
        for (std::size_t u = 0; u < ms_.size(); ++u) {
            const std::vector<ModuleMap> targets = maps_into(u, y, self);
            if (targets.empty()) continue;
            // Maps factoring through a radical map X_u -> X_w are redundant.
            std::vector<Vector> cols;
            for (std::size_t w = 0; w < ms_.size(); ++w) {
                const auto into = maps_into(w, y, self);
                for (const auto& h : radical_maps(u, w)) {
                    for (const auto& g : into) cols.push_back(flatten(compose(g, h)));
                }
            }
            const std::size_t redundant = cols.size();
            for (const auto& f : targets) cols.push_back(flatten(f));
            const auto keep = independent_columns(Matrix::from_columns(a->field(), cols.front().size(), cols));
            for (std::size_t i : keep) {
                if (i >= redundant) {
                    parts.push_back(ms_[u]);
                    maps.push_back(targets[i - redundant]);
                }
            }
        }
        if (parts.empty()) return zero_module(a);
        const ModulePtr src = direct_sum(parts);
        std::vector<Matrix> blocks;
        for (std::size_t v = 0; v < a->vertex_count(); ++v) {
            Matrix b(a->field(), y->vertex_dim(v), src->vertex_dim(v));
            std::size_t col = 0;
            for (const auto& f : maps) {
                b.set_block(0, col, f.block(v));
                col += f.block(v).cols();
            }
            blocks.push_back(std::move(b));
        }
        return kernel(ModuleMap(src, y, std::move(blocks))).module;
    }

    std::vector<ModulePtr> ms_;
};

/// Largest value in the list.
inline std::size_t max_of(const std::vector<std::size_t>& xs) { return xs.empty() ? 0 : *std::max_element(xs.begin(), xs.end()); }

}  // namespace homdim::test
