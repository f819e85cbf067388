// Basis construction for kQ/I with I generated by length-homogeneous relations.
//
// Degree by degree, A_d is spanned by the candidates n*a (n a normal path of
// degree d-1, a an arrow). The ideal in degree d is I_{d-1}*kQ_1 plus the
// span of n*r for relations r and normal paths n of degree d-|r|; the first
// summand is already zero on candidates, so only the second needs reducing.
// Row reduction with the candidate columns in descending lexicographic order
// makes the surviving normal paths the lexicographically smallest ones.

#include "homdim/algebra.hpp"
#include "homdim/error.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace homdim {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct NormalPath {
    std::size_t source;
    std::size_t target;
    std::vector<std::size_t> arrows;
};

class PathBasisBuilder {
public:
    explicit PathBasisBuilder(const Presentation& p) : p_(p), f_(p.field)
    {
        std::vector<NormalPath> trivial;
        for (std::size_t v = 0; v < p.quiver.vertices.size(); ++v) trivial.push_back({v, v, {}});
        normal_.push_back(std::move(trivial));
        cand_index_.emplace_back();
        nf_.emplace_back();
    }

    void run()
    {
        for (std::size_t d = 1;; ++d) {
            build_degree(d);
            if (normal_[d].empty()) {
                normal_.pop_back();
                break;
            }
            if (d >= p_.degree_cap) {
                throw NotAdmissible("paths of degree " + std::to_string(d) +
                                    " survive the relations; ideal is not admissible within degree cap " +
                                    std::to_string(p_.degree_cap));
            }
        }
    }

    AlgebraPtr finish() const
    {
        BasicAlgebra::Data data;
        data.field = f_;
        data.vertex_names = p_.quiver.vertices;
        data.quiver = p_.quiver;
        std::vector<std::size_t> offset;
        for (const auto& layer : normal_) {
            offset.push_back(data.labels.size());
            for (const auto& np : layer) {
                data.labels.push_back(label(np));
                data.supports.push_back({np.source, np.target});
            }
        }
        for (std::size_t v = 0; v < p_.quiver.vertices.size(); ++v) data.idempotents.push_back(v);

        const std::size_t n = data.labels.size();
        data.products.resize(n * n);
        for (std::size_t da = 0; da < normal_.size(); ++da) {
            for (std::size_t ia = 0; ia < normal_[da].size(); ++ia) {
                const NormalPath& a = normal_[da][ia];
                for (std::size_t db = 0; db < normal_.size(); ++db) {
                    for (std::size_t ib = 0; ib < normal_[db].size(); ++ib) {
                        const NormalPath& b = normal_[db][ib];
                        if (a.target != b.source) continue;
                        SparseVector prod;
                        if (da + db < normal_.size()) {
                            Layer v{{ia, f_.one()}};
                            std::size_t deg = da;
                            for (std::size_t arrow : b.arrows) v = step(v, deg++, arrow);
                            for (const auto& [i, c] : v) prod.emplace_back(offset[deg] + i, c);
                        }
                        data.products[(offset[da] + ia) * n + offset[db] + ib] = std::move(prod);
                    }
                }
            }
        }
        return std::make_shared<const BasicAlgebra>(std::move(data));
    }

private:
    using Layer = std::map<std::size_t, Scalar>;  // index into normal_[deg] -> coefficient

    std::string label(const NormalPath& np) const
    {
        if (np.arrows.empty()) return "e_" + p_.quiver.vertices[np.source];
        std::string s;
        for (std::size_t i = 0; i < np.arrows.size(); ++i) {
            if (i > 0) s += "*";
            s += p_.quiver.arrows[np.arrows[i]].name;
        }
        return s;
    }

    // Multiply a degree-`deg` element by an arrow, giving candidate coordinates in degree deg+1.
    Layer to_candidates(const Layer& v, std::size_t deg, std::size_t arrow) const
    {
        Layer out;
        const std::size_t na = p_.quiver.arrows.size();
        for (const auto& [i, c] : v) {
            const std::size_t cand = cand_index_[deg + 1][i * na + arrow];
            if (cand == kNone) continue;
            Scalar& slot = out.try_emplace(cand, f_.zero()).first->second;
            slot += c;
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }

    Layer reduce(const Layer& cands, std::size_t deg) const
    {
        Layer out;
        for (const auto& [cand, c] : cands) {
            for (const auto& [i, coeff] : nf_[deg][cand]) {
                Scalar& slot = out.try_emplace(i, f_.zero()).first->second;
                slot += coeff * c;
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }

    Layer step(const Layer& v, std::size_t deg, std::size_t arrow) const
    {
        if (deg + 1 >= normal_.size()) return {};
        return reduce(to_candidates(v, deg, arrow), deg + 1);
    }

    void build_degree(std::size_t d)
    {
        const auto& arrows = p_.quiver.arrows;
        const std::size_t na = arrows.size();
        const auto& prev = normal_[d - 1];

        struct Candidate {
            std::size_t prev;
            std::size_t arrow;
            std::vector<std::size_t> word;
        };
        std::vector<Candidate> cands;
        for (std::size_t i = 0; i < prev.size(); ++i) {
            for (std::size_t a = 0; a < na; ++a) {
                if (arrows[a].source != prev[i].target) continue;
                auto word = prev[i].arrows;
                word.push_back(a);
                cands.push_back({i, a, std::move(word)});
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.word < y.word; });
        std::vector<std::size_t> index(prev.size() * na, kNone);
        for (std::size_t c = 0; c < cands.size(); ++c) index[cands[c].prev * na + cands[c].arrow] = c;
        cand_index_.push_back(std::move(index));

        // Ideal generators in degree d, as rows over the candidates.
        std::vector<Layer> gens;
        for (const Relation& r : p_.relations) {
            const std::size_t len = r.terms.front().path.length();
            if (len > d) continue;
            const std::size_t base = d - len;
            const std::size_t src = r.terms.front().path.source;
            for (std::size_t i = 0; i < normal_[base].size(); ++i) {
                if (normal_[base][i].target != src) continue;
                Layer total;
                for (const RelationTerm& term : r.terms) {
                    Layer v{{i, term.coefficient}};
                    std::size_t deg = base;
                    for (std::size_t t = 0; t + 1 < len; ++t) v = step(v, deg++, term.path.arrows[t]);
                    for (const auto& [cand, c] : to_candidates(v, deg, term.path.arrows.back())) {
                        Scalar& slot = total.try_emplace(cand, f_.zero()).first->second;
                        slot += c;
                    }
                }
                std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
                if (!total.empty()) gens.push_back(std::move(total));
            }
        }

        const std::size_t nc = cands.size();
        std::vector<bool> dead(nc, false);
        std::vector<std::pair<std::size_t, Vector>> pivot_rows;  // candidate killed -> its row
        if (!gens.empty() && nc > 0) {
            Matrix w(f_, gens.size(), nc);
            for (std::size_t g = 0; g < gens.size(); ++g) {
                for (const auto& [cand, c] : gens[g]) w(g, nc - 1 - cand) = c;
            }
            const RowEchelon ech = row_reduce(std::move(w));
            for (std::size_t j = 0; j < ech.pivots.size(); ++j) {
                const std::size_t cand = nc - 1 - ech.pivots[j];
                dead[cand] = true;
                pivot_rows.emplace_back(cand, ech.reduced.row(j));
            }
        }

        std::vector<NormalPath> layer;
        std::vector<std::size_t> local(nc, kNone);
        for (std::size_t c = 0; c < nc; ++c) {
            if (dead[c]) continue;
            local[c] = layer.size();
            layer.push_back({prev[cands[c].prev].source, arrows[cands[c].arrow].target, cands[c].word});
        }
        std::vector<SparseVector> nf(nc);
        for (std::size_t c = 0; c < nc; ++c) {
            if (!dead[c]) nf[c] = {{local[c], f_.one()}};
        }
        for (const auto& [cand, row] : pivot_rows) {
            SparseVector expr;
            for (std::size_t col = 0; col < nc; ++col) {
                const std::size_t other = nc - 1 - col;
                if (dead[other] || row[col].is_zero()) continue;
                expr.emplace_back(local[other], -row[col]);
            }
            std::sort(expr.begin(), expr.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            nf[cand] = std::move(expr);
        }
        nf_.push_back(std::move(nf));
        normal_.push_back(std::move(layer));
    }

    const Presentation& p_;
    FieldSpec f_;
    std::vector<std::vector<NormalPath>> normal_;
    std::vector<std::vector<std::size_t>> cand_index_;  // per degree: prev*arrows+arrow -> candidate
    std::vector<std::vector<SparseVector>> nf_;         // per degree: candidate -> normal form
};

void validate_relations(const Presentation& p)
{
    const auto& arrows = p.quiver.arrows;
    for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
        const Relation& r = p.relations[ri];
        const std::string where = "relation " + std::to_string(ri + 1) + ": ";
        if (r.terms.empty()) throw MalformedRelation(where + "no terms");
        bool nonzero = false;
        const Path& first = r.terms.front().path;
        for (const RelationTerm& t : r.terms) {
            const Path& path = t.path;
            if (t.coefficient.modulus() != p.field.characteristic()) {
                throw MalformedRelation(where + "coefficient from a different field");
            }
            nonzero = nonzero || !t.coefficient.is_zero();
            if (path.length() < 2) throw MalformedRelation(where + "paths must have length at least 2");
            if (path.length() != first.length()) throw MalformedRelation(where + "terms differ in length");
            for (std::size_t a : path.arrows) {
                if (a >= arrows.size()) throw MalformedRelation(where + "unknown arrow index");
            }
            for (std::size_t i = 0; i + 1 < path.length(); ++i) {
                if (arrows[path.arrows[i]].target != arrows[path.arrows[i + 1]].source) {
                    throw MalformedRelation(where + "path does not compose");
                }
            }
            if (arrows[path.arrows.front()].source != path.source || arrows[path.arrows.back()].target != path.target) {
                throw MalformedRelation(where + "path endpoints disagree with its arrows");
            }
            if (path.source != first.source || path.target != first.target) {
                throw MalformedRelation(where + "terms are not parallel");
            }
        }
        if (!nonzero) throw MalformedRelation(where + "all coefficients vanish");
    }
}

}  // namespace

AlgebraPtr build_algebra(const Presentation& p)
{
    if (p.degree_cap < 2) throw MalformedRelation("degree cap must be at least 2");
    p.quiver.validate();
    validate_relations(p);
    PathBasisBuilder builder(p);
    builder.run();
    return builder.finish();
}

}  // namespace homdim
