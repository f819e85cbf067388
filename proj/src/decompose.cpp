#include "homdim/decompose.hpp"

#include "homdim/error.hpp"

#include <algorithm>
#include <random>

namespace homdim {

namespace {

using Poly = std::vector<Scalar>;  // coefficients, constant term first

Matrix power(const Matrix& m, std::uint64_t e)
{
    Matrix result = Matrix::identity(m.field(), m.rows());
    Matrix base = m;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

// Square until the exponent reaches the size; the result vanishes iff m is nilpotent.
Matrix stable_power(const Matrix& m)
{
    Matrix p = m;
    for (std::size_t k = 1; k < m.rows(); k *= 2) p = p * p;
    return p;
}

bool nilpotent(const ModuleMap& f)
{
    return std::all_of(f.blocks().begin(), f.blocks().end(), [](const Matrix& b) { return stable_power(b).is_zero(); });
}

ModuleMap shifted(const ModuleMap& f, const Scalar& mu)
{
    std::vector<Matrix> blocks;
    for (const Matrix& b : f.blocks()) blocks.push_back(b - Matrix::identity(b.field(), b.rows()).scaled(mu));
    return ModuleMap(f.source(), f.target(), std::move(blocks));
}

Vector flatten(const ModuleMap& f)
{
    Vector out;
    for (const Matrix& b : f.blocks()) {
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b(i, j));
        }
    }
    return out;
}

// Indices of a maximal independent subfamily.
std::vector<std::size_t> independent_maps(const std::vector<ModuleMap>& maps, const FieldSpec& f, std::size_t len)
{
    if (maps.empty() || len == 0) return {};
    std::vector<Vector> cols;
    for (const auto& m : maps) cols.push_back(flatten(m));
    return independent_columns(Matrix::from_columns(f, len, cols));
}

// The unique λ with f − λ nilpotent, if there is one in k.
std::optional<Scalar> scalar_part(const ModuleMap& f, std::size_t dim)
{
    const FieldSpec& fld = f.source()->field();
    Scalar lambda = fld.zero();
    if (fld.is_rational()) {
        Scalar trace = fld.zero();
        for (const Matrix& b : f.blocks()) {
            for (std::size_t i = 0; i < b.rows(); ++i) trace += b(i, i);
        }
        lambda = trace / fld.from_int(static_cast<long long>(dim));
    } else {
        // (λ + n)^(p^s) = λ once p^s ≥ dim, for λ in F_p and n nilpotent.
        const std::uint64_t p = fld.characteristic();
        std::uint64_t e = p;
        while (e < dim) e *= p;
        bool have = false;
        for (const Matrix& b : f.blocks()) {
            if (b.rows() == 0) continue;
            const Matrix q = power(b, e);
            const Scalar c = q(0, 0);
            if (!(q == Matrix::identity(fld, b.rows()).scaled(c))) return std::nullopt;
            if (have && !(c == lambda)) return std::nullopt;
            lambda = c;
            have = true;
        }
    }
    if (!nilpotent(shifted(f, lambda))) return std::nullopt;
    return lambda;
}

Poly poly_mul_linear(const Poly& p, const Scalar& root)  // p · (x − root)
{
    Poly out(p.size() + 1, p.front().modulus() ? Scalar::residue(0, p.front().modulus()) : Scalar::rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= p[i] * root;
    }
    return out;
}

Scalar evaluate(const Poly& p, const Scalar& x)
{
    Scalar acc = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    for (mpz_class d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) factors.emplace_back(d, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    return out;
}

std::vector<Scalar> rational_roots(const Poly& p)
{
    std::vector<Scalar> roots;
    // Clear denominators.
    mpz_class lcm = 1;
    for (const Scalar& c : p) {
        const mpq_class q = c.to_mpq();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<mpz_class> ints;
    for (const Scalar& c : p) {
        const mpq_class q = c.to_mpq() * lcm;
        ints.push_back(q.get_num());
    }
    std::size_t low = 0;
    while (low < ints.size() && ints[low] == 0) ++low;
    if (low > 0) roots.push_back(Scalar::rational(0));
    if (low + 1 >= ints.size()) return roots;
    const mpz_class a0 = ints[low];
    const mpz_class an = ints.back();
    const mpz_class limit("1000000000000");
    if (abs(a0) > limit || abs(an) > limit) return roots;
    for (const mpz_class& num : divisors(a0)) {
        for (const mpz_class& den : divisors(an)) {
            for (int sign : {1, -1}) {
                const Scalar x = Scalar::rational(mpq_class(sign * num, den));
                if (evaluate(p, x).is_zero() &&
                    std::find(roots.begin(), roots.end(), x) == roots.end()) {
                    roots.push_back(x);
                }
            }
        }
    }
    return roots;
}

std::optional<std::vector<ModulePtr>> try_split(const ModulePtr& m, const ModuleMap& f)
{
    std::vector<Scalar> mus;
    for (const Matrix& b : f.blocks()) {
        if (b.rows() == 0) continue;
        for (const Scalar& mu : eigenvalues_in_field(b)) {
            if (std::find(mus.begin(), mus.end(), mu) == mus.end()) mus.push_back(mu);
        }
    }
    for (const Scalar& mu : mus) {
        const ModuleMap y = shifted(f, mu);
        std::vector<Matrix> blocks;
        for (const Matrix& b : y.blocks()) blocks.push_back(stable_power(b));
        const ModuleMap z(m, m, std::move(blocks));
        const Submodule im = image(z);
        const Submodule ker = kernel(z);
        if (im.module->is_zero() || ker.module->is_zero()) continue;
        return std::vector<ModulePtr>{im.module, ker.module};
    }
    return std::nullopt;
}

void split_into(const ModulePtr& m, std::size_t budget, std::vector<ModulePtr>& out)
{
    if (m->is_zero()) return;
    const auto end = hom_basis(m, m);
    if (local_radical(m, end)) {
        out.push_back(m);
        return;
    }
    const FieldSpec& fld = m->field();
    auto attempt = [&](const ModuleMap& f) {
        if (auto parts = try_split(m, f)) {
            for (const auto& part : *parts) split_into(part, budget, out);
            return true;
        }
        return false;
    };
    for (const auto& f : end) {
        if (attempt(f)) return;
    }
    std::mt19937_64 rng(0x6b72756c6cULL);
    std::uniform_int_distribution<long long> small(-3, 3);
    std::uniform_int_distribution<long long> residue(0, fld.is_rational() ? 0 : static_cast<long long>(fld.characteristic()) - 1);
    for (std::size_t trial = 0; trial < budget; ++trial) {
        ModuleMap f = ModuleMap::zero(m, m);
        for (const auto& g : end) {
            const long long c = fld.is_rational() ? small(rng) : residue(rng);
            if (c != 0) f = f + g.scaled(fld.from_int(c));
        }
        if (attempt(f)) return;
    }
    throw SplitFailure("no splitting endomorphism found for a module of dimension " + std::to_string(m->dim()) +
                       " after " + std::to_string(budget) + " random candidates");
}

}  // namespace

std::vector<Scalar> characteristic_polynomial(const Matrix& m)
{
    const std::size_t n = m.rows();
    const FieldSpec& f = m.field();
    Matrix h = m;
    // Reduce to upper Hessenberg form by similarity transformations.
    for (std::size_t c = 1; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && h(piv, c - 1).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(c, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, piv), h(j, c));
        }
        const Scalar inv = h(c, c - 1).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (h(i, c - 1).is_zero()) continue;
            const Scalar u = h(i, c - 1) * inv;
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(c, j);
            for (std::size_t j = 0; j < n; ++j) h(j, c) += u * h(j, i);
        }
    }
    std::vector<Poly> p(n + 1);
    p[0] = {f.one()};
    for (std::size_t k = 1; k <= n; ++k) {
        p[k] = poly_mul_linear(p[k - 1], h(k - 1, k - 1));
        Scalar t = f.one();
        for (std::size_t i = 1; i < k; ++i) {
            t *= h(k - i, k - i - 1);
            const Scalar c = t * h(k - i - 1, k - 1);
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) p[k][j] -= c * p[k - i - 1][j];
        }
    }
    return p[n];
}

std::vector<Scalar> eigenvalues_in_field(const Matrix& m)
{
    const FieldSpec& f = m.field();
    const Poly cp = characteristic_polynomial(m);
    if (f.is_rational()) return rational_roots(cp);
    std::vector<Scalar> roots;
    const std::uint64_t p = f.characteristic();
    if (p <= 65536) {
        for (std::uint64_t x = 0; x < p; ++x) {
            const Scalar s = f.from_int(static_cast<long long>(x));
            if (evaluate(cp, s).is_zero()) roots.push_back(s);
        }
        return roots;
    }
    for (long long x = -64; x <= 64; ++x) {
        const Scalar s = f.from_int(x);
        if (evaluate(cp, s).is_zero() && std::find(roots.begin(), roots.end(), s) == roots.end()) roots.push_back(s);
    }
    return roots;
}

std::optional<std::vector<ModuleMap>> local_radical(const ModulePtr& m, const std::vector<ModuleMap>& end_basis)
{
    if (m->is_zero() || end_basis.empty()) return std::nullopt;
    const FieldSpec& fld = m->field();
    std::vector<ModuleMap> nil;
    for (const auto& f : end_basis) {
        const auto lambda = scalar_part(f, m->dim());
        if (!lambda) return std::nullopt;
        nil.push_back(shifted(f, *lambda));
    }
    std::size_t len = 0;
    for (std::size_t d : m->vertex_dims()) len += d * d;
    std::vector<ModuleMap> radical;
    for (std::size_t i : independent_maps(nil, fld, len)) radical.push_back(nil[i]);
    if (radical.size() + 1 != end_basis.size()) return std::nullopt;

    // The span must be a nilpotent ideal: J^k reaches zero with strictly falling dimension.
    std::vector<ModuleMap> layer = radical;
    std::size_t prev = layer.size();
    while (!layer.empty()) {
        std::vector<ModuleMap> next;
        for (const auto& j : radical) {
            for (const auto& x : layer) {
                ModuleMap p = compose(j, x);
                if (!p.is_zero()) next.push_back(std::move(p));
            }
        }
        std::vector<ModuleMap> reduced;
        for (std::size_t i : independent_maps(next, fld, len)) reduced.push_back(next[i]);
        if (!reduced.empty() && reduced.size() >= prev) return std::nullopt;
        prev = reduced.size();
        layer = std::move(reduced);
    }
    return radical;
}

bool is_indecomposable(const ModulePtr& m) { return local_radical(m, hom_basis(m, m)).has_value(); }

std::vector<ModulePtr> indecomposable_summands(const ModulePtr& m, std::size_t budget)
{
    std::vector<ModulePtr> out;
    split_into(m, budget, out);
    return out;
}

bool indecomposables_isomorphic(const ModulePtr& x, const ModulePtr& y)
{
    if (!same_algebra(x->algebra(), y->algebra())) throw AlgebraMismatch();
    if (x->vertex_dims() != y->vertex_dims()) return false;
    const auto there = hom_basis(x, y);
    if (there.empty()) return false;
    const auto back = hom_basis(y, x);
    for (const auto& f : there) {
        for (const auto& g : back) {
            if (!nilpotent(compose(g, f))) return true;
        }
    }
    return false;
}

std::vector<Summand> decompose(const ModulePtr& m, std::size_t budget)
{
    std::vector<Summand> out;
    for (const auto& part : indecomposable_summands(m, budget)) {
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const Summand& s) { return indecomposables_isomorphic(s.module, part); });
        if (it != out.end()) {
            ++it->multiplicity;
        } else {
            out.push_back({part, 1});
        }
    }
    return out;
}

bool is_isomorphic(const ModulePtr& m, const ModulePtr& n)
{
    if (!same_algebra(m->algebra(), n->algebra())) throw AlgebraMismatch();
    if (m->vertex_dims() != n->vertex_dims()) return false;
    if (m->is_zero()) return true;
    if (top_dims(*m) != top_dims(*n) || socle_dims(*m) != socle_dims(*n)) return false;

    const auto there = hom_basis(m, n);
    if (there.empty()) return false;
    for (const auto& f : there) {
        if (f.is_isomorphism()) return true;
    }
    const FieldSpec& fld = m->field();
    std::mt19937_64 rng(0x150f00dULL);
    std::uniform_int_distribution<long long> coeff(-50, 50);
    for (int trial = 0; trial < 24; ++trial) {
        ModuleMap f = ModuleMap::zero(m, n);
        for (const auto& g : there) f = f + g.scaled(fld.from_int(coeff(rng)));
        if (f.is_isomorphism()) return true;
    }
    // Over a large field the search above is conclusive in practice; settle
    // the question exactly anyway.
    if (there.size() != hom_dim(m, m) || there.size() != hom_dim(n, n)) return false;
    const auto dm = decompose(m);
    auto dn = decompose(n);
    if (dm.size() != dn.size()) return false;
    for (const auto& s : dm) {
        auto it = std::find_if(dn.begin(), dn.end(), [&](const Summand& t) {
            return t.multiplicity == s.multiplicity && indecomposables_isomorphic(s.module, t.module);
        });
        if (it == dn.end()) return false;
        dn.erase(it);
    }
    return true;
}

bool is_selfinjective(const AlgebraPtr& a)
{
    for (std::size_t i = 0; i < a->vertex_count(); ++i) {
        const ModulePtr inj = injective(a, i);
        bool found = false;
        for (std::size_t j = 0; j < a->vertex_count() && !found; ++j) found = is_isomorphic(inj, projective(a, j));
        if (!found) return false;
    }
    return true;
}

}  // namespace homdim
