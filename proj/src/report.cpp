#include "homdim/report.hpp"

#include "homdim/decompose.hpp"
#include "homdim/resolution.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

namespace homdim {

namespace {

using nlohmann::json;

json to_json(const HomDim& d)
{
    switch (d.kind()) {
    case HomDim::Kind::Finite: return json{{"finite", d.value()}};
    case HomDim::Kind::AtLeast: return json{{"at_least", d.value()}};
    case HomDim::Kind::Infinite: return json{{"infinite", d.certificate()}};
    }
    return {};
}

std::vector<std::string> names(const BasicAlgebra& a, const std::vector<std::size_t>& verts)
{
    std::vector<std::string> out;
    for (std::size_t v : verts) out.push_back(a.vertex_names()[v]);
    return out;
}

std::string join(const std::vector<std::string>& xs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i];
    return s + "}";
}

}  // namespace

bool InvariantReport::has_lower_bound() const
{
    return gldim.is_at_least() || domdim.is_at_least() || nu_domdim.is_at_least();
}

InvariantReport make_report(const AlgebraPtr& a, std::string id, std::size_t cap, std::size_t degree_cap)
{
    const auto start = std::chrono::steady_clock::now();
    InvariantReport r;
    r.id = std::move(id);
    r.field = a->field().name();
    r.dim = a->dim();
    r.vertices = a->vertex_names();
    r.resolution_cap = cap;
    r.degree_cap = degree_cap;

    r.gldim = gldim(a, cap);
    r.domdim = domdim(a, cap);
    r.nu_domdim = nu_domdim(a, cap);
    const NakayamaMap nm = nakayama_map(a);
    r.proj_inj = names(*a, nm.proj_inj);
    for (std::size_t i : nm.proj_inj) r.nakayama.emplace_back(a->vertex_names()[i], a->vertex_names()[*nm.sigma[i]]);
    const auto spi = strongly_pi_vertices(nm);
    r.strongly_pi = names(*a, spi);
    r.classification = classify(a, std::max<std::size_t>(cap, 2));
    if (r.nu_domdim.certainly_at_least(1)) {
        const AlgebraPtr e = centraliser(*a, spi);
        r.associated_selfinjective = InvariantReport::Associated{r.strongly_pi, e->dim(), is_selfinjective(e)};
    }
    r.ext1_symmetry = ext1_symmetry_necessary(*a);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string hom_dim_json(const HomDim& d) { return to_json(d).dump(); }

std::string report_json(const InvariantReport& r, int indent)
{
    const ClassReport& c = r.classification;
    json cls = {
        {"self_injective", c.self_injective},
        {"symmetric", c.symmetric.to_string()},
        {"morita", c.morita},
        {"almost_self_injective", c.almost_self_injective},
        {"gendo_symmetric", to_string(c.gendo_symmetric)},
        {"gendo_symmetric_test", "operational: morita and associated self-injective algebra symmetric"},
    };
    if (c.symmetric.kind == SymmetryResult::Kind::ProbabilisticNo) cls["symmetric_trials"] = c.symmetric.trials;

    json nakayama = json::array();
    for (const auto& [i, j] : r.nakayama) nakayama.push_back({{"injective", i}, {"projective", j}});

    json assoc = nullptr;
    if (r.associated_selfinjective) {
        assoc = {{"vertices", r.associated_selfinjective->vertices},
                 {"dim", r.associated_selfinjective->dim},
                 {"self_injective", r.associated_selfinjective->self_injective}};
    }

    json report = {
        {"algebra", r.id},
        {"field", r.field},
        {"dim", r.dim},
        {"vertices", r.vertices},
        {"gldim", to_json(r.gldim)},
        {"domdim", to_json(r.domdim)},
        {"nu_domdim", to_json(r.nu_domdim)},
        {"proj_inj", r.proj_inj},
        {"nakayama", nakayama},
        {"strongly_pi", r.strongly_pi},
        {"class", cls},
        {"associated_selfinjective", assoc},
        {"ext1_symmetry", r.ext1_symmetry},
        {"caps", {{"resolution", r.resolution_cap}, {"degree", r.degree_cap}}},
    };
    json doc = {{"report", report}, {"timing", {{"wall_ms", r.wall_ms}}}};
    return doc.dump(indent);
}

std::string report_text(const InvariantReport& r)
{
    std::ostringstream os;
    const ClassReport& c = r.classification;
    os << "algebra: " << r.id << "\n"
       << "field: " << r.field << "\n"
       << "dim: " << r.dim << "\n"
       << "vertices: " << join(r.vertices) << "\n"
       << "gldim: " << r.gldim << "\n"
       << "domdim: " << r.domdim << "\n"
       << "nu_domdim: " << r.nu_domdim << "\n"
       << "proj_inj: " << join(r.proj_inj) << "\n";
    os << "nakayama:";
    if (r.nakayama.empty()) os << " (none)";
    for (const auto& [i, j] : r.nakayama) os << " I" << i << "=P" << j;
    os << "\n"
       << "strongly_pi: " << join(r.strongly_pi) << "\n"
       << "self_injective: " << (c.self_injective ? "yes" : "no") << "\n"
       << "symmetric: " << c.symmetric.to_string();
    if (c.symmetric.kind == SymmetryResult::Kind::ProbabilisticNo) os << " (" << c.symmetric.trials << " trials)";
    os << "\n"
       << "morita: " << (c.morita ? "yes" : "no") << "\n"
       << "almost_self_injective: " << (c.almost_self_injective ? "yes" : "no") << "\n"
       << "gendo_symmetric: " << to_string(c.gendo_symmetric) << " (operational test)\n";
    if (r.associated_selfinjective) {
        os << "associated_selfinjective: vertices " << join(r.associated_selfinjective->vertices) << ", dim "
           << r.associated_selfinjective->dim << ", self-injective "
           << (r.associated_selfinjective->self_injective ? "yes" : "no") << "\n";
    } else {
        os << "associated_selfinjective: none (nu_domdim is 0)\n";
    }
    os << "ext1_symmetry: " << (r.ext1_symmetry ? "yes" : "no") << "\n"
       << "caps: resolution " << r.resolution_cap << ", degree " << r.degree_cap << "\n"
       << "wall_ms: " << static_cast<long long>(r.wall_ms) << "\n";
    return os.str();
}

}  // namespace homdim
