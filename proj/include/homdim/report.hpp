#pragma once

#include "homdim/algebra.hpp"
#include "homdim/dominant.hpp"
#include "homdim/hom_dim.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homdim {

/// Everything `homdim report` prints for one algebra. Vertices are referred to
/// by their names in the presentation.
struct InvariantReport {
    struct Associated {
        std::vector<std::string> vertices;
        std::size_t dim = 0;
        bool self_injective = false;
    };

    std::string id;
    std::string field;
    std::size_t dim = 0;
    std::vector<std::string> vertices;
    HomDim gldim = HomDim::finite(0);
    HomDim domdim = HomDim::finite(0);
    HomDim nu_domdim = HomDim::finite(0);
    std::vector<std::string> proj_inj;
    /// (i, j) for each I_i ≅ P_j.
    std::vector<std::pair<std::string, std::string>> nakayama;
    std::vector<std::string> strongly_pi;
    ClassReport classification;
    std::optional<Associated> associated_selfinjective;  // present when nu_domdim ≥ 1
    bool ext1_symmetry = false;
    std::size_t resolution_cap = 0;
    std::size_t degree_cap = 0;
    double wall_ms = 0;

    /// True when some dimension is only a lower bound.
    bool has_lower_bound() const;
};

/// Runs every invariant on `a` with the given resolution cap. `degree_cap`
/// is recorded for the output only.
InvariantReport make_report(const AlgebraPtr& a, std::string id, std::size_t cap, std::size_t degree_cap);

/// {"report": {...}, "timing": {"wall_ms": ...}} with keys sorted at every
/// level. Everything outside "timing" is deterministic.
std::string report_json(const InvariantReport& r, int indent = 2);

/// Human-readable "key: value" lines.
std::string report_text(const InvariantReport& r);

/// {"finite": n}, {"at_least": c} or {"infinite": "<certificate>"}.
std::string hom_dim_json(const HomDim& d);

}  // namespace homdim
