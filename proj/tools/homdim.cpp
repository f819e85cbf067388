#include "homdim/algebra_file.hpp"
#include "homdim/error.hpp"
#include "homdim/report.hpp"
#include "homdim/resolution.hpp"
#include "homdim/schur.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace homdim;

enum Exit : int { Ok = 0, Other = 1, Malformed = 2, Inadmissible = 3, LowerBound = 4, BadParams = 5 };

std::string dim_text(const HomDim& d) { return d.is_infinite() ? "inf" : d.to_string(); }

int run_report(const std::string& file, std::optional<std::size_t> cap_flag, bool as_json)
{
    const std::size_t cap = cap_flag ? *cap_flag : default_cap();
    if (cap == 0) throw InvalidParams("--cap must be at least 1");
    const AlgebraFile f = load_algebra_file(file);
    const AlgebraPtr a = build_algebra(f.presentation);
    const InvariantReport r =
        make_report(a, std::filesystem::path(file).stem().string(), cap, f.presentation.degree_cap);
    std::cout << (as_json ? report_json(r) + "\n" : report_text(r));
    return r.has_lower_bound() ? LowerBound : Ok;
}

int run_schur(std::size_t n, std::size_t r, std::optional<std::size_t> ell, std::uint64_t p, std::optional<long long> q,
              bool as_json)
{
    if (ell && q) throw InvalidParams("give either --ell or --q, not both");
    if (!ell && !q) throw InvalidParams("one of --ell or --q is required");
    const std::size_t l = q ? ell_from_q(p, *q) : *ell;
    const DimPair dims = schur_dims({n, r, l, p});
    const bool has_d = l != 0;
    const std::size_t d = has_d ? d_ell_p(r, l, p) : 0;
    if (as_json) {
        nlohmann::json j = {{"n", n},
                            {"r", r},
                            {"ell", l},
                            {"p", p},
                            {"gldim", nlohmann::json::parse(hom_dim_json(dims.gldim))},
                            {"domdim", nlohmann::json::parse(hom_dim_json(dims.domdim))},
                            {"d_ell_p", has_d ? nlohmann::json(d) : nlohmann::json(nullptr)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n: " << n << "\nr: " << r << "\nell: " << l << "\np: " << p << "\n"
                  << "gldim: " << dim_text(dims.gldim) << "\n"
                  << "domdim: " << dim_text(dims.domdim) << "\n"
                  << "d_ell_p: " << (has_d ? std::to_string(d) : "-") << "\n";
    }
    return Ok;
}

int run_blocks(std::size_t r, std::size_t ell, std::uint64_t p, bool as_json)
{
    const auto blocks = blocks_enumerate(r, ell);
    if (as_json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& b : blocks) {
            const DimPair d = block_dims(b.weight, ell, p);
            rows.push_back({{"core", b.core.parts()},
                            {"weight", b.weight},
                            {"gldim", nlohmann::json::parse(hom_dim_json(d.gldim))},
                            {"domdim", nlohmann::json::parse(hom_dim_json(d.domdim))}});
        }
        std::cout << nlohmann::json{{"r", r}, {"ell", ell}, {"p", p}, {"blocks", rows}}.dump(2) << "\n";
        return Ok;
    }
    std::cout << std::left << std::setw(16) << "core" << std::setw(8) << "weight" << std::setw(8) << "gldim"
              << "domdim\n";
    for (const auto& b : blocks) {
        const DimPair d = block_dims(b.weight, ell, p);
        std::cout << std::setw(16) << (b.core.empty() ? "()" : b.core.to_string()) << std::setw(8) << b.weight
                  << std::setw(8) << dim_text(d.gldim) << dim_text(d.domdim) << "\n";
    }
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homological invariants of bound quiver algebras and q-Schur block dimensions"};
    app.require_subcommand(1);

    std::string file;
    std::optional<std::size_t> cap;
    bool report_json_flag = false;
    bool report_text_flag = false;
    auto* report = app.add_subcommand("report", "Compute the invariant report of an algebra file");
    report->add_option("file", file, "Algebra description file")->required();
    report->add_option("--cap", cap, "Resolution cap (default 40, or HOMDIM_CAP)");
    auto* jf = report->add_flag("--json", report_json_flag, "Print JSON");
    report->add_flag("--text", report_text_flag, "Print text (default)")->excludes(jf);

    std::size_t n = 0, r = 0;
    std::optional<std::size_t> ell;
    std::uint64_t p = 0;
    std::optional<long long> q;
    bool schur_json = false;
    auto* schur = app.add_subcommand("schur", "Global and dominant dimension of S_q(n, r)");
    schur->add_option("--n", n, "n")->required();
    schur->add_option("--r", r, "r")->required();
    schur->add_option("--ell", ell, "ell (0: q not a root of unity)");
    schur->add_option("--p", p, "Characteristic, 0 or a prime (default 0)");
    schur->add_option("--q", q, "q as an integer mod p (or +-1 when p = 0); derives ell");
    schur->add_flag("--json", schur_json, "Print JSON");

    std::size_t br = 0, bell = 0;
    std::uint64_t bp = 0;
    bool blocks_json = false;
    auto* blocks = app.add_subcommand("blocks", "Blocks of S_q(n, r) with their dimensions");
    blocks->add_option("--r", br, "r")->required();
    blocks->add_option("--ell", bell, "ell >= 2")->required();
    blocks->add_option("--p", bp, "Characteristic, 0 or a prime (default 0)");
    blocks->add_flag("--json", blocks_json, "Print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : Malformed;
    }

    try {
        if (report->parsed()) return run_report(file, cap, report_json_flag);
        if (schur->parsed()) return run_schur(n, r, ell, p, q, schur_json);
        if (blocks->parsed()) return run_blocks(br, bell, bp, blocks_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return Malformed;
    } catch (const MalformedRelation& e) {
        std::cerr << "malformed relation: " << e.what() << "\n";
        return Malformed;
    } catch (const NotAdmissible& e) {
        std::cerr << "not admissible: " << e.what() << "\n";
        return Inadmissible;
    } catch (const InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return BadParams;
    } catch (const ZeroQ& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return BadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Other;
    }
    return Other;
}
