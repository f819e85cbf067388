#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

using nlohmann::json;
using namespace homdim::test;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" + HOMDIM_EXE + "' " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture_arg(const std::string& name) { return "'" + fixture_path(name) + "'"; }

json report(const std::string& name, const std::string& extra = "")
{
    const Run r = run("report " + fixture_arg(name) + " --json " + extra);
    CHECK(r.code == 0);
    return json::parse(r.out)["report"];
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const auto path = std::filesystem::temp_directory_path() / ("homdim_cli_test_" + name + ".alg");
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("report on the A2 fixture")
{
    const json r = report("a2");
    CHECK(r["algebra"] == "a2");
    CHECK(r["gldim"] == json{{"finite", 1}});
    CHECK(r["domdim"] == json{{"finite", 1}});
    CHECK(r["nu_domdim"] == json{{"finite", 0}});
    CHECK(r["proj_inj"] == json{"2"});
    CHECK(r["strongly_pi"] == json::array());
    CHECK(r["nakayama"] == json::parse(R"([{"injective": "2", "projective": "1"}])"));
    CHECK(r["associated_selfinjective"].is_null());
    CHECK(r["caps"]["resolution"] == 40);
    CHECK(r["caps"]["degree"] == 50);

    const Run text = run("report " + fixture_arg("a2") + " --text");
    CHECK(text.code == 0);
    CHECK(text.out.find("gldim: 1\n") != std::string::npos);
    CHECK(text.out.find("nu_domdim: 0\n") != std::string::npos);
    const std::string plain = run("report " + fixture_arg("a2")).out;  // text is the default
    CHECK(plain.substr(0, plain.find("wall_ms")) == text.out.substr(0, text.out.find("wall_ms")));
}

TEST_CASE("report on the remaining bundled fixtures")
{
    const json asi = report("almost_si_3vertex");
    CHECK(asi["class"]["almost_self_injective"] == true);
    CHECK(asi["class"]["morita"] == false);
    CHECK(asi["associated_selfinjective"]["self_injective"] == true);
    CHECK(asi["associated_selfinjective"]["vertices"] == json{"2", "3"});

    const json apr = report("apr_family_A_n3");
    CHECK(apr["domdim"] == json{{"finite", 3}});
    CHECK(apr["gldim"] == json{{"finite", 3}});

    const json lam = report("lambda_kxy");
    CHECK(lam["class"]["symmetric"] == "yes");
    CHECK(lam["class"]["gendo_symmetric"] == "yes");
    CHECK(lam["domdim"]["infinite"] == "self-injective");

    const json f3 = report("nakayama3_rad2_f3");
    CHECK(f3["field"] == "F_3");
    CHECK(f3["class"]["symmetric"] == "no");
}

TEST_CASE("every fixture round-trips")
{
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const json r = report(name);
        CHECK(r["algebra"] == name);
        CHECK(r["dim"] == load_fixture(name)->dim());
    }
}

TEST_CASE("report JSON is deterministic apart from timing")
{
    for (const std::string name : {"stp_zero", "dual_ext_B"}) {
        const Run a = run("report " + fixture_arg(name) + " --json");
        const Run b = run("report " + fixture_arg(name) + " --json");
        json ja = json::parse(a.out), jb = json::parse(b.out);
        CHECK(ja["timing"]["wall_ms"].is_number());
        ja.erase("timing");
        jb.erase("timing");
        CHECK(ja.dump() == jb.dump());
        // The comparable section is also printed byte-identically.
        CHECK(a.out.substr(0, a.out.find("\"timing\"")) == b.out.substr(0, b.out.find("\"timing\"")));
    }
}

TEST_CASE("exit codes")
{
    CHECK(run("report " + fixture_arg("apr_family_A_n3") + " --cap 2").code == 4);
    CHECK(run("report " + fixture_arg("apr_family_A_n3"), "HOMDIM_CAP=2").code == 4);
    const Run capped = run("report " + fixture_arg("apr_family_A_n3") + " --json --cap 2");
    CHECK(json::parse(capped.out)["report"]["gldim"] == json{{"at_least", 2}});

    CHECK(run("report " + temp_file("syntax", "vertices 1 2\narrow a 1 2\nrelation a\n")).code == 2);
    CHECK(run("report " + temp_file("unknown", "vertices 1 2\narrow a 1 2\nrelation a*q\n")).code == 2);
    CHECK(run("report " + temp_file("loop", "vertices 1\narrow x 1 1\ncap 5\n")).code == 3);
    CHECK(run("report /nonexistent/none.alg").code == 1);
    CHECK(run("report").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("report " + fixture_arg("a2") + " --json --text").code == 2);
    CHECK(run("report " + fixture_arg("a2") + " --cap 0").code == 5);
}

TEST_CASE("schur subcommand")
{
    const Run a = run("schur --n 2 --r 2 --ell 2 --p 2");
    CHECK(a.code == 0);
    CHECK(a.out.find("gldim: 2\n") != std::string::npos);
    CHECK(a.out.find("domdim: 2\n") != std::string::npos);
    CHECK(a.out.find("d_ell_p: 1\n") != std::string::npos);

    const Run b = run("schur --n 5 --r 5 --ell 0");
    CHECK(b.code == 0);
    CHECK(b.out.find("gldim: 0\n") != std::string::npos);
    CHECK(b.out.find("domdim: inf\n") != std::string::npos);

    const json j = json::parse(run("schur --n 6 --r 6 --ell 2 --p 2 --json").out);
    CHECK(j["gldim"] == json{{"finite", 8}});
    CHECK(j["d_ell_p"] == 2);

    const json viaq = json::parse(run("schur --n 4 --r 4 --p 3 --q 1 --json").out);
    CHECK(viaq["ell"] == 3);

    CHECK(run("schur --n 1 --r 2 --ell 2").code == 5);
    CHECK(run("schur --n 2 --r 2 --p 5 --q 0").code == 5);
    CHECK(run("schur --n 2 --r 2 --q 0").code == 5);
    CHECK(run("schur --n 2 --r 2 --ell 1").code == 5);
    CHECK(run("schur --n 2 --r 2 --ell 2 --q 1").code == 5);
    CHECK(run("schur --n 2 --r 2").code == 5);
    CHECK(run("schur --n 2 --r 2 --ell 2 --p 4").code == 5);
}

TEST_CASE("blocks subcommand")
{
    const Run a = run("blocks --r 3 --ell 2 --p 0");
    CHECK(a.code == 0);
    const json j = json::parse(run("blocks --r 3 --ell 2 --p 0 --json").out);
    REQUIRE(j["blocks"].size() == 2);
    CHECK(j["blocks"][0]["core"] == json{2, 1});
    CHECK(j["blocks"][0]["weight"] == 0);
    CHECK(j["blocks"][0]["domdim"] == json{{"infinite", "semisimple"}});
    CHECK(j["blocks"][1]["core"] == json{1});
    CHECK(j["blocks"][1]["gldim"] == json{{"finite", 2}});
    CHECK(a.out.find("2,1") != std::string::npos);

    const json z = json::parse(run("blocks --r 0 --ell 2 --json").out);
    CHECK(z["blocks"].size() == 1);
    const Run two = run("blocks --r 2 --ell 2 --p 2");
    CHECK(two.out.find("()") != std::string::npos);
    CHECK(json::parse(run("blocks --r 2 --ell 2 --p 2 --json").out)["blocks"][0]["gldim"] == json{{"finite", 2}});

    CHECK(run("blocks --r 3 --ell 1").code == 5);
}
