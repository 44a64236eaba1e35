#include <doctest.h>

#include "cli.hpp"

#include <hyperlab/io.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace hyperlab;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "hyperlab");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("hyperlab_cli_" + name)).string();
}

}  // namespace

TEST_CASE("construct, extend, star and solve through the CLI") {
    const auto base = temp("base.json");
    auto made = run_cli({"construct", "sigma", "--n", "2", "--r", "4", "--q", "3", "--sigma", "3,1", "-o", base});
    REQUIRE(made.code == 0);
    auto doc = load(base);
    CHECK(doc.graph.edge_count() == 6);
    CHECK(restore_sigma_meta(doc)->sigma == parse_partition("3,1"));

    auto chi = run_cli({"chi", "--in", base, "--format", "json"});
    REQUIRE(chi.code == 0);
    auto chi_json = nlohmann::json::parse(chi.out);
    CHECK(chi_json["chi"] == 2);
    CHECK(chi_json["witness"].size() == 6);

    const auto ext = temp("ext.json");
    auto extended = run_cli({"extend", "--in", base, "--edge", "0", "--p", "1", "--qext", "1", "--T", "1", "--P",
                             "1", "--Q", "1", "-o", ext});
    REQUIRE(extended.code == 0);
    CHECK(load(ext).graph.vertex_count() == 8);

    auto spec = run_cli({"spectrum", "--in", ext, "--alpha", "2", "--beta", "2", "--emit-witnesses",
                         "--format", "json"});
    REQUIRE(spec.code == 0);
    auto spec_json = nlohmann::json::parse(spec.out);
    auto base_spec = nlohmann::json::parse(run_cli({"spectrum", "--in", base, "--format", "json"}).out);
    CHECK(spec_json["feasible"] == base_spec["feasible"]);
    CHECK(spec_json["witnesses"].contains("2"));

    const auto starred = temp("star.json");
    REQUIRE(run_cli({"star", "--in", base, "--t", "1", "--steps", "3", "--rule", "random", "--seed", "4", "-o",
                     starred})
                .code == 0);
    CHECK(load(starred).graph.vertex_count() == 9);
    auto clique = run_cli({"clique", "--in", starred, "--format", "json"});
    REQUIRE(clique.code == 0);
    CHECK(nlohmann::json::parse(clique.out)["omega"] == 5);

    auto table = run_cli({"clique", "--in", starred});
    CHECK(table.out.find("omega") != std::string::npos);
    auto csv = run_cli({"chi", "--in", base, "--format", "csv"});
    CHECK(csv.out.rfind("chi,witness\n", 0) == 0);
}

TEST_CASE("construct writes to stdout and warns about edgeless sigma") {
    auto run = run_cli({"construct", "sigma", "--n", "3", "--r", "4", "--q", "2", "--sigma", "3,1"});
    CHECK(run.code == 0);
    CHECK(parse_document(run.out).graph.edge_count() == 0);
    CHECK(run.err.find("warning") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"verify", "lemma-3.1"}).code == cli::kOk);
    CHECK(run_cli({"verify", "bogus"}).code == cli::kUsage);
    CHECK(run_cli({"chi"}).code == cli::kUsage);
    CHECK(run_cli({}).code == cli::kUsage);
    CHECK(run_cli({"--format", "xml", "verify", "all"}).code == cli::kUsage);
    CHECK(run_cli({"chi", "--in", "/nonexistent.json"}).code == cli::kUsage);
    CHECK(run_cli({"construct", "sigma", "--n", "9", "--r", "3", "--q", "9", "--sigma", "2,1"}).code == cli::kSizeGuard);

    const auto base = temp("guard.json");
    REQUIRE(run_cli({"construct", "sigma", "--n", "2", "--r", "4", "--q", "3", "--sigma", "3,1", "-o", base}).code == 0);
    auto guarded = run_cli({"--guard-vertices", "4", "chi", "--in", base});
    CHECK(guarded.code == cli::kSizeGuard);
    CHECK(guarded.err.find("warning") != std::string::npos);

    ::setenv("HYPERLAB_GUARD", "5", 1);
    auto env = run_cli({"clique", "--in", base});
    ::unsetenv("HYPERLAB_GUARD");
    CHECK(env.code == cli::kSizeGuard);
    CHECK(env.err.find("HYPERLAB_GUARD") != std::string::npos);
}

TEST_CASE("verify output formats") {
    auto json = run_cli({"verify", "thm-3.5", "--format", "json"});
    REQUIRE(json.code == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["pass"] == true);
    CHECK(doc["reports"][0]["theorem"] == "thm-3.5");
    CHECK(doc["reports"][0]["instances"] == 3);

    auto csv = run_cli({"verify", "prop-4.3", "--trials", "4", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.rfind("theorem,instances,failures,pass,elapsed_seconds\nprop-4.3,4,0,true,", 0) == 0);

    auto table = run_cli({"verify", "thm-2.2", "--trials", "3", "--seed", "11"});
    CHECK(table.code == 0);
    CHECK(table.out.find("PASS") != std::string::npos);
}
