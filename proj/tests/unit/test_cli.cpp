#include <doctest.h>

#include <cstdlib>

#include "../cli_harness.hpp"
#include "szego/io.hpp"

using namespace szego::testing;
namespace fs = std::filesystem;

namespace {

std::size_t count_lines(const std::string& s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("grid to stdout") {
    const auto r = run_cli({"grid", "--rings", "2", "--out", "-"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("k,j,re,im,weight\n", 0) == 0);
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out.find("\n1,0,0,0,1\n") != std::string::npos);
    CHECK(r.out.find("\n2,0,0.5,0,") != std::string::npos);
    CHECK(r.out.find("\n2,1,-0.5,") != std::string::npos);
    CHECK(r.err.find("manifest:") != std::string::npos);
}

TEST_CASE("grid to file writes a manifest beside it") {
    const auto dir = scratch_dir("grid");
    const auto path = (dir / "nodes.csv").string();
    CHECK(run_cli({"grid", "--rings", "10", "--out", path}).code == 0);
    CHECK(count_lines(slurp(path)) == 56);
    const auto meta = nlohmann::json::parse(slurp(path + ".manifest.json"));
    CHECK(meta["command"] == "grid");
    CHECK(meta["parameters"]["rings"] == 10);
    CHECK(meta.contains("timestamp"));
    CHECK(meta.contains("tool_version"));
}

TEST_CASE("verify lemma3 passes with tiny margins") {
    const auto r = run_cli({"verify", "lemma3", "--degree", "7", "--rings", "8", "--trials", "10", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 11);
    std::stringstream ss(r.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "trial,k,r,value,bound,margin");
    while (std::getline(ss, line)) {
        const double value = std::stod(line.substr(line.find(',', line.find(',', line.find(',') + 1) + 1) + 1));
        CHECK(value > 0.0);
    }
}

TEST_CASE("verify lemma4 and eq5") {
    const auto l4 = run_cli({"verify", "lemma4", "--degree", "40", "--rings", "64", "--trials", "50", "--seed", "3"});
    CHECK(l4.code == 0);
    CHECK(count_lines(l4.out) == 51);
    const auto e5 = run_cli({"verify", "eq5", "--degree", "6", "--rings", "300", "--trials", "5", "--seed", "3"});
    CHECK(e5.code == 0);
    CHECK(count_lines(e5.out) == 11);
}

TEST_CASE("ds-divergence reproduces 2K - H_K") {
    const auto r = run_cli({"ds-divergence", "--rings", "10", "--function", "-", "--out", "-"},
                           R"({"coeffs": [[1, 0]]})");
    CHECK(r.code == 0);
    const auto last = r.out.substr(r.out.rfind("\n10,") + 4);
    CHECK(std::stod(last) == doctest::Approx(17.071031746031746).epsilon(1e-12));
}

TEST_CASE("frame-bounds") {
    const auto r = run_cli({"frame-bounds", "--rings", "128", "--trials", "12", "--degree", "8", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 13);
    CHECK(r.err.find("A_emp=") != std::string::npos);
}

TEST_CASE("decompose and reconstruct round trip") {
    const auto dir = scratch_dir("decomp");
    const auto f = (dir / "f.json").string();
    {
        std::ofstream(f) << R"({"coeffs": [[0.3, 0.1], [-0.5, 0.2], [0.1, 0.9], [0.4, -0.4]]})";
    }
    const auto d = (dir / "d.json").string();
    const auto r = run_cli({"decompose", "--function", f, "--rings", "16", "--tol", "1e-3", "--out", d});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(slurp(d));
    CHECK(doc["status"] == "converged");
    CHECK(doc["residual_rel"].get<double>() <= 1e-3);
    CHECK(doc["prefix_residuals"].size() == 16);
    CHECK(doc["x"]["K"] == 16);
    CHECK(doc["truncation"] == 32);

    const auto rec = run_cli({"reconstruct", "--decomp", d, "--out", "-"});
    CHECK(rec.code == 0);
    const auto fhat = szego::hardy_from_json_text(rec.out);
    const auto target = szego::hardy_from_json_text(slurp(f));
    CHECK(szego::h2_norm(fhat - target) <= 1e-3 * szego::h2_norm(target));
}

TEST_CASE("decompose reports a missed target with exit 1") {
    const auto r = run_cli({"decompose", "--function", "-", "--rings", "3", "--truncation", "40", "--tol", "1e-12"},
                           R"({"coeffs": [[0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [1, 0]]})");
    CHECK(r.code == 1);
    CHECK(r.err.find("exceeds tol") != std::string::npos);
    CHECK(nlohmann::json::parse(r.out)["status"] == "non_convergence");
}

TEST_CASE("report aggregates margins") {
    const auto dir = scratch_dir("report");
    const auto good = (dir / "good.csv").string();
    const auto bad = (dir / "bad.csv").string();
    CHECK(run_cli({"verify", "lemma4", "--degree", "5", "--rings", "9", "--trials", "4", "--out", good}).code == 0);
    {
        std::ofstream(bad) << "trial,k,r,value,bound,margin\n0,3,0.5,2,1,-1\n1,3,0.5,0.5,1,0.5\n";
    }
    const auto ok = run_cli({"report", "--inputs", good, "--out", "-"});
    CHECK(ok.code == 0);
    CHECK(nlohmann::json::parse(ok.out)["files"][0]["rows"] == 4);
    const auto r = run_cli({"report", "--inputs", good, bad, "--out", "-"});
    CHECK(r.code == 1);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["total_violations"] == 1);
    CHECK(doc["files"][1]["min_margin"] == -1.0);
    CHECK(doc["files"][1]["worst_row"]["value"] == 2.0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"grid", "--rings", "2", "--bogus"}).code == 2);
    CHECK(run_cli({"grid"}).code == 2);
    CHECK(run_cli({"verify", "lemma9", "--degree", "1", "--rings", "2"}).code == 2);
    const auto pre = run_cli({"verify", "lemma3", "--degree", "8", "--rings", "8"});
    CHECK(pre.code == 2);
    CHECK(pre.err.find("degree") != std::string::npos);
    const auto missing = run_cli({"ds-divergence", "--rings", "3", "--function", "/nonexistent/f.json"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("/nonexistent/f.json") != std::string::npos);
    CHECK(run_cli({"ds-divergence", "--rings", "3", "--function", "-"}, "{not json").code == 2);
    CHECK(run_cli({"ds-divergence", "--rings", "3", "--function", "-"}, R"({"coeffs": [[0, 0]]})").code == 2);
    CHECK(run_cli({"grid", "--help"}).code == 0);
}

TEST_CASE("output does not depend on the worker count") {
    const std::vector<std::string> args = {"verify", "lemma4", "--degree", "30", "--rings", "40", "--trials", "64", "--seed", "9"};
    setenv("SZEGO_FRAMES_THREADS", "1", 1);
    const auto one = run_cli(args);
    setenv("SZEGO_FRAMES_THREADS", "4", 1);
    const auto four = run_cli(args);
    unsetenv("SZEGO_FRAMES_THREADS");
    CHECK(one.out == four.out);
}

}  // TEST_SUITE
