// End-to-end checks of the atlas binary: spawn it, capture stdout, compare.
// The binary path arrives via ATLAS_BIN, the repository data directory via
// ATLAS_DATA_DIR (both set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "atlas/json_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string bin_path() {
    const char* bin = std::getenv("ATLAS_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

std::string data_dir() {
    const char* dir = std::getenv("ATLAS_DATA_DIR");
    REQUIRE(dir != nullptr);
    return dir;
}

RunResult run(const std::string& args) {
    RunResult result;
    const std::string cmd = bin_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("atoms table lists the complexity-2 atoms with their symmetry labels") {
    const RunResult r = run("atoms --complexity 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("atoms of complexity 2: 4") != std::string::npos);
    for (const char* needle : {"C1", "C2", "D1", "D2", "Z4", "Z2+Z2"})
        CHECK(r.out.find(needle) != std::string::npos);
}

TEST_CASE("identical invocations produce byte-identical output") {
    for (const char* args : {"atoms --complexity 3 --format json",
                             "classify --complexity 2 --format json",
                             "classify --complexity 3"}) {
        const RunResult a = run(args);
        const RunResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("emitted atom JSON is accepted back") {
    const RunResult r = run("atoms --complexity 2 --format json");
    REQUIRE(r.exit_code == 0);
    const auto doc = atlas::parse_json_text(r.out);
    REQUIRE(doc.is_array());
    CHECK(doc.size() == 4);
    for (const auto& item : doc) {
        const atlas::FGraph f = atlas::fgraph_from_json(item);
        CHECK(atlas::identify(f) == item.at("name").get<std::string>());
    }
}

TEST_CASE("classify json reports counts and empty warnings") {
    const RunResult r = run("classify --complexity 3 --format json --strict");
    CHECK(r.exit_code == 0);
    const auto doc = atlas::parse_json_text(r.out);
    CHECK(doc.at("count") == 21);
    CHECK(doc.at("warnings").empty());
}

TEST_CASE("reduce reports the simple minimal model") {
    const RunResult r = run("reduce --model " + data_dir() + "/models/d1xf1_halfperiod.json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("simple minimal model: B x F1") != std::string::npos);
}

TEST_CASE("chains subcommand reproduces the two fixtures") {
    const RunResult a = run("chains --model " + data_dir() + "/models/c1xf1.json");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("4 chains") != std::string::npos);
    const RunResult b = run("chains --model " + data_dir() + "/models/c1xf2_z2.json");
    CHECK(b.exit_code == 0);
    CHECK(b.out.find("2 chains") != std::string::npos);
    CHECK(b.out.find("1-dim orbits: 2, 3-dim orbits: 2") != std::string::npos);
}

TEST_CASE("chains --dot emits a graph") {
    const RunResult r = run("chains --model " + data_dir() + "/models/c1xf2_z2.json --dot");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph chains {") != std::string::npos);
    CHECK(r.out.find("--") != std::string::npos);
}

TEST_CASE("invariants separates the two C2 quotients") {
    const RunResult rx = run("invariants --model " + data_dir() + "/models/c2xf2_rx.json");
    const RunResult rz = run("invariants --model " + data_dir() + "/models/c2xf2_rz.json");
    CHECK(rx.exit_code == 0);
    CHECK(rz.exit_code == 0);
    CHECK(rx.out.find("half-turn fixed saddles s: 0") != std::string::npos);
    CHECK(rz.out.find("half-turn fixed saddles s: 2") != std::string::npos);
}

TEST_CASE("sym resolves atom names") {
    const RunResult r = run("sym --atom C2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("Z2+Z2") != std::string::npos);
    const RunResult series = run("sym --atom X4");
    CHECK(series.exit_code == 0);
    CHECK(series.out.find("order 8") != std::string::npos);
}

TEST_CASE("invalid input exits with code 1") {
    CHECK(run("frobnicate").exit_code == 1);
    CHECK(run("atoms --complexity 2 --no-such-flag").exit_code == 1);
    CHECK(run("reduce --model /nonexistent.json").exit_code == 1);
    CHECK(run("atoms --complexity 0").exit_code == 1);
    CHECK(run("classify --complexity 9").exit_code == 1);
    CHECK(run("sym --atom NOPE").exit_code == 1);
    const RunResult r = run("sym");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("--atom or --file") != std::string::npos);
}

TEST_CASE("name table override via environment") {
    const RunResult r = run("--name-table " + data_dir() + "/atom_names.json atoms --complexity 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("B") != std::string::npos);
    const RunResult bad = run("--name-table /nonexistent.json atoms --complexity 1");
    CHECK(bad.exit_code == 1);
}
