// End-to-end checks of the installed CLI: spawns the real binary and
// inspects stdout, exit codes, and the --json schema against golden files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(FINTOPO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name) {
    return std::string(FINTOPO_TEST_DATA_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string write_temp(const std::string& content, int index) {
    const std::string path =
        std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
        "/fintopo_cli_test_" + std::to_string(index) + ".space";
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate: exit codes and canonical echo") {
    const auto ok = run("validate " + data("tau3.space"));
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "valid: 3 points, 5 open sets"));
    CHECK(contains(ok.out, "opens: {} {x} {y} {x y} {x y z}"));

    CHECK(run("validate " + data("bad_missing_full.space")).code == 1);
    CHECK(run("validate /no/such/file.space").code == 1);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("no_such_command").code == 2);
    CHECK(run("validate").code == 2);              // missing file argument
    CHECK(run("enumerate --n notanumber").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("info report on tau3") {
    const auto r = run("info " + data("tau3.space"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "T0: yes"));
    CHECK(contains(r.out, "T1/2: yes"));
    CHECK(contains(r.out, "dimension: 1"));
    CHECK(contains(r.out, "height: 2"));
    CHECK(contains(r.out, "open points: {x y}"));
}

TEST_CASE("info --json matches the golden reports for the whole catalog") {
    for (int i = 1; i <= 9; ++i) {
        const std::string name = "tau" + std::to_string(i);
        const auto r = run("info --json " + data(name + ".space"));
        REQUIRE(r.code == 0);
        const json got = json::parse(r.out);
        const json want = json::parse(read_file(
            std::string(FINTOPO_GOLDEN_DIR) + "/" + name + ".json"));
        CHECK(got == want);
    }
}

TEST_CASE("set operators via the CLI") {
    const auto r = run("set " + data("tau3.space") + " --set \"{y z}\" --show intcl,clint");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "interior_of_closure: {y}"));
    CHECK(contains(r.out, "closure_of_interior: {y z}"));

    const auto all = run("set " + data("tau3.space") + " --set \"{y z}\" --json");
    REQUIRE(all.code == 0);
    const json j = json::parse(all.out);
    CHECK(j["results"]["closure"] == json::array({"y", "z"}));
    CHECK(j["results"]["boundary"] == json::array({"z"}));
    CHECK(j["results"]["classification"]["open"] == false);

    CHECK(run("set " + data("tau3.space") + " --set \"{w}\"").code == 1);
}

TEST_CASE("map subcommand") {
    const auto r = run("map " + data("tau3.space") + " " + data("tau5.space") +
                       " --map \"x:x y:z z:y\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "continuous: no"));
    CHECK(contains(r.out, "semicontinuous=yes"));
    CHECK(contains(r.out, "precontinuous=no"));

    const auto j = run("map " + data("tau3.space") + " " + data("tau3.space") +
                       " --map \"x:x y:y z:z\" --check theorem --json");
    REQUIRE(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed["open_map_theorem"]["is_open"] == true);
}

TEST_CASE("multi subcommand reproduces the two-point example") {
    const auto r = run("multi " + data("sierpinski.space") + " " +
                       data("sierpinski.space") +
                       " --map \"a:{a b} b:{a}\" --check usc,lsc");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "U.S.C: no   witness x=b"));
    CHECK(contains(r.out, "L.S.C: yes"));

    const auto j = run("multi " + data("sierpinski.space") + " " +
                       data("sierpinski.space") + " --map \"a:{a b} b:{a}\" --json");
    REQUIRE(j.code == 0);
    const json parsed = json::parse(j.out);
    CHECK(parsed["usc"]["holds"] == false);
    CHECK(parsed["usc"]["witness"]["point"] == "b");
    CHECK(parsed["lsc"]["holds"] == true);
}

TEST_CASE("quotient subcommand") {
    const auto r = run("quotient --cuts \"0,1/2,1\" --pwl \"0:3/4 1/4:1/4 1:1/2\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "g(a) = {d}"));
    CHECK(contains(r.out, "g(b) = {b c d}"));
    CHECK(contains(r.out, "U.S.C: no   witness x=a"));
    CHECK(contains(r.out, "L.S.C: yes"));

    const auto ev = run("quotient --cuts \"0,1/2,1\" --pwl \"0:3/4 1/4:1/4 1:1/2\" --eval 1/2");
    CHECK(ev.code == 0);
    CHECK(contains(ev.out, "f(1/2) = 1/3"));

    CHECK(run("quotient --cuts \"0,2,1\" --pwl \"0:0 1:1\"").code == 1);
}

TEST_CASE("hasse emits DOT") {
    const auto r = run("hasse " + data("tau3.space"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "digraph hasse {"));
    CHECK(contains(r.out, "\"z\" -> \"x\";"));
    CHECK(contains(r.out, "\"z\" -> \"y\";"));
}

TEST_CASE("enumerate output re-parses to identical spaces") {
    const auto r = run("enumerate --n 2");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "# total: 4"));

    // split into blocks at blank lines, drop comment lines
    std::vector<std::string> blocks;
    std::string block;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) {
            if (!block.empty()) blocks.push_back(block);
            block.clear();
        } else if (line[0] != '#') {
            block += line + "\n";
        }
    }
    if (!block.empty()) blocks.push_back(block);
    REQUIRE(blocks.size() == 4);

    int index = 0;
    for (const std::string& b : blocks) {
        const std::string path = write_temp(b, index++);
        const auto v = run("validate " + path);
        CHECK(v.code == 0);
        // validate echoes the canonical serialization; emitted form is canonical
        CHECK(contains(v.out, b.substr(0, b.find('\n'))));
        CHECK(contains(v.out, b.substr(b.find('\n') + 1)));
        std::remove(path.c_str());
    }
}

TEST_CASE("enumerate classes and filters") {
    const auto t0 = run("enumerate --n 3 --classes --t0");
    CHECK(t0.code == 0);
    CHECK(contains(t0.out, "# classes: 5"));

    const auto j = run("enumerate --n 3 --json");
    REQUIRE(j.code == 0);
    CHECK(json::parse(j.out)["count"] == 29);

    const auto js = run("enumerate --n 3 --classes --filter dim=1,submaximal --json");
    REQUIRE(js.code == 0);
    const json parsed = json::parse(js.out);
    for (const auto& cls : parsed["classes"]) {
        CHECK(cls["report"]["dim"] == 1);
        CHECK(cls["report"]["submaximal"] == true);
    }
    CHECK(run("enumerate --n 3 --filter bogus").code == 2);
    CHECK(run("enumerate --n 6").code == 1);
}
