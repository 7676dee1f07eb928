// End-to-end checks of the seg binary: exit codes, output stability, and the
// documented subcommand behaviors, driven through a shell.

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "segdet/io.hpp"

#ifndef SEG_CLI_PATH
#define SEG_CLI_PATH "seg"
#endif
#ifndef SEGDET_FIXTURE_DIR
#define SEGDET_FIXTURE_DIR "fixtures"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(SEG_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string fixture(const std::string& name) {
    return std::string(SEGDET_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("standard-count") {
    RunResult r = run("standard-count --k 3 --degree 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "42\n");
}

TEST_CASE("eval on the bundled fixtures") {
    RunResult unit = run("eval --a " + fixture("example_a.json") + " --b " +
                         fixture("example_b.json"));
    CHECK(unit.exit_code == 0);
    CHECK(unit.out == "-1\n");

    RunResult zero = run("eval --a " + fixture("dup_a.json") + " --b " + fixture("dup_b.json"));
    CHECK(zero.exit_code == 0);
    CHECK(zero.out == "0\n");
}

TEST_CASE("expand double (2,2) is byte-stable and reports the reference sign") {
    RunResult r1 = run("expand --k 2 --l 2 --basis double");
    RunResult r2 = run("expand --k 2 --l 2 --basis double");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
    CHECK(r1.out.find("sign vs bundled reference expansion: -1") != std::string::npos);
    CHECK(r1.out.find("-[1 2][3 4]<1 3><2 4> + [1 3][2 4]<1 2><3 4>") != std::string::npos);

    RunResult structured = run("--format structured expand --k 2 --l 2 --basis double");
    CHECK(structured.exit_code == 0);
    CHECK(structured.out == segdet::io::read_file(fixture("golden/seg22_double.json")));
}

TEST_CASE("straighten command") {
    const std::string input = "/tmp/seg_cli_straighten_input.json";
    segdet::io::write_file(input, R"({
  "terms": [
    {
      "coeff": "1",
      "dual": [
        [1, 4],
        [2, 3]
      ]
    }
  ]
})");
    RunResult r = run("straighten --k 2 --n 4 --input " + input);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "-[1 2][3 4] + [1 3][2 4]\n");
}

TEST_CASE("chowlam-degree and klyachko") {
    CHECK(run("chowlam-degree --k 2 --n 4 --r 4").out == "2\n");
    CHECK(run("klyachko --k 2 --n 6 --lambda 2,1").out == "2\n");
}

TEST_CASE("vision synth and nine-point round trip through files") {
    const std::string scene = "/tmp/seg_cli_scene.json";
    RunResult synth = run("--format structured vision synth --k 3 --count 9 --seed 5 --out " + scene);
    CHECK(synth.exit_code == 0);

    // extract the pairs block into its own document for nine-point
    std::string text = segdet::io::read_file(scene);
    auto pos = text.find("\"pairs\"");
    REQUIRE(pos != std::string::npos);
    std::string pairs_doc = text.substr(pos + 9, text.rfind('}') - pos - 9);
    segdet::io::write_file("/tmp/seg_cli_pairs.json", pairs_doc);
    RunResult nine = run("vision nine-point --pairs /tmp/seg_cli_pairs.json");
    CHECK(nine.exit_code == 0);
    CHECK(nine.out == "0\n");
}

TEST_CASE("coeff rank") {
    CHECK(run("coeff rank --k 2 --l 2").out == "2\n");
    CHECK(run("coeff rank --k 2 --l 3").out == "5\n");
}

TEST_CASE("coeff diagnose reports without asserting") {
    RunResult r = run("coeff diagnose");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("published_tuple_verbatim") != std::string::npos);
    CHECK(r.out.find("coefficient_map") != std::string::npos);
    CHECK(r.out.find("torus_orbit_equivalent") != std::string::npos);
}

TEST_CASE("exit code 1 with a machine-readable record on domain errors") {
    RunResult r = run("eval --a " + fixture("example_a.json") + " --b " + fixture("assoc_p.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"error\"") != std::string::npos);
    CHECK(r.out.find("\"code\"") != std::string::npos);
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run("expand --k 2").exit_code == 2);       // missing required --l
    CHECK(run("no-such-command").exit_code == 2);
    CHECK(run("expand --k 2 --l 2 --basis bogus").exit_code == 2);
}
