#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the installed CLI binary; stdout and stderr are merged.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("CEBETTI_CLI_PATH");
    REQUIRE_MESSAGE(bin != nullptr, "CEBETTI_CLI_PATH not set");
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("betti csv output matches the twisted Klein table") {
    auto r = run_cli("betti --manifold klein-bottle --k 1..6 --variant twisted --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "k,degree,dimension\n"
          "1,1,1\n1,2,1\n3,3,1\n3,4,1\n5,5,1\n5,6,1\n");
}

TEST_CASE("identical invocations produce byte-identical output") {
    std::string cmd = "betti --manifold orientable-surface --param g=2 --k 0..4 --format json";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("weight zero row") {
    auto r = run_cli("betti --manifold euclidean --param n=2 --k 0 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "k,degree,dimension\n0,0,1\n");
}

TEST_CASE("dense output fills the rectangle") {
    auto r = run_cli("betti --manifold euclidean --param n=4 --k 2 --format csv --dense");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "k,degree,dimension\n"
          "2,0,1\n2,1,0\n2,2,0\n2,3,1\n");
}

TEST_CASE("raw degrees expose the CE grading for the odd twisted variant") {
    auto space = run_cli("betti --manifold sphere --param n=3 --k 3 --variant twisted --format csv");
    auto raw = run_cli(
        "betti --manifold sphere --param n=3 --k 3 --variant twisted --format csv --raw-degrees");
    CHECK(space.output == "k,degree,dimension\n3,2,1\n3,5,1\n");
    CHECK(raw.output == "k,degree,dimension\n3,5,1\n3,8,1\n");
}

TEST_CASE("exit codes follow the documented mapping") {
    CHECK(run_cli("betti --manifold no-such-thing --k 1").exit_code == 2);
    CHECK(run_cli("betti --manifold euclidean --param n=2 --k 13").exit_code == 3);
    CHECK(run_cli("stability --manifold euclidean --param n=1 --kmax 3").exit_code == 2);
    CHECK(run_cli("stability --manifold moebius-closed --kmax 3").exit_code == 2);
    CHECK(run_cli("stability --manifold klein-bottle --kmax 2").exit_code == 0);
    CHECK(run_cli("check --manifold torus --kmax 2").exit_code == 0);
}

TEST_CASE("model files load, validate, and report errors") {
    {
        std::ofstream f("/tmp/cebetti_valid_model.json");
        f << R"({"name":"flat-band","n":2,"connected":false,
                 "untwisted":[{"degree":0,"label":"u"}],"twisted":[]})";
    }
    auto good = run_cli("betti --manifold /tmp/cebetti_valid_model.json --k 2 --format csv");
    CHECK(good.exit_code == 0);

    {
        std::ofstream f("/tmp/cebetti_invalid_model.json");
        f << R"({"name":"broken","n":2,"connected":true,
                 "untwisted":[{"degree":0,"label":"u"}],"twisted":[]})";
    }
    auto bad = run_cli("betti --manifold /tmp/cebetti_invalid_model.json --k 2");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("point-class") != std::string::npos);

    {
        std::ofstream f("/tmp/cebetti_syntax_error.json");
        f << "{ not json";
    }
    CHECK(run_cli("betti --manifold /tmp/cebetti_syntax_error.json --k 1").exit_code == 2);
}

TEST_CASE("presets listing") {
    auto r = run_cli("presets");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.output)
        if (c == '\n') ++lines;
    CHECK(lines >= 12);

    auto filtered = run_cli("presets --filter surface");
    int filtered_lines = 0;
    for (char c : filtered.output)
        if (c == '\n') ++filtered_lines;
    CHECK(filtered_lines == 2);
}

TEST_CASE("stability csv and check json formats") {
    auto stab = run_cli("stability --manifold punctured-torus --kmax 2 --format csv");
    CHECK(stab.exit_code == 0);
    CHECK(stab.output.rfind("k,degree,dim_from,dim_to,dims_equal,iso,surjective\n", 0) == 0);

    auto chk = run_cli("check --manifold sphere --param n=3 --kmax 2 --format json");
    CHECK(chk.exit_code == 0);
    for (const char* needle : {"\"name\"", "\"pipeline\"", "\"oracle\"", "\"agree\": true"})
        CHECK(chk.output.find(needle) != std::string::npos);

    CHECK(run_cli("betti --manifold torus --k 2 --variant bogus").exit_code == 2);
}

TEST_CASE("json output carries the documented fields") {
    auto r = run_cli("betti --manifold torus --k 1..2 --format json");
    CHECK(r.exit_code == 0);
    for (const char* needle :
         {"\"manifold\": \"torus\"", "\"variant\": \"standard\"", "\"degree_convention\": \"space\"",
          "\"entries\"", "\"dimension\""})
        CHECK(r.output.find(needle) != std::string::npos);
}

TEST_CASE("cache directory round trip") {
    const char* bin = std::getenv("CEBETTI_CLI_PATH");
    REQUIRE(bin != nullptr);
    std::string dir = "/tmp/cebetti_cache_test";
    std::string cmd = std::string("CEBETTI_CACHE_DIR=") + dir + " " + bin +
                      " betti --manifold klein-bottle --k 0..4 --variant twisted --format csv 2>&1";
    auto run_raw = [&]() {
        std::array<char, 4096> buf{};
        std::string output;
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
        pclose(pipe);
        return output;
    };
    std::string cold = run_raw();   // populates the cache
    std::string warm = run_raw();   // reads it back
    CHECK(cold == warm);
    CHECK(cold.find("1,1,1") != std::string::npos);
}
