// End-to-end tests of the fpadic binary: golden output lines, exit-code
// contract, and determinism. The binary path comes from the build.
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#ifndef FPADIC_CLI_PATH
#error "FPADIC_CLI_PATH must point at the built fpadic binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(FPADIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::filesystem::path fixture_dir() {
    auto dir = std::filesystem::temp_directory_path() / "fpadic_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("euler golden output") {
    RunResult r = run_cli("euler --p 5 --upto 1 --prec 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "E_0 = 1 + O(5^2)\nE_1 = 2 + 2*5 + O(5^2)\n");
}

TEST_CASE("measure golden output") {
    RunResult r = run_cli("measure --p 5 --f poly:0,1 --cyl 1,1 --prec 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4 + 2*5 + 2*5^2 + O(5^3)\n");
}

TEST_CASE("sum and integrate agree with the closed form") {
    RunResult s = run_cli("sum --p 5 --f poly:0,1 --m 2 --prec 4");
    CHECK(s.exit_code == 0);
    CHECK(s.out == "2 + 2*5 + O(5^4)\n"); // 12
    RunResult i = run_cli("integrate --p 3 --f mahler:0,0,1 --prec 2");
    CHECK(i.exit_code == 0);
    CHECK(i.out == "1 + 2*3 + O(3^2)\n"); // 1/4 = 7 mod 9
}

TEST_CASE("derivative output carries the error bound") {
    RunResult r = run_cli("derivative --p 3 --f poly:0,0,1 --point 2 --level 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("value = ") == 0);
    CHECK(r.out.find("error_bound = ") != std::string::npos);
}

TEST_CASE("check congruence passes with exit 0") {
    RunResult r = run_cli("check congruence --p 3 --f poly:0,0,1 --cyl 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("check: congruence") == 0);
    CHECK(r.out.find("status: pass") != std::string::npos);
}

TEST_CASE("json mode is structured and deterministic") {
    RunResult a = run_cli("--format json check strong --p 5 --f poly:0,1 --levels 3");
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("{\"check\":\"strong\"") == 0);
    CHECK(a.out.find("\"status\":\"pass\"") != std::string::npos);
    RunResult b = run_cli("--format json check strong --p 5 --f poly:0,1 --levels 3");
    CHECK(a.out == b.out);

    RunResult v = run_cli("--format json measure --p 5 --f poly:0,1 --cyl 1,1 --prec 3");
    CHECK(v.out == "{\"p\":5,\"N\":3,\"zero\":false,\"v\":0,\"u\":\"64\","
                   "\"canonical\":\"5^0 * 64 mod 5^3\"}\n");
}

TEST_CASE("a failing check exits 1") {
    auto table = fixture_dir() / "nu.table";
    {
        std::ofstream out(table);
        out << "3 24 2 tabulated\n";
        out << "0 0 1\n";
        for (int a = 0; a < 3; ++a) out << a << " 1 3\n";
        for (int a = 0; a < 9; ++a) out << a << " 2 9\n";
    }
    RunResult r = run_cli("check additivity --p 3 --table " + table.string() +
                          " --cyl 0,1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("status: fail") != std::string::npos);
}

TEST_CASE("usage and validation errors exit 2") {
    CHECK(run_cli("euler --p 4 --upto 1").exit_code == 2);        // p not prime
    CHECK(run_cli("euler --upto 1").exit_code == 2);              // missing --p
    CHECK(run_cli("integrate --p 5 --f spline:1").exit_code == 2);
    CHECK(run_cli("measure --p 5 --f poly:0,1 --cyl nonsense").exit_code == 2);
    CHECK(run_cli("measure --p 5 --f poly:0,1 --cyl 7,1").exit_code == 2);
    CHECK(run_cli("euler --p 5 --upto 1 --bogus-flag 3").exit_code == 2);
    CHECK(run_cli("frobnicate --p 5").exit_code == 2);
    // precondition violations surface as exit 2, not a silent pass
    CHECK(run_cli("check congruence --p 5 --f poly:0,1/5 --cyl 1,1").exit_code == 2);
}

TEST_CASE("derivative reads measure tables") {
    auto table = fixture_dir() / "mu_x.table";
    RunResult emitted = run_cli("measure --p 5 --prec 6 --f poly:0,1 --cyl 0,1 "
                                "--emit-table " + table.string() + " --depth 3");
    CHECK(emitted.exit_code == 0);
    RunResult viaTable =
        run_cli("derivative --p 5 --prec 6 --table " + table.string() +
                " --point 2 --level 2");
    RunResult direct =
        run_cli("derivative --p 5 --prec 6 --f poly:0,1 --point 2 --level 2");
    CHECK(viaTable.exit_code == 0);
    CHECK(viaTable.out == direct.out);
}
