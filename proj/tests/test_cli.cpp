// Subprocess tests for the qosc CLI. The binary path arrives in QOSC_CLI.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

std::string cli_path() {
    const char* p = std::getenv("QOSC_CLI");
    REQUIRE_MESSAGE(p != nullptr, "QOSC_CLI must point at the qosc binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
    const char* tmp = std::getenv("TMPDIR");
    return std::string(tmp ? tmp : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("spectra emits the expected grid for twoj=2, q=0.5") {
    RunResult r = run("spectra --twoj 2 --q 0.5");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::array<double, 3>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::array<double, 3> row{};
        char c;
        std::istringstream ls(line);
        ls >> row[0] >> c >> row[1] >> c >> row[2];
        rows.push_back(row);
    }
    REQUIRE(rows.size() == 3);
    CHECK(rows[0][0] == -2.0);
    CHECK(rows[0][1] == doctest::Approx(-1.06066).epsilon(1e-5));
    CHECK(rows[1][1] == doctest::Approx(0.0).epsilon(1e-12).scale(1.0));
    CHECK(rows[2][1] == doctest::Approx(1.06066).epsilon(1e-5));
    CHECK(rows[0][2] == 0.5);
    CHECK(rows[2][2] == 2.5);
}

TEST_CASE("kernel --twoj 1 --q 1 --a 0 is the 2x2 identity") {
    RunResult r = run("kernel --twoj 1 --q 1 --a 0");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    }
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "1,0,0,0");
    CHECK(rows[1] == "0,0,1,0");
}

TEST_CASE("output is byte-identical across runs") {
    RunResult a = run("wavefuncs --twoj 5 --q 0.6");
    RunResult b = run("wavefuncs --twoj 5 --q 0.6");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    RunResult c = run("kernel --twoj 4 --q 0.8 --a 0.7 --format json");
    RunResult d = run("kernel --twoj 4 --q 0.8 --a 0.7 --format json");
    CHECK(c.out == d.out);
}

TEST_CASE("transform round-trip: four a=1 passes reproduce the input") {
    const std::string in_path = temp_path("qosc_sig_in.txt");
    {
        std::ofstream f(in_path);
        f << "0.25,-1.5\n-0.75\n0.125,0.0625\n1,1\n-2,0.5\n0.3,-0.4\n";
    }
    std::vector<double> orig;
    {
        std::ifstream f(in_path);
        double re, im;
        char c;
        std::string line;
        while (std::getline(f, line)) {
            std::istringstream ls(line);
            ls >> re;
            im = 0.0;
            if (ls >> c) ls >> im;
            orig.push_back(re);
            orig.push_back(im);
        }
    }
    std::string cur = in_path;
    for (int pass = 0; pass < 4; ++pass) {
        const std::string next = temp_path("qosc_sig_" + std::to_string(pass) + ".txt");
        RunResult r = run("transform --twoj 5 --q 0.7 --a 1 --input " + cur + " --output " + next);
        REQUIRE(r.exit_code == 0);
        cur = next;
    }
    std::ifstream f(cur);
    REQUIRE(f.good());
    std::string line;
    size_t idx = 0;
    while (std::getline(f, line)) {
        double re, im;
        char c;
        std::istringstream ls(line);
        ls >> re >> c >> im;
        REQUIRE(idx < 6);
        CHECK(std::abs(re - orig[2 * idx]) <= 1e-9);
        CHECK(std::abs(im - orig[2 * idx + 1]) <= 1e-9);
        ++idx;
    }
    CHECK(idx == 6);
}

TEST_CASE("transform rejects a signal of the wrong length") {
    const std::string in_path = temp_path("qosc_sig_short.txt");
    {
        std::ofstream f(in_path);
        f << "1\n2\n";
    }
    RunResult r = run("transform --twoj 5 --q 0.7 --a 1 --input " + in_path);
    CHECK(r.exit_code == 2);
}

TEST_CASE("verify exits 0 for twoj=8, q=0.5 and reports residuals") {
    RunResult r = run("verify --twoj 8 --q 0.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify --format json carries structured reports") {
    RunResult r = run("verify --twoj 3 --q 0.9 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("all_pass").get<bool>());
    CHECK(!j.at("reports").empty());
}

TEST_CASE("q out of range exits 2 and mentions the q <-> 1/q symmetry") {
    const std::string cmd =
        cli_path() + " spectra --twoj 2 --q 1.5 2>" + temp_path("qosc_err.txt");
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 2);
    std::ifstream f(temp_path("qosc_err.txt"));
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("symmetry") != std::string::npos);
}

TEST_CASE("contract emits one row per twoj") {
    RunResult r = run("contract --q 0.5 --twoj-list 8 16 --nmax 2 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("rows").size() == 2);
    CHECK(j["rows"][0]["twoj"] == 8);
    CHECK(j["rows"][1]["twoj"] == 16);
    CHECK(j["rows"][1]["dev_asymptote"].get<double>() <
          j["rows"][0]["dev_asymptote"].get<double>());
}
