#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + CHAINS_CLI + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        r.out.append(buf, got);
    }
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("poly") {
    const auto v = run("poly 'vex(4)' --coeffs");
    CHECK(v.status == 0);
    CHECK(has(v.out, "U: 5\n"));
    CHECK(has(v.out, "L: 1\n"));
    CHECK(has(v.out, "tr: 5\n"));
    CHECK(has(v.out, "T_upper: [1, 3, 5, 5]"));

    const auto k = run("poly 'koch(3)' --format csv");
    CHECK(k.status == 0);
    CHECK(has(k.out, "8,exact,106,4,424,1.791278,1.189207,2.130201"));

    const auto e = run("poly E --format json");
    const auto j = nlohmann::json::parse(e.out);
    CHECK(j["U"] == "1");
    CHECK(j["L"] == "1");
    CHECK(j["tr"] == "1");
}

TEST_CASE("koch table") {
    const auto r = run("koch 5 --format csv");
    CHECK(r.status == 0);
    CHECK(has(r.out, "s,n,rootU,rootL,rootT\n0,1,1.0,1.0,1.0\n1,2,1.0,1.0,1.0\n2,4,1.189207,1.0,1.189207\n"));
    CHECK(has(r.out, "5,32,2.558954,2.035453,5.208633\n"));
}

TEST_CASE("polytwin") {
    const auto r = run("polytwin --koch 2 --format csv");
    CHECK(r.status == 0);
    CHECK(has(r.out, "s,m,lambda,tau,lambda_tau,lambda_bar,lambda_lambda_bar\n"));
    CHECK(has(r.out, "0,1,4.0,2.0,8.0,4.0,16.0\n"));
    CHECK(has(r.out, "2,4,3.534118,2.449489,8.656787,3.464101,12.242546\n"));
    const auto f = run("polytwin 'koch(2)' --format csv");
    CHECK(has(f.out, ",4,3.534118,2.449489,8.656787,3.464101,12.242546\n"));
    CHECK(run("polytwin").status == 2);
}

TEST_CASE("enumerate") {
    const auto three = run("enumerate 3 --count");
    CHECK(has(three.out, "total: 6\nupward: 3\n"));
    CHECK(run("enumerate 1").out == "E\ntotal: 1\nupward: 1\ndownward: 1\n");
    CHECK(has(run("enumerate 7 --count").out, "total: 1806\n"));
    CHECK(run("enumerate 13").status == 3);
}

TEST_CASE("realize") {
    const std::string path = "test_cli_koch3.csv";
    const auto r = run("realize 'koch(3)' --out " + path);
    CHECK(r.status == 0);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        ++lines;
    }
    CHECK(lines == 10);
    std::remove(path.c_str());
    CHECK(run("realize 'vex(2)'").out == "x_num,x_den,y_num,y_den\n-1,1,0,1\n0,1,-1,4\n1,1,0,1\n");
    CHECK(run("realize 'vex(33)'").status == 3);
}

TEST_CASE("exit codes") {
    CHECK(run("poly 'E v'").status == 2);
    CHECK(run("poly 'nope(3)'").status == 2);
    CHECK(run("poly 'koch(16)' --mode exact").status == 3);
    CHECK(run("--bogus").status == 2);
    CHECK(run("verify quick").status == 0);
    const auto bad = run("verify quick --inject-fault");
    CHECK(bad.status == 4);
    CHECK(has(bad.out, "FAIL oracle equality"));
}

TEST_CASE("output does not depend on threads") {
    const auto one = run("koch 11 --mode float --threads 1");
    const auto four = run("koch 11 --mode float --threads 4");
    const auto env = run("koch 11 --mode float", "CHAINS_THREADS=3");
    CHECK(one.status == 0);
    CHECK(one.out == four.out);
    CHECK(one.out == env.out);
    CHECK(run("koch 11 --mode float --threads 1").out == one.out);
}

TEST_CASE("json and csv tables agree") {
    const auto csv = run("koch 9 --format csv").out;
    const auto json = nlohmann::json::parse(run("koch 9 --format json").out);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (const char* key : {"s", "n", "rootU", "rootL", "rootT"}) {
            std::getline(cells, cell, ',');
            CHECK(json[row][key].get<double>() == std::stod(cell));
        }
        ++row;
    }
    CHECK(row == 10);
}
