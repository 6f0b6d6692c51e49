#include "doctest.h"

#include "hecke/specfun.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace hecke;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run lab(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + HECKE_LAB_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

std::string column(const std::vector<std::vector<std::string>>& rows, size_t r, const std::string& key) {
    for (size_t i = 0; i < rows[0].size(); ++i)
        if (rows[0][i] == key) return rows[r][i];
    FAIL("no column " << key);
    return {};
}

}  // namespace

TEST_CASE("central: series and exact agree, A(9) = 49") {
    const auto r = lab("central --n 9 --method both --digits 40 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    const auto& o = j[0];
    CHECK(o["A"] == "49");
    CHECK(o["A_factored"] == "7^2");
    CHECK(o["agree"] == true);
    CHECK(o.contains("series_tail_bound"));
    CHECK(o.contains("exact_err"));

    // oracle: 2 (2 pi/sqrt 7)^9 Omega^17 49 / 8!
    PrecisionContext ctx{40, 8};
    const auto& k = specfun::constants(ctx);
    ScopedPrecision sp(ctx);
    const Real L = 2 * pow(k.two_pi_over_sqrt7, 9L) * pow(k.omega, 17L) * Real(49) / Real(40320);
    CHECK(abs(Real(o["series"].get<std::string>()) - L) < Real(1e-37));
    CHECK(abs(Real(o["exact"].get<std::string>()) - L) < Real(1e-37));
    CHECK(Real(o["delta"].get<std::string>()) <= Real(1e-10));
}

TEST_CASE("moment --r 1 --N 200 gives one CSV row") {
    const auto r = lab("moment --r 1 --N 200 --digits 20");
    REQUIRE(r.status == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"r", "N", "empirical", "empirical_err", "predicted", "residual", "bound"});
    CHECK(column(rows, 1, "N") == "200");
    const double pred = std::stod(column(rows, 1, "predicted"));
    CHECK(pred == doctest::Approx(2 * M_PI / std::sqrt(7.0)).epsilon(1e-15));
    const double emp = std::stod(column(rows, 1, "empirical")), res = std::stod(column(rows, 1, "residual"));
    CHECK(res == doctest::Approx(emp - pred).epsilon(1e-12));
    CHECK(std::fabs(res) <= std::stod(column(rows, 1, "bound")));
    // scientific notation with 20 significant figures
    CHECK(column(rows, 1, "empirical").size() == std::string("2.3639581331825640809e+00").size());
}

TEST_CASE("table reproduces the truncated four-place column") {
    const auto r = lab("table --digits 20");
    REQUIRE(r.status == 0);
    const auto rows = csv(r.out);
    REQUIRE(rows.size() == 18);
    CHECK(column(rows, 1, "A") == "1/4");
    CHECK(column(rows, 6, "A") == "99225");
    CHECK(column(rows, 15, "n") == "29");
    CHECK(column(rows, 15, "A_factored") == "(3^4*5^2*7^2*113*127033)^2");
    CHECK(column(rows, 15, "L_4dp") == "8.4268");
    CHECK(column(rows, 17, "L_4dp") == "0.0591");
}

TEST_CASE("second moment comparison") {
    const auto r = lab("moment --r 2 --N 469 --digits 20 --format json");
    REQUIRE(r.status == 0);
    const auto o = nlohmann::json::parse(r.out)[0];
    const double e = std::stod(o["empirical"].get<std::string>());
    CHECK(e >= 28.32);
    CHECK(e <= 28.42);
    CHECK(std::stod(o["conjecture_reduced"].get<std::string>()) == doctest::Approx(28.352).epsilon(1e-4));
    CHECK(std::fabs(std::stod(o["forms_difference"].get<std::string>())) <= 0.05);
}

TEST_CASE("density --N 20 --testfn fejer") {
    const auto r = lab("density --N 20 --testfn fejer --digits 20 --format json");
    REQUIRE(r.status == 0);
    const auto o = nlohmann::json::parse(r.out)[0];
    CHECK(o["rmt"].get<double>() == 1.5);
    CHECK(o["nonvanishing_lower_bound"].get<double>() == 0.25);
    CHECK(std::fabs(o["empirical"].get<double>() - o["explicit_formula"].get<double>()) < 2e-3);
    CHECK(o["warnings"] == 0);
}

TEST_CASE("exit codes") {
    CHECK(lab("").status == 2);
    CHECK(lab("nosuch").status == 2);
    CHECK(lab("moment --r 3 --N 10").status == 2);
    CHECK(lab("density --N 20 --testfn box").status == 2);
    CHECK(lab("central --n 3 --digits 5").status == 3);
    CHECK(lab("constants --digits 100000").status == 3);
    CHECK(lab("moment --r 1 --N 1000000").status == 4);
    CHECK(lab("density --N 5000 --T 10").status == 4);
    CHECK(lab("selftest --only 1 3").status == 0);
    CHECK(lab("selftest --only 5").status == 5);
    CHECK(lab("selftest --only 99").status == 2);
    CHECK(lab("--help").status == 0);
}

TEST_CASE("HECKE_DIGITS sets the default precision") {
    const auto a = csv(lab("constants", "HECKE_DIGITS=25").out);
    REQUIRE(a.size() > 1);
    CHECK(column(a, 1, "value") == "5.772156649015328606065121e-01");
    const auto b = csv(lab("constants --digits 18", "HECKE_DIGITS=25").out);
    CHECK(column(b, 1, "value") == "5.77215664901532861e-01");
    CHECK(lab("constants", "HECKE_DIGITS=abc").status == 2);
    CHECK(lab("constants", "HECKE_DIGITS=8").status == 3);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
    const auto a = lab("zeros --N 4 --T 5 --digits 20 --threads 1");
    const auto b = lab("zeros --N 4 --T 5 --digits 20 --threads 4");
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == lab("zeros --N 4 --T 5 --digits 20 --threads 1").out);
    const auto c = lab("moment --r 2 --N 60 --digits 30 --threads 1");
    CHECK(c.out == lab("moment --r 2 --N 60 --digits 30 --threads 3").out);
    const auto d = lab("selftest --only 3 --format json");
    CHECK(d.out == lab("selftest --only 3 --format json").out);
}

TEST_CASE("--out writes the report to a file") {
    const std::string path = "hecke_lab_out_test.csv";
    std::remove(path.c_str());
    const auto r = lab("coeffs --k 5 --M 4 --digits 16 --out " + path);
    REQUIRE(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    const auto rows = csv(ss.str());
    REQUIRE(rows.size() == 5);
    // eta^5 = 6 - eta, and the two primes above 2 give 2 Re(6 - eta) = 11
    CHECK(column(rows, 2, "coeff") == "11");
    CHECK(column(rows, 4, "coeff") == "89");
    std::remove(path.c_str());
}
