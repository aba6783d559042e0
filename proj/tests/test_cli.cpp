#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support/tables.hpp"

namespace {

struct Run {
    int rc = -1;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(PARTMETH_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    std::string l;
    while (std::getline(in, l))
        v.push_back(l);
    return v;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("partgen listing")
{
    Run r = run("partitions --k 5");
    CHECK(r.rc == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"1: 1(5)", "2: 1(1) 1(4)", "3: 2(1) 1(3)", "4: 3(1) 1(2)", "5: 5(1)",
                                                   "6: 1(1) 2(2)", "7: 1(2) 1(3)"});
    CHECK(lines(run("partitions --k 20 --order ascending").out).size() == 627);
    auto json = lines(run("partitions --k 4 --format jsonl --max-parts 2").out);
    REQUIRE(json.size() == 3);
    CHECK(json[0] == R"({"total":4,"parts":{"4":1},"num_parts":1})");
}

TEST_CASE("conjugate listing keeps trailing spaces")
{
    auto l = lines(run("partitions --k 4 --conjugate").out);
    REQUIRE(l.size() == 5);
    CHECK(l[1] == "Partition 2 is: 1(1) 1(3)  and its conjugate is: 1(2) 2(1) ");
}

TEST_CASE("counts")
{
    CHECK(run("count --k 100").out == "190569292\n");
    CHECK(run("count --k 100 --grouped").out == "190 569 292\n");
    CHECK(run("count --k 100 --distinct").out == "444793\n");
    CHECK(run("count --k 100 --pentagonal").out == "42205\n");
    CHECK(run("count --k 100 --distinct --route discrete-recurrence").out == "444793\n");
    CHECK(run("count --k 100 --route discrete-recurrence").rc == 2);
    CHECK(run("count --k 30 --route gamma").out == "5604\n");
    CHECK(run("count --k 30 --route pentagonal").out == "5604\n");
    CHECK(run("count --k 30 --route enumerate --threads 2").out == "5604\n");
    CHECK(run("count --k 20 --format jsonl").out.find(R"("count":"627")") != std::string::npos);
}

TEST_CASE("coefficient tables")
{
    auto c = lines(run("coeffs --family cosecant --kmax 3").out);
    CHECK(c == std::vector<std::string>{"0: 1", "1: 1/6", "2: 7/360", "3: 31/15120"});
    CHECK(run("coeffs --family cosecant --kmax 3 --route recurrence").out == run("coeffs --family cosecant --kmax 3").out);
    CHECK(lines(run("coeffs --family exp-product --kmax 4").out).back() == "4: 3/8");
    CHECK(lines(run("coeffs --family bessel --kmax 1").out).back() == "1: (1)/(1 + nu)");
}

TEST_CASE("polynomial tables")
{
    auto t = lines(run("polys --table omega --kmax 6").out);
    CHECK(std::find(t.begin(), t.end(), "q(6,w) = w + 2*w^2 + w^3") != t.end());
    auto b = lines(run("polys --table rho --kmax 8 --rho 3").out);
    CHECK(b.back() == "q(8,w,3) = 3*w + 30*w^2 + 81*w^3 + 66*w^4 + 12*w^5");
    CHECK(run("polys --table qp --kmax 1").out.find("QP_1(w,b,a) = w*a - w*b") != std::string::npos);
}

TEST_CASE("Bessel zero estimate")
{
    Run r = run("bessel --nu 0 --k 17");
    CHECK(r.rc == 0);
    CHECK(r.out.find("2.40482555769") != std::string::npos);
    CHECK(run("bessel --nu -1 --k 3").rc == 1);
}

TEST_CASE("symbolic emission")
{
    CHECK(tables::strip_ws(run("emit-symbolic --what DS --k 4").out) == tables::strip_ws(tables::ds4));
    CHECK(tables::strip_ws(run("emit-symbolic --what pfn --k 6").out) == tables::strip_ws(tables::pfn6));
    auto dir = std::filesystem::temp_directory_path() / "partmeth_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto base = (dir / "ds").string();
    CHECK(run("emit-symbolic --what ds --k 6 --sink file --out " + base + " --split 5").rc == 0);
    std::string joined;
    int files = 0;
    for (int i = 0; std::filesystem::exists(base + "." + (i < 10 ? "00" : "0") + std::to_string(i)); ++i, ++files)
        joined += slurp(base + "." + (i < 10 ? "00" : "0") + std::to_string(i));
    CHECK(files == 3);  // 11 terms
    CHECK(joined == run("emit-symbolic --what ds --k 6").out);
    CHECK(run("emit-symbolic --what ds --k 12 --sink null").out.empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("benchmark rows")
{
    Run r = run("bench --k 10,12 --orders brcp,revlex,ascending --format jsonl");
    CHECK(r.rc == 0);
    auto l = lines(r.out);
    REQUIRE(l.size() == 6);
    for (auto& row : l)
        CHECK(row.find(R"("matches_recurrence":true)") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2")
{
    CHECK(run("").rc == 2);
    CHECK(run("count").rc == 2);
    CHECK(run("count --k -3").rc == 2);
    CHECK(run("count --k 5 --bogus").rc == 2);
    CHECK(run("emit-symbolic --what nonsense --k 3").rc == 2);
    CHECK(run("emit-symbolic --what ds --k 0").rc == 2);
    CHECK(run("partitions --k 5 --min-element 4 --max-element 2").rc == 2);
}
