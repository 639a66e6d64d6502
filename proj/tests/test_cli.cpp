#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coxaff/commands.hpp"
#include "helpers.hpp"

using namespace coxaff;
using namespace coxaff::testing;
namespace fs = std::filesystem;

namespace {

fs::path workdir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("coxaff-test-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string binary() {
    const char* env = std::getenv("COXAFF_BIN");
    return env ? env : "";
}

int run(const std::string& args) {
    std::string cmd = binary() + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("parse_krange") {
    auto r = cmd::parse_krange("-2..3");
    CHECK(r.lo == -2);
    CHECK(r.hi == 3);
    auto s = cmd::parse_krange("4");
    CHECK(s.lo == 4);
    CHECK(s.hi == 4);
    CHECK_THROWS_AS(cmd::parse_krange("3..-1"), std::invalid_argument);
}

TEST_CASE("solve command document") {
    auto res = cmd::solve_cmd("3-1t", 12);
    CHECK(res.json["orbit_count"] == 2);
    CHECK(res.json["orbits"][0]["base"]["a"] == "-3");
    CHECK(res.json["orbits"][1]["base"]["a"] == "-1");
    CHECK(res.json["orbits"][0]["swap_partner"] == 1);
}

TEST_CASE("enumerate emits affine matrices that re-verify") {
    auto res = cmd::enumerate_cmd(GroupId::H3, "2fold", {-2, 2}, Rational(1), std::nullopt,
                                  1, 12);
    REQUIRE(res.json["members"].size() == 5);
    for (const auto& member : res.json["members"]) {
        auto ver = cmd::verify_cmd(member);
        CHECK(ver.json["km_rules"]["rule1_diagonal_two"] == true);
        CHECK(ver.json["km_rules"]["rule4_det_zero"] == true);
        CHECK(ver.json["consistency"]["ratio_consistent"] == true);
        CHECK(ver.json["symmetrisation"]["symmetrisable"] == true);
    }
}

TEST_CASE("enumerate honours the det-violating paper multipliers") {
    auto res = cmd::enumerate_cmd(GroupId::H3, "3fold", {0, 0}, Rational(3, 4),
                                  Rational(1), 1, 12);
    // x = 3/4(1-tau), y = (1-tau): not an affine matrix, still classified
    CHECK(res.json["members"][0]["length"]["length_sq"]["a"] == "3/4");
    CHECK(res.json["members"][0]["det"]["a"] != "0");
}

TEST_CASE("lengths tables") {
    auto res = cmd::lengths_cmd(GroupId::H3, "2fold", Rational(1), std::nullopt,
                                std::nullopt, 12);
    REQUIRE(res.json["tables"].size() == 1);
    CHECK(res.json["tables"][0]["rows"].size() == 5);
    auto all = cmd::lengths_cmd(GroupId::H3, "3fold", std::nullopt, std::nullopt,
                                std::nullopt, 12);
    CHECK(all.json["tables"].size() == 3);  // the three named presets
}

TEST_CASE("op command emits exact operators") {
    auto res = cmd::op_cmd("3fold", 0, Rational(3, 4), 1, "orbit", 12);
    CHECK(res.json["twists"].size() == 6);
    std::size_t pure = 0;
    for (const auto& t : res.json["twists"])
        if (t["pure_translation"] == true) ++pure;
    CHECK(pure == 1);

    auto mat = cmd::op_cmd("2fold", 1, Rational(1), 1, "matrix", 12);
    CHECK(mat.json["translation"]["pure_translation"] == true);
}

TEST_CASE("array command scan table") {
    auto res = cmd::array_cmd(GroupId::H2, "pentagon", "highest",
                              {"-1+1t", "1", "tau"}, "json");
    REQUIRE(res.json["scan"].size() == 3);
    std::vector<std::size_t> cards;
    for (const auto& row : res.json["scan"]) cards.push_back(row["cardinality"]);
    CHECK(cards == std::vector<std::size_t>{25, 20, 25});
}

TEST_CASE("binary end-to-end") {
    REQUIRE_MESSAGE(!binary().empty(), "COXAFF_BIN not set");
    fs::path dir = workdir();

    SUBCASE("group order") {
        fs::path out = dir / "order.txt";
        CHECK(run("group --group h3 --count-only -o " + out.string()) == 0);
        CHECK(slurp(out) == "120\n");
    }

    SUBCASE("roots csv") {
        fs::path out = dir / "roots.csv";
        CHECK(run("roots --group h2 --format csv -o " + out.string()) == 0);
        std::string csv = slurp(out);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);  // header + 10 roots
    }

    SUBCASE("solve json is byte-identical across runs") {
        fs::path a = dir / "solve-a.json", b = dir / "solve-b.json";
        CHECK(run("solve --target 3-1t --bound 12 --json -o " + a.string()) == 0);
        CHECK(run("solve --target 3-1t --bound 12 --json -o " + b.string()) == 0);
        CHECK(slurp(a) == slurp(b));
        CHECK(slurp(a).find("\"orbit_count\": 2") != std::string::npos);
    }

    SUBCASE("verify round-trips an emitted matrix") {
        auto res = cmd::enumerate_cmd(GroupId::H3, "2fold", {0, 0}, Rational(1),
                                      std::nullopt, 1, 12);
        fs::path mat = dir / "member.json";
        std::ofstream(mat) << res.json["members"][0].dump();
        fs::path rep = dir / "verify.json";
        CHECK(run("verify --file " + mat.string() + " --json -o " + rep.string()) == 0);
        CHECK(slurp(rep).find("\"rule4_det_zero\": true") != std::string::npos);
    }

    SUBCASE("svg output") {
        fs::path out = dir / "array.svg";
        CHECK(run("array --group h2 --seed pentagon --axis highest --length 1 "
                  "--out svg -o " +
                  out.string()) == 0);
        CHECK(slurp(out).rfind("<svg", 0) == 0);
    }

    SUBCASE("output directory override") {
        std::string cmdline = "COXAFF_OUTDIR=" + (dir / "sub").string() + " " + binary() +
                              " group --group h2 --count-only -o nested/order.txt "
                              "> /dev/null 2>&1";
        CHECK(std::system(cmdline.c_str()) == 0);
        CHECK(slurp(dir / "sub" / "nested" / "order.txt") == "10\n");
    }

    SUBCASE("invalid input fails with nonzero status") {
        CHECK(run("solve --target not-a-number") != 0);
        CHECK(run("enumerate --group h2 --axis 5fold") != 0);
        CHECK(run("array --group h3 --seed pentagon --axis 2fold --length 1") != 0);
    }
}
