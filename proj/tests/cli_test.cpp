#include <catch2/catch_amalgamated.hpp>

#include "nilorb/cli.hpp"

#include <sstream>

using namespace nilorb;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("orbits subcommand") {
    auto res = run({"orbits", "--n", "4"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    REQUIRE(j.size() == 5);
    std::vector<int> dims;
    for (const auto& rec : j) dims.push_back(rec["dimension"].get<int>());
    CHECK(dims == std::vector<int>{12, 10, 8, 6, 0});
    CHECK(j[0]["dynkin_weights"] == nlohmann::json({2, 2, 2}));
    CHECK(j[3]["dynkin_weights"] == nlohmann::json({1, 0, 1}));

    CHECK(run({"orbits", "--n", "4", "--format", "text"}).out.find("bala_carter=2A1") != std::string::npos);
    CHECK(run({"orbits", "--n", "4", "--format", "latex"}).out.find("\\begin{array}") != std::string::npos);
    CHECK(run({"orbits", "--n", "5"}).code == 2);
}

TEST_CASE("json output is byte-stable") {
    auto first = run({"orbits", "--n", "3"});
    auto second = run({"orbits", "--n", "3"});
    CHECK(first.out == second.out);

    auto euler = run({"euler", "--s", "2", "--m", "6"});
    CHECK(euler.out ==
          "{\n  \"s\": 2,\n  \"m\": 6,\n  \"divisor_sigma\": \"50\",\n  \"euler_product\": \"50\",\n"
          "  \"equal\": true\n}\n");
}

TEST_CASE("classify-nilpotent subcommand") {
    auto res = run({"classify-nilpotent", "--n", "4", "--matrix", "0,1,0,0;0,0,0,0;0,0,0,1;0,0,0,0"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["partition"] == "(2,2)");
    CHECK(j["dimension"] == 8);

    CHECK(run({"classify-nilpotent", "--n", "2", "--matrix", "1,0;0,1"}).code == 2);
    CHECK(run({"classify-nilpotent", "--n", "2", "--matrix", "junk"}).code == 2);
}

TEST_CASE("classify-character subcommand") {
    auto res = run({"classify-character", "--alpha", "alpha2", "--charges", "1,0,0,1"});
    REQUIRE(res.code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["orbit"] == "(2,2)");

    auto deg = run({"classify-character", "--alpha", "alpha1", "--charges", "0,0,5"});
    REQUIRE(deg.code == 0);
    auto jd = nlohmann::json::parse(deg.out);
    CHECK(jd["orbit"] == "(2,1,1)");
    CHECK(jd["canonical_charges"]["(1,4)"] == "5");

    auto sl3 = run({"classify-character", "--group", "sl3", "--charges", "3,6"});
    REQUIRE(sl3.code == 0);
    auto js = nlohmann::json::parse(sl3.out);
    CHECK(js["orbit"] == "(2,1)");
    CHECK(js["canonical_charge"] == "6");
    CHECK(js["conjugator"][1][2] == "-1/2");

    CHECK(run({"classify-character", "--alpha", "alpha2", "--charges", "0,0,0,0"}).code == 2);
    CHECK(run({"classify-character", "--alpha", "alpha9", "--charges", "1"}).code == 2);
}

TEST_CASE("expand subcommand") {
    auto gen = run({"expand", "--n", "4", "--coefficient", "F212", "--rep", "generic"});
    REQUIRE(gen.code == 0);
    auto j = nlohmann::json::parse(gen.out);
    CHECK(j["terms"].size() == 2);

    auto min = run({"expand", "--n", "4", "--coefficient", "F212", "--rep", "min"});
    auto jm = nlohmann::json::parse(min.out);
    REQUIRE(jm["terms"].size() == 1);
    CHECK(jm["terms"][0]["kind"] == "W_N4");
    CHECK(jm["terms"][0]["slots"][1]["charge"] == "m");

    auto ntm = run({"expand", "--n", "4", "--coefficient", "F212", "--rep", "ntm"});
    CHECK(nlohmann::json::parse(ntm.out)["terms"].size() == 2);

    auto f22min = run({"expand", "--n", "4", "--coefficient", "F22", "--rep", "min"});
    CHECK(nlohmann::json::parse(f22min.out)["terms"].empty());

    auto sl3 = run({"expand", "--n", "3", "--coefficient", "Fmin3", "--rep", "min", "--format", "latex"});
    REQUIRE(sl3.code == 0);
    CHECK(sl3.out.find("W_N") != std::string::npos);

    CHECK(run({"expand", "--n", "3", "--coefficient", "F212"}).code == 2);
    CHECK(run({"expand", "--n", "3", "--coefficient", "Fmin3", "--rep", "ntm"}).code == 2);
}

TEST_CASE("verify subcommands") {
    auto rules3 = run({"verify-rules", "--n", "3"});
    CHECK(rules3.code == 0);
    auto j = nlohmann::json::parse(rules3.out);
    CHECK(j["pass"] == true);
    CHECK(j["rules"].size() == 8);
    CHECK(j["mutation_canary"]["rejected"] == true);

    CHECK(run({"verify-rules", "--n", "4", "--seed", "7"}).code == 0);

    auto prop = run({"verify-prop", "--group", "e8", "--realization", "heisenberg", "--mmax", "50"});
    CHECK(prop.code == 0);
    CHECK(nlohmann::json::parse(prop.out)["failed"] == 0);

    CHECK(run({"verify-prop", "--group", "e8", "--realization", "abelian", "--mmax", "5"}).code == 2);

    auto euler = run({"euler", "--s", "3", "--mmax", "300"});
    CHECK(euler.code == 0);
    CHECK(nlohmann::json::parse(euler.out)["mismatches"] == 0);
}

TEST_CASE("spherical subcommand") {
    auto fin = run({"spherical", "--group", "e6", "--realization", "abelian", "--place", "2", "--charge", "2"});
    REQUIRE(fin.code == 0);
    CHECK(nlohmann::json::parse(fin.out)["value"] == "5");

    auto inf = run({"spherical", "--group", "e7", "--realization", "abelian", "--place", "inf", "--charge", "2"});
    REQUIRE(inf.code == 0);
    double v = nlohmann::json::parse(inf.out)["value"].get<double>();
    CHECK_THAT(v, Catch::Matchers::WithinRel(std::pow(2.0, -1.5) * bessel_k(BesselOrder(3), 2.0), 1e-12));

    CHECK(run({"spherical", "--group", "e8", "--realization", "abelian", "--place", "2", "--charge", "1"}).code == 2);
    CHECK(run({"spherical", "--group", "e5", "--realization", "abelian", "--place", "2", "--charge", "1"}).code == 2);
    CHECK(run({"spherical", "--group", "e6", "--realization", "abelian", "--place", "4", "--charge", "1"}).code == 2);
    CHECK(run({"spherical", "--group", "e6", "--realization", "abelian", "--place", "99999999999999999999999",
               "--charge", "1"}).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"orbits"}).code == 2);                       // missing --n
    CHECK(run({"orbits", "--n", "4", "--bogus"}).code == 2);  // unknown flag
    CHECK(run({"euler", "--s", "2"}).code == 2);            // neither --m nor --mmax
    CHECK(run({"--help"}).code == 0);
}
