#include <catch2/catch_amalgamated.hpp>

#include "nilorb/rules.hpp"

using namespace nilorb;

namespace {
Frac fx(const char* s) { return Frac::variable(s); }
}  // namespace

TEST_CASE("every registered rule passes its witness check") {
    const auto& reg = RuleRegistry::instance();
    REQUIRE(reg.rules().size() == 26);
    for (const auto& rule : reg.rules()) {
        auto report = verify_rewrite_rule(rule);
        INFO(rule.id);
        for (const auto& s : report.steps)
            for (const auto& item : s.items) {
                INFO(s.step + " :: " + item.what + " :: " + item.detail);
                CHECK(item.pass);
            }
        CHECK(report.pass);
    }
}

TEST_CASE("the registry covers the documented derivations") {
    const auto& reg = RuleRegistry::instance();
    const char* required[] = {
        "dict.wn4.000", "dict.wn4.100", "dict.wn4.010", "dict.wn4.001", "dict.wn4.110", "dict.wn4.011",
        "dict.wn4.101", "dict.wn4.111", "dict.wnp4.100", "dict.wnp4.001", "dict.wnp4.101", "dict.wnp4.x1x",
        "sl3.dict.generic", "sl3.dict.alpha1", "sl3.dict.alpha2", "sl3.dict.nonabelian", "sl3.fmin.alpha1",
        "sl3.orbit_sum", "sl3.fu.canonical", "sl3.fu.whittaker", "expand.f211.alpha2", "expand.f22.partial_sum",
        "expand.f22.resum", "expand.f22.orbits", "expand.f211.alpha1", "expand.f211.alpha3"};
    for (const char* id : required) CHECK_NOTHROW(reg.rule(id));
    CHECK_THROWS_AS(reg.rule("no.such.rule"), std::domain_error);
    CHECK(reg.rules_for(3).size() == 8);
    CHECK(reg.rules_for(4).size() == 18);
}

TEST_CASE("a corrupted witness fails with a non-zero residual") {
    // perturbing one entry of the printed translate must break the identity
    RewriteRule mutant = RuleRegistry::instance().rule("dict.wn4.100");
    mutant.steps[0].lhs_word[1].at(0, 1) = mutant.steps[0].lhs_word[1].at(0, 1) + Frac(1);
    auto report = verify_rewrite_rule(mutant);
    CHECK_FALSE(report.pass);
    bool residual_seen = false;
    for (const auto& s : report.steps)
        for (const auto& item : s.items)
            if (!item.pass && !item.detail.empty()) residual_seen = true;
    CHECK(residual_seen);
}

TEST_CASE("corrupting the exponent map is caught") {
    RewriteRule mutant = RuleRegistry::instance().rule("expand.f211.alpha2");
    mutant.steps[0].rhs_exponent = mutant.steps[0].rhs_exponent + fx("z2");
    CHECK_FALSE(verify_rewrite_rule(mutant).pass);
}

TEST_CASE("corrupting a collapse coefficient is caught") {
    RewriteRule mutant = RuleRegistry::instance().rule("sl3.fu.whittaker");
    mutant.steps[0].collapses[0].coeff = Frac(1);  // loses the q1 factor
    CHECK_FALSE(verify_rewrite_rule(mutant).pass);
}

TEST_CASE("solved substitutions match the printed ones") {
    const auto& reg = RuleRegistry::instance();
    {
        // u2 + u3 x -> u2' for the alpha_1 row of SL(3)
        auto psi = solve_substitution(reg.rule("sl3.dict.alpha1").steps[0]);
        CHECK(psi.at("y1") == fx("t"));
        CHECK(psi.at("y2") == fx("u2") + fx("u3") * fx("t"));
        CHECK(psi.at("y3") == fx("u3"));
    }
    {
        // x2 = u2 + u4 x1, x3 = u3 + u5 x1 for the first maximally degenerate row
        auto psi = solve_substitution(reg.rule("dict.wn4.100").steps[0]);
        CHECK(psi.at("y1") == fx("t"));
        CHECK(psi.at("y2") == fx("u2") + fx("u4") * fx("t"));
        CHECK(psi.at("y3") == fx("u3") + fx("u5") * fx("t"));
        CHECK(psi.at("y4") == fx("u4"));
        CHECK(psi.at("y5") == fx("u5"));
        CHECK(psi.at("y6") == fx("u6"));
    }
    {
        // x5 = u5 + u6 x4 for the middle row
        auto psi = solve_substitution(reg.rule("dict.wn4.010").steps[0]);
        CHECK(psi.at("y4") == fx("t"));
        CHECK(psi.at("y5") == fx("u5") + fx("u6") * fx("t"));
    }
    {
        // the collapse step: x1 + n u1 and x2 + u1
        auto psi = solve_substitution(reg.rule("sl3.fu.whittaker").steps[0]);
        CHECK(psi.at("y1") == fx("x1") + fx("r1") * fx("u1"));
        CHECK(psi.at("y2") == fx("x2") + fx("u1"));
        CHECK(psi.at("y3") == fx("x3"));
        CHECK(psi.at("v") == fx("u1"));
    }
    {
        // the Weyl factor of W_N(q1', q4', 0) interchanges the uncharged
        // positions; the flipped coordinate is shifted by the residual ones
        auto psi = solve_substitution(reg.rule("dict.wn4.110").steps[0]);
        CHECK(psi.at("y1") == fx("x1"));
        CHECK(psi.at("y2") == fx("x3"));
        CHECK(psi.at("y3") == -fx("x2") + fx("u5") * fx("x1") + fx("u6") * fx("x3"));
        CHECK(psi.at("y4") == fx("x4"));
        CHECK(psi.at("y5") == fx("u5") + fx("u6") * fx("x4"));
        CHECK(psi.at("y6") == fx("u6"));
    }
}

TEST_CASE("report serialization") {
    auto report = verify_rewrite_rule(RuleRegistry::instance().rule("sl3.orbit_sum"));
    auto j = report_to_json(report);
    CHECK(j["rule"] == "sl3.orbit_sum");
    CHECK(j["pass"] == true);
    CHECK(j["steps"].size() == 2);
}
