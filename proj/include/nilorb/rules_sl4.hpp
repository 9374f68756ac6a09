// SL(4) expansion rules: the minimal-orbit coefficient, the partially summed
// next-to-minimal coefficient, and the alternative single-root expansions.
#pragma once

#include "nilorb/rules.hpp"

namespace nilorb {

inline void RuleRegistry::build_f211_expansion() {
    using namespace ruledef;
    auto v22 = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        return umat(4, {{1, 3, fv(a)}, {1, 4, fv(b)}, {2, 3, fv(c)}, {2, 4, fv(d)}});
    };

    RewriteRule r;
    r.id = "expand.f211.alpha2";
    r.n = 4;
    r.input_kind = TermKind::Forbit;
    r.input_orbit = Partition{2, 1, 1};
    r.input_pattern = {1};
    r.input_charges = {"q4"};

    FracMatrix l43 = fmat(4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    l43.at(1, 1) = fv("r2") / fv("q4");
    l43.at(3, 3) = -fv("r5") / fv("q4");
    FracMatrix l22 = fmat(4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    l22.at(1, 1) = fv("p1");
    l22.at(3, 3) = fv("p2");

    r.outputs = {term(4, TermKind::Forbit, Partition{2, 2},
                      {ChargeSlot::zero(), slot_sym("r3", true), slot_sym("q4", true), ChargeSlot::zero()}, {l22},
                      {"p1", "p2"}, {"r3"}, {}),
                 term(4, TermKind::WN4, {}, {slot_sym("r1", false), slot_sym("q4", true), slot_sym("r6", false)},
                      {l22}, {"p1", "p2", "r1", "r6"}, {}, {})};

    RewriteStep s1;
    s1.name = "expand-and-conjugate";
    s1.syms = symbols({"t", "x2", "x3", "x5", "z1", "z2", "z3", "z4"}, {"r2", "r3", "r5"}, {"q4"});
    s1.expansions = {{"r2", "x2"}, {"r3", "x3"}, {"r5", "x5"}};
    s1.old_coords = {"t", "x2", "x3", "x5"};
    s1.new_coords = {"z1", "z2", "z3", "z4"};
    s1.lhs_word = {umat(4, {{1, 3, fv("x5")}, {1, 4, fv("t")}, {2, 3, fv("x3")}, {2, 4, fv("x2")}})};
    s1.gamma = l43.inverse();
    s1.rhs_template = v22("z1", "z2", "z3", "z4");
    s1.rhs_fixed = {l43};
    s1.lhs_exponent = fv("q4") * fv("t") + fv("r2") * fv("x2") + fv("r3") * fv("x3") + fv("r5") * fv("x5");
    s1.rhs_exponent = (fv("r3") - fv("r2") * fv("r5") / fv("q4")) * fv("z2") + fv("q4") * fv("z3");
    s1.reindex = {{"r2", fv("r2") / fv("q4")},
                  {"r5", -fv("r5") / fv("q4")},
                  {"r3", fv("r3") - fv("r2") * fv("r5") / fv("q4")}};

    RewriteStep s2;
    s2.name = "expand-outer-row";
    s2.syms = symbols({"w1", "z1", "z2", "z3", "z4", "w6"}, {"r1", "r6"}, {"q4"}, {"p1", "p2"});
    for (const auto& c : coords("y", 6)) s2.syms[c] = SymKind::Coord;
    s2.expansions = {{"r1", "w1"}, {"r6", "w6"}};
    s2.old_coords = {"w1", "z1", "z2", "z3", "z4", "w6"};
    s2.new_coords = coords("y", 6);
    s2.lhs_word = {umat(4, {{1, 2, fv("w1")},
                            {1, 3, fv("z1")},
                            {1, 4, fv("z2")},
                            {2, 3, fv("z3")},
                            {2, 4, fv("z4")},
                            {3, 4, fv("w6")}}),
                   l22};
    s2.rhs_template = n4("y");
    s2.rhs_fixed = {l22};
    s2.lhs_exponent = fv("q4") * fv("z3") + fv("r1") * fv("w1") + fv("r6") * fv("w6");
    s2.rhs_exponent = fv("r1") * fv("y1") + fv("q4") * fv("y4") + fv("r6") * fv("y6");

    r.steps = {s1, s2};
    add(std::move(r));
}

inline void RuleRegistry::build_f22_expansions() {
    using namespace ruledef;
    auto v22 = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        return umat(4, {{1, 3, fv(a)}, {1, 4, fv(b)}, {2, 3, fv(c)}, {2, 4, fv(d)}});
    };

    {  // every (2^2) coefficient in partially summed form
        RewriteRule r;
        r.id = "expand.f22.partial_sum";
        r.n = 4;
        r.input_kind = TermKind::Forbit;
        r.input_orbit = Partition{2, 2};
        r.input_pattern = {1, 2, 2, 2};
        r.input_charges = {"q1", "q2", "q3", "q4"};
        Frac e4 = fv("q4") - fv("q2") * fv("q3") / fv("q1");
        FracMatrix levi = umat(4, {{1, 2, fv("q3") / fv("q1")}, {4, 3, -fv("q2") / fv("q1")}});
        FracMatrix u_insert = umat(4, {{2, 3, fv("u")}});
        r.outputs = {term(4, TermKind::FpartialSum22, {}, {slot_sym("q1", true), slot_expr(e4, true)},
                          {u_insert, levi}, {}, {}, {"u"})};

        RewriteStep s1;
        s1.name = "clear-off-charges";
        s1.syms = symbols({"x1", "x2", "x3", "x4", "z1", "z2", "z3", "z4"}, {"q2", "q3", "q4"}, {"q1"});
        s1.old_coords = {"x1", "x2", "x3", "x4"};
        s1.new_coords = {"z1", "z2", "z3", "z4"};
        s1.lhs_word = {v22("x1", "x2", "x3", "x4")};
        s1.gamma = levi.inverse();
        s1.rhs_template = v22("z1", "z2", "z3", "z4");
        s1.rhs_fixed = {levi};
        s1.lhs_exponent =
            fv("q1") * fv("x1") + fv("q2") * fv("x2") + fv("q3") * fv("x3") + fv("q4") * fv("x4");
        s1.rhs_exponent = fv("q1") * fv("z1") + e4 * fv("z4");

        RewriteStep s2;
        s2.name = "unfold-partial-sum";
        s2.syms = symbols({"w1", "w2", "w3", "w4", "u", "z1", "z2", "z3", "z4", "v"}, {"q2", "q3", "q4", "r1"}, {"q1"});
        s2.old_coords = {"w1", "w2", "w3", "w4", "u"};
        s2.new_coords = {"z1", "z2", "z3", "z4", "v"};
        s2.lhs_word = {v22("w1", "w2", "w3", "w4"), u_insert, levi};
        s2.rhs_template = v22("z1", "z2", "z3", "z4");
        s2.rhs_fixed = {levi};
        s2.psi_extra = {{"v", fv("u")}};
        s2.lhs_exponent = fv("q1") * fv("w1") + fv("r1") * fv("w3") + e4 * fv("w4");
        s2.rhs_exponent = fv("q1") * fv("z1") + fv("r1") * fv("z3") + e4 * fv("z4");
        s2.collapses = {{"r1", "v", Frac(-1)}};
        r.steps = {s1, s2};
        add(std::move(r));
    }

    {  // the summed minimal-expansion remainder in partially summed form
        RewriteRule r;
        r.id = "expand.f22.resum";
        r.n = 4;
        r.input_kind = TermKind::Forbit;
        r.input_orbit = Partition{2, 2};
        r.input_pattern = {0, 1, 1, 0};
        r.input_charges = {"qa", "q3", "q4", "qb"};
        FracMatrix l22 = fmat(4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
        l22.at(1, 1) = fv("p1");
        l22.at(3, 3) = fv("p2");
        FracMatrix a_factor = fmat(4, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        a_factor.at(1, 1) = fv("p1");
        FracMatrix b_factor = fmat(4, {{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
        b_factor.at(3, 3) = fv("p2");
        r.outputs = {term(4, TermKind::FpartialSum22, {}, {slot_expr(-fv("q4"), true), slot_sym("q3", true)},
                          {b_factor}, {"p2"}, {}, {})};

        RewriteStep factor;
        factor.name = "factor-levi-family";
        factor.syms = symbols({}, {}, {}, {"p1", "p2"});
        factor.lhs_word = {l22};
        factor.rhs_template = FracMatrix::identity(4);
        factor.rhs_fixed = {a_factor, b_factor};

        RewriteStep s;
        s.name = "absorb-first-factor";
        s.syms = symbols({"x1", "x2", "x3", "x4", "z1", "z2", "z3", "z4"}, {}, {"q3", "q4"}, {"p1"});
        s.old_coords = {"x1", "x2", "x3", "x4"};
        s.new_coords = {"z1", "z2", "z3", "z4"};
        s.lhs_word = {v22("x1", "x2", "x3", "x4"), a_factor};
        s.gamma = a_factor;
        s.rhs_template = v22("z1", "z2", "z3", "z4");
        s.lhs_exponent = fv("q3") * fv("x2") + fv("q4") * fv("x3");
        s.rhs_exponent = -fv("q4") * fv("z1") + fv("p1") * fv("q4") * fv("z3") + fv("q3") * fv("z4");
        s.reindex = {{"p1", fv("p1") * fv("q4")}};
        r.steps = {factor, s};
        add(std::move(r));
    }

    {  // the partially summed coefficient as (31) coefficients plus Whittaker vectors
        RewriteRule r;
        r.id = "expand.f22.orbits";
        r.n = 4;
        r.input_kind = TermKind::FpartialSum22;
        r.input_pattern = {1, 1};
        r.input_charges = {"q1", "q6"};
        FracMatrix l46 = fmat(4, {{-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
        l46.at(2, 2) = -fv("r2") / fv("q1");
        FracMatrix l31 = fmat(4, {{-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
        l31.at(2, 2) = fv("p1");
        r.outputs = {term(4, TermKind::Forbit, Partition{3, 1},
                          {slot_expr(-fv("q1"), true), ChargeSlot::zero(), slot_sym("r5", true), slot_sym("q6", true)},
                          {l31}, {"p1"}, {"r5"}, {}),
                     term(4, TermKind::WN4, {}, {slot_expr(-fv("q1"), true), slot_sym("r4", false), slot_sym("q6", true)},
                          {l31}, {"p1", "r4"}, {}, {})};

        RewriteStep s1;
        s1.name = "expand-and-conjugate";
        s1.syms = symbols({"x1", "x2", "x3", "x5", "x6", "z1", "z2", "z3", "z4", "z5"}, {"r2", "r5"}, {"q1", "q6"});
        s1.expansions = {{"r2", "x2"}, {"r5", "x5"}};
        s1.old_coords = {"x1", "x2", "x3", "x5", "x6"};
        s1.new_coords = {"z1", "z2", "z3", "z4", "z5"};
        s1.lhs_word = {umat(4, {{1, 2, fv("x2")}, {1, 3, fv("x1")}, {1, 4, fv("x3")}, {2, 4, fv("x6")}, {3, 4, fv("x5")}})};
        s1.gamma = l46.inverse();
        s1.rhs_template =
            umat(4, {{1, 2, fv("z1")}, {1, 3, fv("z2")}, {1, 4, fv("z3")}, {2, 4, fv("z4")}, {3, 4, fv("z5")}});
        s1.rhs_fixed = {l46};
        s1.lhs_exponent = fv("q1") * fv("x1") + fv("q6") * fv("x6") + fv("r2") * fv("x2") + fv("r5") * fv("x5");
        s1.rhs_exponent = -fv("q1") * fv("z1") + (fv("r5") + fv("r2") * fv("q6") / fv("q1")) * fv("z4") + fv("q6") * fv("z5");
        s1.reindex = {{"r2", -fv("r2") / fv("q1")}, {"r5", fv("r5") + fv("r2") * fv("q6") / fv("q1")}};

        RewriteStep s2;
        s2.name = "expand-middle-root";
        s2.syms = symbols(coords("w", 6), {"r4"}, {"q1", "q6"}, {"p1"});
        for (const auto& c : coords("y", 6)) s2.syms[c] = SymKind::Coord;
        s2.expansions = {{"r4", "w4"}};
        s2.old_coords = coords("w", 6);
        s2.new_coords = coords("y", 6);
        s2.lhs_word = {n4("w"), l31};
        s2.rhs_template = n4("y");
        s2.rhs_fixed = {l31};
        s2.lhs_exponent = -fv("q1") * fv("w1") + fv("q6") * fv("w6") + fv("r4") * fv("w4");
        s2.rhs_exponent = -fv("q1") * fv("y1") + fv("r4") * fv("y4") + fv("q6") * fv("y6");
        r.steps = {s1, s2};
        add(std::move(r));
    }
}

inline void RuleRegistry::build_f211_alternatives() {
    using namespace ruledef;

    {  // alpha_1 strategy for the minimal-orbit coefficient
        RewriteRule r;
        r.id = "expand.f211.alpha1";
        r.n = 4;
        r.input_kind = TermKind::Forbit;
        r.input_orbit = Partition{2, 1, 1};
        r.input_pattern = {1};
        r.input_charges = {"q1"};
        FracMatrix l1pre = fmat(4, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}});
        l1pre.at(2, 3) = -fv("r2") / fv("q1");
        l1pre.at(3, 3) = fv("r3") / fv("q1");
        FracMatrix l1 = fmat(4, {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}});
        l1.at(2, 3) = fv("p1");
        l1.at(3, 3) = fv("p2");
        FracMatrix l2pre = umat(4, {{4, 3, -fv("r5") / fv("r4")}});
        FracMatrix l2 = umat(4, {{4, 3, fv("p3")}});
        FracMatrix w = fmat(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});

        r.outputs = {term(4, TermKind::WN4, {}, {slot_sym("q1", true), slot_sym("r4", true), slot_sym("r6", false)},
                          {l2, l1}, {"p1", "p2", "p3", "r6"}, {"r4"}, {}),
                     term(4, TermKind::WN4, {}, {slot_sym("q1", true), slot_sym("r5", false), slot_sym("r6", false)},
                          {w, l1}, {"p1", "p2", "r5", "r6"}, {}, {})};

        RewriteStep s1;
        s1.name = "expand-top-row-and-conjugate";
        s1.syms = symbols({"x1", "x2", "x3", "z1", "z2", "z3"}, {"r2", "r3"}, {"q1"});
        s1.expansions = {{"r2", "x2"}, {"r3", "x3"}};
        s1.old_coords = {"x1", "x2", "x3"};
        s1.new_coords = {"z1", "z2", "z3"};
        s1.lhs_word = {umat(4, {{1, 2, fv("x3")}, {1, 3, fv("x2")}, {1, 4, fv("x1")}})};
        s1.gamma = l1pre.inverse();
        s1.rhs_template = umat(4, {{1, 2, fv("z1")}, {1, 3, fv("z2")}, {1, 4, fv("z3")}});
        s1.rhs_fixed = {l1pre};
        s1.lhs_exponent = fv("q1") * fv("x1") + fv("r2") * fv("x2") + fv("r3") * fv("x3");
        s1.rhs_exponent = fv("q1") * fv("z1");
        s1.reindex = {{"r2", -fv("r2") / fv("q1")}, {"r3", fv("r3") / fv("q1")}};

        RewriteStep s2;
        s2.name = "expand-second-row";
        s2.syms = symbols({"z1", "z2", "z3", "w4", "w5", "v1", "v2", "v3", "v4", "v5"}, {"r4", "r5"}, {"q1"},
                          {"p1", "p2"});
        s2.expansions = {{"r4", "w4"}, {"r5", "w5"}};
        s2.old_coords = {"z1", "z2", "z3", "w4", "w5"};
        s2.new_coords = {"v1", "v2", "v3", "v4", "v5"};
        s2.lhs_word = {umat(4, {{1, 2, fv("z1")}, {1, 3, fv("z2")}, {1, 4, fv("z3")}, {2, 3, fv("w4")}, {2, 4, fv("w5")}}),
                       l1};
        s2.rhs_template =
            umat(4, {{1, 2, fv("v1")}, {1, 3, fv("v2")}, {1, 4, fv("v3")}, {2, 3, fv("v4")}, {2, 4, fv("v5")}});
        s2.rhs_fixed = {l1};
        s2.lhs_exponent = fv("q1") * fv("z1") + fv("r4") * fv("w4") + fv("r5") * fv("w5");
        s2.rhs_exponent = fv("q1") * fv("v1") + fv("r4") * fv("v4") + fv("r5") * fv("v5");

        RewriteStep s3a;
        s3a.name = "charged-branch-conjugate";
        s3a.syms = symbols({"v1", "v2", "v3", "v4", "v5", "y1", "y2", "y3", "y4", "y5"}, {"r5"}, {"q1", "r4"},
                           {"p1", "p2"});
        s3a.old_coords = {"v1", "v2", "v3", "v4", "v5"};
        s3a.new_coords = {"y1", "y2", "y3", "y4", "y5"};
        s3a.lhs_word = {umat(4, {{1, 2, fv("v1")}, {1, 3, fv("v2")}, {1, 4, fv("v3")}, {2, 3, fv("v4")}, {2, 4, fv("v5")}}),
                        l1};
        s3a.gamma = l2pre.inverse();
        s3a.rhs_template =
            umat(4, {{1, 2, fv("y1")}, {1, 3, fv("y2")}, {1, 4, fv("y3")}, {2, 3, fv("y4")}, {2, 4, fv("y5")}});
        s3a.rhs_fixed = {l2pre, l1};
        s3a.lhs_exponent = fv("q1") * fv("v1") + fv("r4") * fv("v4") + fv("r5") * fv("v5");
        s3a.rhs_exponent = fv("q1") * fv("y1") + fv("r4") * fv("y4");
        s3a.reindex = {{"r5", -fv("r5") / fv("r4")}};

        RewriteStep s4a;
        s4a.name = "charged-branch-close";
        s4a.syms = symbols({"y1", "y2", "y3", "y4", "y5", "v6"}, {"r6"}, {"q1", "r4"}, {"p1", "p2", "p3"});
        for (const auto& c : coords("e", 6)) s4a.syms[c] = SymKind::Coord;
        s4a.expansions = {{"r6", "v6"}};
        s4a.old_coords = {"y1", "y2", "y3", "y4", "y5", "v6"};
        s4a.new_coords = coords("e", 6);
        s4a.lhs_word = {umat(4, {{1, 2, fv("y1")},
                                 {1, 3, fv("y2")},
                                 {1, 4, fv("y3")},
                                 {2, 3, fv("y4")},
                                 {2, 4, fv("y5")},
                                 {3, 4, fv("v6")}}),
                        l2, l1};
        s4a.rhs_template = n4("e");
        s4a.rhs_fixed = {l2, l1};
        s4a.lhs_exponent = fv("q1") * fv("y1") + fv("r4") * fv("y4") + fv("r6") * fv("v6");
        s4a.rhs_exponent = fv("q1") * fv("e1") + fv("r4") * fv("e4") + fv("r6") * fv("e6");

        RewriteStep s3b;
        s3b.name = "uncharged-branch-reflect";
        s3b.syms = symbols({"v1", "v2", "v3", "v4", "v5", "y1", "y2", "y3", "y4", "y5"}, {"r5"}, {"q1"}, {"p1", "p2"});
        s3b.old_coords = {"v1", "v2", "v3", "v4", "v5"};
        s3b.new_coords = {"y1", "y2", "y3", "y4", "y5"};
        s3b.lhs_word = {umat(4, {{1, 2, fv("v1")}, {1, 3, fv("v2")}, {1, 4, fv("v3")}, {2, 3, fv("v4")}, {2, 4, fv("v5")}}),
                        l1};
        s3b.gamma = w.inverse();
        s3b.rhs_template =
            umat(4, {{1, 2, fv("y1")}, {1, 3, fv("y2")}, {1, 4, fv("y3")}, {2, 3, fv("y4")}, {2, 4, fv("y5")}});
        s3b.rhs_fixed = {w, l1};
        s3b.lhs_exponent = fv("q1") * fv("v1") + fv("r5") * fv("v5");
        s3b.rhs_exponent = fv("q1") * fv("y1") + fv("r5") * fv("y4");

        RewriteStep s4b;
        s4b.name = "uncharged-branch-close";
        s4b.syms = symbols({"y1", "y2", "y3", "y4", "y5", "v6"}, {"r5", "r6"}, {"q1"}, {"p1", "p2"});
        for (const auto& c : coords("e", 6)) s4b.syms[c] = SymKind::Coord;
        s4b.expansions = {{"r6", "v6"}};
        s4b.old_coords = {"y1", "y2", "y3", "y4", "y5", "v6"};
        s4b.new_coords = coords("e", 6);
        s4b.lhs_word = {umat(4, {{1, 2, fv("y1")},
                                 {1, 3, fv("y2")},
                                 {1, 4, fv("y3")},
                                 {2, 3, fv("y4")},
                                 {2, 4, fv("y5")},
                                 {3, 4, fv("v6")}}),
                        w, l1};
        s4b.rhs_template = n4("e");
        s4b.rhs_fixed = {w, l1};
        s4b.lhs_exponent = fv("q1") * fv("y1") + fv("r5") * fv("y4") + fv("r6") * fv("v6");
        s4b.rhs_exponent = fv("q1") * fv("e1") + fv("r5") * fv("e4") + fv("r6") * fv("e6");

        r.steps = {s1, s2, s3a, s4a, s3b, s4b};
        add(std::move(r));
    }

    {  // alpha_3 strategy
        RewriteRule r;
        r.id = "expand.f211.alpha3";
        r.n = 4;
        r.input_kind = TermKind::Forbit;
        r.input_orbit = Partition{2, 1, 1};
        r.input_pattern = {1};
        r.input_charges = {"q6"};
        FracMatrix l1pre = fmat(4, {{0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
        l1pre.at(2, 1) = fv("r2") / fv("q6");
        l1pre.at(2, 2) = fv("r3") / fv("q6");
        FracMatrix l1 = fmat(4, {{0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}});
        l1.at(2, 1) = fv("p1");
        l1.at(2, 2) = fv("p2");
        FracMatrix l2pre = umat(4, {{2, 1, fv("r5") / fv("r4")}});
        FracMatrix l2 = umat(4, {{2, 1, fv("p3")}});
        FracMatrix w = fmat(4, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});

        r.outputs = {term(4, TermKind::WN4, {}, {slot_sym("r6", false), slot_sym("r4", true), slot_sym("q6", true)},
                          {l2, l1}, {"p1", "p2", "p3", "r6"}, {"r4"}, {}),
                     term(4, TermKind::WN4, {}, {slot_sym("r6", false), slot_expr(-fv("r5"), false), slot_sym("q6", true)},
                          {w, l1}, {"p1", "p2", "r5", "r6"}, {}, {})};

        RewriteStep s1;
        s1.name = "expand-last-column-and-conjugate";
        s1.syms = symbols({"x1", "x2", "x3", "z1", "z2", "z3"}, {"r2", "r3"}, {"q6"});
        s1.expansions = {{"r2", "x2"}, {"r3", "x3"}};
        s1.old_coords = {"x1", "x2", "x3"};
        s1.new_coords = {"z1", "z2", "z3"};
        s1.lhs_word = {umat(4, {{1, 4, fv("x1")}, {2, 4, fv("x2")}, {3, 4, fv("x3")}})};
        s1.gamma = l1pre.inverse();
        s1.rhs_template = umat(4, {{1, 4, fv("z3")}, {2, 4, fv("z2")}, {3, 4, fv("z1")}});
        s1.rhs_fixed = {l1pre};
        s1.lhs_exponent = fv("q6") * fv("x1") + fv("r2") * fv("x2") + fv("r3") * fv("x3");
        s1.rhs_exponent = fv("q6") * fv("z1");
        s1.reindex = {{"r2", fv("r2") / fv("q6")}, {"r3", fv("r3") / fv("q6")}};

        RewriteStep s2;
        s2.name = "expand-third-column";
        s2.syms = symbols({"z1", "z2", "z3", "w4", "w5", "v1", "v2", "v3", "v4", "v5"}, {"r4", "r5"}, {"q6"},
                          {"p1", "p2"});
        s2.expansions = {{"r4", "w4"}, {"r5", "w5"}};
        s2.old_coords = {"z1", "z2", "z3", "w4", "w5"};
        s2.new_coords = {"v1", "v2", "v3", "v4", "v5"};
        s2.lhs_word = {umat(4, {{1, 3, fv("w5")}, {1, 4, fv("z3")}, {2, 3, fv("w4")}, {2, 4, fv("z2")}, {3, 4, fv("z1")}}),
                       l1};
        s2.rhs_template =
            umat(4, {{1, 3, fv("v5")}, {1, 4, fv("v3")}, {2, 3, fv("v4")}, {2, 4, fv("v2")}, {3, 4, fv("v1")}});
        s2.rhs_fixed = {l1};
        s2.lhs_exponent = fv("q6") * fv("z1") + fv("r4") * fv("w4") + fv("r5") * fv("w5");
        s2.rhs_exponent = fv("q6") * fv("v1") + fv("r4") * fv("v4") + fv("r5") * fv("v5");

        RewriteStep s3a;
        s3a.name = "charged-branch-conjugate";
        s3a.syms = symbols({"v1", "v2", "v3", "v4", "v5", "y1", "y2", "y3", "y4", "y5"}, {"r5"}, {"q6", "r4"},
                           {"p1", "p2"});
        s3a.old_coords = {"v1", "v2", "v3", "v4", "v5"};
        s3a.new_coords = {"y1", "y2", "y3", "y4", "y5"};
        s3a.lhs_word = {umat(4, {{1, 3, fv("v5")}, {1, 4, fv("v3")}, {2, 3, fv("v4")}, {2, 4, fv("v2")}, {3, 4, fv("v1")}}),
                        l1};
        s3a.gamma = l2pre.inverse();
        s3a.rhs_template =
            umat(4, {{1, 3, fv("y5")}, {1, 4, fv("y3")}, {2, 3, fv("y4")}, {2, 4, fv("y2")}, {3, 4, fv("y1")}});
        s3a.rhs_fixed = {l2pre, l1};
        s3a.lhs_exponent = fv("q6") * fv("v1") + fv("r4") * fv("v4") + fv("r5") * fv("v5");
        s3a.rhs_exponent = fv("q6") * fv("y1") + fv("r4") * fv("y4");
        s3a.reindex = {{"r5", fv("r5") / fv("r4")}};

        RewriteStep s4a;
        s4a.name = "charged-branch-close";
        s4a.syms = symbols({"y1", "y2", "y3", "y4", "y5", "v6"}, {"r6"}, {"q6", "r4"}, {"p1", "p2", "p3"});
        for (const auto& c : coords("e", 6)) s4a.syms[c] = SymKind::Coord;
        s4a.expansions = {{"r6", "v6"}};
        s4a.old_coords = {"y1", "y2", "y3", "y4", "y5", "v6"};
        s4a.new_coords = coords("e", 6);
        s4a.lhs_word = {umat(4, {{1, 2, fv("v6")},
                                 {1, 3, fv("y5")},
                                 {1, 4, fv("y3")},
                                 {2, 3, fv("y4")},
                                 {2, 4, fv("y2")},
                                 {3, 4, fv("y1")}}),
                        l2, l1};
        s4a.rhs_template = n4("e");
        s4a.rhs_fixed = {l2, l1};
        s4a.lhs_exponent = fv("q6") * fv("y1") + fv("r4") * fv("y4") + fv("r6") * fv("v6");
        s4a.rhs_exponent = fv("r6") * fv("e1") + fv("r4") * fv("e4") + fv("q6") * fv("e6");

        RewriteStep s3b;
        s3b.name = "uncharged-branch-reflect";
        s3b.syms = symbols({"v1", "v2", "v3", "v4", "v5", "y1", "y2", "y3", "y4", "y5"}, {"r5"}, {"q6"}, {"p1", "p2"});
        s3b.old_coords = {"v1", "v2", "v3", "v4", "v5"};
        s3b.new_coords = {"y1", "y2", "y3", "y4", "y5"};
        s3b.lhs_word = {umat(4, {{1, 3, fv("v5")}, {1, 4, fv("v3")}, {2, 3, fv("v4")}, {2, 4, fv("v2")}, {3, 4, fv("v1")}}),
                        l1};
        s3b.gamma = w.inverse();
        s3b.rhs_template =
            umat(4, {{1, 3, fv("y5")}, {1, 4, fv("y3")}, {2, 3, fv("y4")}, {2, 4, fv("y2")}, {3, 4, fv("y1")}});
        s3b.rhs_fixed = {w, l1};
        s3b.lhs_exponent = fv("q6") * fv("v1") + fv("r5") * fv("v5");
        s3b.rhs_exponent = fv("q6") * fv("y1") - fv("r5") * fv("y4");

        RewriteStep s4b;
        s4b.name = "uncharged-branch-close";
        s4b.syms = symbols({"y1", "y2", "y3", "y4", "y5", "v6"}, {"r5", "r6"}, {"q6"}, {"p1", "p2"});
        for (const auto& c : coords("e", 6)) s4b.syms[c] = SymKind::Coord;
        s4b.expansions = {{"r6", "v6"}};
        s4b.old_coords = {"y1", "y2", "y3", "y4", "y5", "v6"};
        s4b.new_coords = coords("e", 6);
        s4b.lhs_word = {umat(4, {{1, 2, fv("v6")},
                                 {1, 3, fv("y5")},
                                 {1, 4, fv("y3")},
                                 {2, 3, fv("y4")},
                                 {2, 4, fv("y2")},
                                 {3, 4, fv("y1")}}),
                        w, l1};
        s4b.rhs_template = n4("e");
        s4b.rhs_fixed = {w, l1};
        s4b.lhs_exponent = fv("q6") * fv("y1") - fv("r5") * fv("y4") + fv("r6") * fv("v6");
        s4b.rhs_exponent = fv("r6") * fv("e1") - fv("r5") * fv("e4") + fv("q6") * fv("e6");

        r.steps = {s1, s2, s3a, s4a, s3b, s4b};
        add(std::move(r));
    }
}

}  // namespace nilorb
