// The registered rewrite rules: the Whittaker-to-orbit dictionary for SL(3)
// and SL(4), the orbit-coefficient expansions used by the minimal and
// next-to-minimal endpoints, and the parabolic-coefficient reductions. Every
// rule carries a machine-checkable witness (see rewrite.hpp).
#pragma once

#include "nilorb/rewrite.hpp"

namespace nilorb {

namespace ruledef {

inline Frac fv(const std::string& s) { return Frac::variable(s); }

struct Entry {
    int i, j;  // 1-based
    Frac value;
};

inline FracMatrix umat(int n, std::initializer_list<Entry> entries) {
    FracMatrix m = FracMatrix::identity(n);
    for (const auto& e : entries) m.at(e.i - 1, e.j - 1) = e.value;
    return m;
}

inline FracMatrix fmat(int n, std::initializer_list<std::initializer_list<int>> rows) {
    FracMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (int v : row) m.at(i, j++) = Frac(Rational(v));
        ++i;
    }
    return m;
}

// canonical Whittaker integrands
inline FracMatrix n4(const std::string& p) {
    return umat(4, {{1, 2, fv(p + "1")},
                    {1, 3, fv(p + "2")},
                    {1, 4, fv(p + "3")},
                    {2, 3, fv(p + "4")},
                    {2, 4, fv(p + "5")},
                    {3, 4, fv(p + "6")}});
}
inline FracMatrix n3(const std::string& p) {
    return umat(3, {{1, 2, fv(p + "1")}, {1, 3, fv(p + "2")}, {2, 3, fv(p + "3")}});
}
inline std::vector<std::string> coords(const std::string& p, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(p + std::to_string(i));
    return out;
}

inline std::map<std::string, SymKind> symbols(const std::vector<std::string>& coord_names,
                                              const std::vector<std::string>& free_charges,
                                              const std::vector<std::string>& nonzero_charges,
                                              const std::vector<std::string>& params = {}) {
    std::map<std::string, SymKind> syms;
    for (const auto& c : coord_names) syms[c] = SymKind::Coord;
    for (const auto& c : free_charges) syms[c] = SymKind::FreeCharge;
    for (const auto& c : nonzero_charges) syms[c] = SymKind::NonZeroCharge;
    for (const auto& c : params) syms[c] = SymKind::Param;
    return syms;
}

inline ChargeSlot slot_sym(const std::string& name, bool nonzero) { return ChargeSlot::sym(name, nonzero); }
inline ChargeSlot slot_expr(const Frac& f, bool nonzero) { return ChargeSlot{f, nonzero}; }

inline FormalTerm term(int n, TermKind kind, Partition orbit, std::vector<ChargeSlot> slots,
                       std::vector<FracMatrix> translate, std::set<std::string> summed_free,
                       std::set<std::string> summed_nonzero, std::set<std::string> integrated) {
    FormalTerm t;
    t.n = n;
    t.kind = kind;
    t.orbit = std::move(orbit);
    t.slots = std::move(slots);
    t.translate = std::move(translate);
    t.summed_free = std::move(summed_free);
    t.summed_nonzero = std::move(summed_nonzero);
    t.integrated = std::move(integrated);
    t.residual_integrations = static_cast<int>(t.integrated.size());
    t.validate();
    return t;
}

}  // namespace ruledef

class RuleRegistry {
public:
    static const RuleRegistry& instance() {
        static RuleRegistry registry;
        return registry;
    }

    const std::vector<RewriteRule>& rules() const { return rules_; }

    const RewriteRule& rule(const std::string& id) const {
        for (const auto& r : rules_)
            if (r.id == id) return r;
        throw std::domain_error("RuleRegistry: unknown rule '" + id + "'");
    }

    std::vector<const RewriteRule*> rules_for(int n) const {
        std::vector<const RewriteRule*> out;
        for (const auto& r : rules_)
            if (r.n == n) out.push_back(&r);
        return out;
    }

private:
    RuleRegistry() {
        build_dictionary_wn4();
        build_dictionary_wnp4();
        build_sl3_rows();
        build_sl3_expansions();
        build_f211_expansion();
        build_f22_expansions();
        build_f211_alternatives();
    }

    void add(RewriteRule r) { rules_.push_back(std::move(r)); }

    void build_dictionary_wn4();
    void build_dictionary_wnp4();
    void build_sl3_rows();
    void build_sl3_expansions();
    void build_f211_expansion();
    void build_f22_expansions();
    void build_f211_alternatives();

    std::vector<RewriteRule> rules_;
};

// --- SL(4) Whittaker vectors on N in terms of orbit coefficients ---

inline void RuleRegistry::build_dictionary_wn4() {
    using namespace ruledef;

    {  // constant term
        RewriteRule r;
        r.id = "dict.wn4.000";
        r.n = 4;
        r.input_kind = TermKind::WN4;
        r.input_pattern = {0, 0, 0};
        r.outputs = {term(4, TermKind::ConstantTerm, {}, {}, {}, {}, {}, {})};
        RewriteStep s;
        s.name = "identity";
        s.syms = symbols(coords("x", 6), {}, {});
        for (const auto& c : coords("y", 6)) s.syms[c] = SymKind::Coord;
        s.old_coords = coords("x", 6);
        s.new_coords = coords("y", 6);
        s.lhs_word = {n4("x")};
        s.rhs_template = n4("y");
        r.steps = {s};
        add(std::move(r));
    }

    {  // generic characters are attached to the regular orbit
        RewriteRule r;
        r.id = "dict.wn4.111";
        r.n = 4;
        r.input_kind = TermKind::WN4;
        r.input_pattern = {1, 1, 1};
        r.input_charges = {"q1", "q4", "q6"};
        r.outputs = {term(4, TermKind::Forbit, Partition{4},
                          {slot_sym("q1", true), slot_sym("q4", true), slot_sym("q6", true)}, {}, {}, {}, {})};
        RewriteStep s;
        s.name = "identity";
        s.syms = symbols(coords("x", 6), {}, {"q1", "q4", "q6"});
        for (const auto& c : coords("y", 6)) s.syms[c] = SymKind::Coord;
        s.old_coords = coords("x", 6);
        s.new_coords = coords("y", 6);
        s.lhs_word = {n4("x")};
        s.rhs_template = n4("y");
        s.lhs_exponent = fv("q1") * fv("x1") + fv("q4") * fv("x4") + fv("q6") * fv("x6");
        s.rhs_exponent = fv("q1") * fv("y1") + fv("q4") * fv("y4") + fv("q6") * fv("y6");
        r.steps = {s};
        add(std::move(r));
    }

    // maximally degenerate rows: minimal-orbit coefficient with five residual integrations
    struct MaxDegRow {
        const char* id;
        std::vector<int> pattern;
        const char* charge;
        FracMatrix weyl;
        std::vector<ruledef::Entry> residual;  // entries of the u-translate
        int charged_new;                       // index of the charged N coordinate
    };
    const std::vector<MaxDegRow> maxdeg = {
        {"dict.wn4.100",
         {1, 0, 0},
         "q1",
         fmat(4, {{1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}}),
         {{1, 3, fv("u2")}, {1, 4, fv("u3")}, {2, 3, fv("u4")}, {2, 4, fv("u5")}, {3, 4, fv("u6")}},
         1},
        {"dict.wn4.010",
         {0, 1, 0},
         "q4",
         fmat(4, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}),
         {{1, 2, fv("u1")}, {1, 3, fv("u2")}, {1, 4, fv("u3")}, {2, 4, fv("u5")}, {3, 4, fv("u6")}},
         4},
        {"dict.wn4.001",
         {0, 0, 1},
         "q6",
         fmat(4, {{0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}}),
         {{1, 2, fv("u1")}, {1, 3, fv("u2")}, {1, 4, fv("u3")}, {2, 3, fv("u4")}, {2, 4, fv("u5")}},
         6},
    };
    for (const auto& row : maxdeg) {
        RewriteRule r;
        r.id = row.id;
        r.n = 4;
        r.input_kind = TermKind::WN4;
        r.input_pattern = row.pattern;
        r.input_charges = {row.charge};
        FracMatrix residual = umat(4, {});
        std::set<std::string> integ;
        for (const auto& e : row.residual) {
            residual.at(e.i - 1, e.j - 1) = e.value;
            integ.insert(e.value.str());
        }
        r.outputs = {term(4, TermKind::Forbit, Partition{2, 1, 1}, {slot_sym(row.charge, true)},
                          {row.weyl, residual}, {}, {}, integ)};
        RewriteStep s;
        s.name = "conjugate";
        s.syms = symbols({"t"}, {}, {row.charge});
        for (const auto& c : integ) s.syms[c] = SymKind::Coord;
        for (const auto& c : coords("y", 6)) s.syms[c] = SymKind::Coord;
        s.old_coords = {"t"};
        for (const auto& c : integ) s.old_coords.push_back(c);
        std::sort(s.old_coords.begin() + 1, s.old_coords.end());
        s.new_coords = coords("y", 6);
        s.lhs_word = {umat(4, {{1, 4, fv("t")}}), row.weyl, residual};
        s.gamma = row.weyl;
        s.rhs_template = n4("y");
        s.lhs_exponent = fv(row.charge) * fv("t");
        s.rhs_exponent = fv(row.charge) * fv("y" + std::to_string(row.charged_new));
        r.steps = {s};
        add(std::move(r));
    }

    {  // W_N(q1', q4', 0): next-to-regular orbit (31)
        RewriteRule r;
        r.id = "dict.wn4.110";
        r.n = 4;
        r.input_kind = TermKind::WN4;
        r.input_pattern = {1, 1, 0};
        r.input_charges = {"q1", "q4"};
        FracMatrix w = fmat(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
        FracMatrix residual = umat(4, {{2, 4, fv("u5")}, {3, 4, fv("u6")}});
        r.outputs = {term(4, TermKind::Forbit, Partition{3, 1},
                          {slot_sym("q1", true), ChargeSlot::zero(), slot_sym("q4", true), slot_sym("r1", false)},
                          {w, residual}, {"r1"}, {}, {"u5", "u6"})};
        RewriteStep s;
        s.name = "eliminate-and-conjugate";
        s.syms = symbols({"x1", "x2", "x3", "x4", "x5", "u5", "u6"}, {"r1"}, {"q1", "q4"});
        for (const auto& c : coords("y", 6)) s.syms[c] = SymKind::Coord;
        s.eliminations = {{"r1", "x5"}};
        s.old_coords = {"x1", "x2", "x3", "x4", "x5", "u5", "u6"};
        s.new_coords = coords("y", 6);
        s.lhs_word = {umat(4, {{1, 2, fv("x1")}, {1, 3, fv("x2")}, {1, 4, fv("x3")}, {2, 4, fv("x4")}, {3, 4, fv("x5")}}),
                      w, residual};
        s.gamma = w;
        s.rhs_template = n4("y");
        s.lhs_exponent = fv("q1") * fv("x1") + fv("q4") * fv("x4") + fv("r1") * fv("x5");
        s.rhs_exponent = fv("q1") * fv("y1") + fv("q4") * fv("y4");
        r.steps = {s};
        add(std::move(r));
    }

    {  // W_N(0, q4', q6'): the mirrored (31) row
        RewriteRule r;
        r.id = "dict.wn4.011";
        r.n = 4;
        r.input_kind = TermKind::WN4;
        r.input_pattern = {0, 1, 1};
        r.input_charges = {"q4", "q6"};
        FracMatrix w = fmat(4, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        FracMatrix residual = umat(4, {{1, 2, fv("u1")}, {1, 3, fv("u2")}});
        r.outputs = {term(4, TermKind::Forbit, Partition{3, 1},
                          {slot_sym("r1", false), slot_sym("q4", true), ChargeSlot::zero(), slot_sym("q6", true)},
                          {w, residual}, {"r1"}, {}, {"u1", "u2"})};
        RewriteStep s;
        s.name = "eliminate-and-conjugate";
        s.syms = symbols({"x1", "x2", "x3", "x4", "x5", "u1", "u2"}, {"r1"}, {"q4", "q6"});
        for (const auto& c : coords("y", 6)) s.syms[c] = SymKind::Coord;
        s.eliminations = {{"r1", "x1"}};
        s.old_coords = {"x1", "x2", "x3", "x4", "x5", "u1", "u2"};
        s.new_coords = coords("y", 6);
        s.lhs_word = {umat(4, {{1, 2, fv("x1")}, {1, 3, fv("x2")}, {1, 4, fv("x3")}, {2, 4, fv("x4")}, {3, 4, fv("x5")}}),
                      w, residual};
        s.gamma = w;
        s.rhs_template = n4("y");
        s.lhs_exponent = fv("r1") * fv("x1") + fv("q4") * fv("x2") + fv("q6") * fv("x5");
        s.rhs_exponent = fv("q4") * fv("y4") + fv("q6") * fv("y6");
        r.steps = {s};
        add(std::move(r));
    }

    {  // W_N(q1', 0, q6'): the next-to-minimal orbit (2^2)
        RewriteRule r;
        r.id = "dict.wn4.101";
        r.n = 4;
        r.input_kind = TermKind::WN4;
        r.input_pattern = {1, 0, 1};
        r.input_charges = {"q1", "q6"};
        FracMatrix w = fmat(4, {{-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
        FracMatrix residual = umat(4, {{1, 3, fv("u2")}, {2, 3, fv("u4")}, {2, 4, fv("u5")}});
        r.outputs = {term(4, TermKind::Forbit, Partition{2, 2},
                          {slot_expr(-fv("q1"), true), ChargeSlot::zero(), slot_sym("r1", false), slot_sym("q6", true)},
                          {w, residual}, {"r1"}, {}, {"u2", "u4", "u5"})};
        RewriteStep s;
        s.name = "eliminate-and-conjugate";
        s.syms = symbols({"x1", "x2", "x3", "x4", "u2", "u4", "u5"}, {"r1"}, {"q1", "q6"});
        for (const auto& c : coords("y", 6)) s.syms[c] = SymKind::Coord;
        s.eliminations = {{"r1", "x3"}};
        s.old_coords = {"x1", "x2", "x3", "x4", "u2", "u4", "u5"};
        s.new_coords = coords("y", 6);
        s.lhs_word = {umat(4, {{1, 3, fv("x1")}, {1, 4, fv("x2")}, {2, 3, fv("x3")}, {2, 4, fv("x4")}}), w, residual};
        s.gamma = w;
        s.rhs_template = n4("y");
        s.lhs_exponent = -fv("q1") * fv("x1") + fv("r1") * fv("x3") + fv("q6") * fv("x4");
        s.rhs_exponent = fv("q1") * fv("y1") + fv("q6") * fv("y6");
        r.steps = {s};
        add(std::move(r));
    }
}

// --- SL(4) Whittaker vectors on the derived group N' ---

inline void RuleRegistry::build_dictionary_wnp4() {
    using namespace ruledef;
    auto np = [&](const std::string& p) {
        return umat(4, {{1, 3, fv(p + "1")}, {1, 4, fv(p + "2")}, {2, 4, fv(p + "3")}});
    };

    {  // W_N'(q1', 0, 0)
        RewriteRule r;
        r.id = "dict.wnp4.100";
        r.n = 4;
        r.input_kind = TermKind::WNprime4;
        r.input_pattern = {1, 0, 0};
        r.input_charges = {"q1"};
        FracMatrix w = fmat(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
        FracMatrix residual = umat(4, {{1, 4, fv("u2")}, {2, 4, fv("u3")}});
        r.outputs = {term(4, TermKind::Forbit, Partition{2, 1, 1}, {slot_sym("q1", true)}, {w, residual}, {}, {},
                          {"u2", "u3"})};
        RewriteStep s;
        s.name = "conjugate";
        s.syms = symbols({"t", "u2", "u3", "y1", "y2", "y3"}, {}, {"q1"});
        s.old_coords = {"t", "u2", "u3"};
        s.new_coords = {"y1", "y2", "y3"};
        s.lhs_word = {umat(4, {{1, 4, fv("t")}}), w, residual};
        s.gamma = w;
        s.rhs_template = np("y");
        s.lhs_exponent = fv("q1") * fv("t");
        s.rhs_exponent = fv("q1") * fv("y1");
        r.steps = {s};
        add(std::move(r));
    }

    {  // W_N'(0, 0, q3')
        RewriteRule r;
        r.id = "dict.wnp4.001";
        r.n = 4;
        r.input_kind = TermKind::WNprime4;
        r.input_pattern = {0, 0, 1};
        r.input_charges = {"q3"};
        FracMatrix w = fmat(4, {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
        FracMatrix residual = umat(4, {{1, 3, fv("u1")}, {1, 4, fv("u2")}});
        r.outputs = {term(4, TermKind::Forbit, Partition{2, 1, 1}, {slot_sym("q3", true)}, {w, residual}, {}, {},
                          {"u1", "u2"})};
        RewriteStep s;
        s.name = "conjugate";
        s.syms = symbols({"t", "u1", "u2", "y1", "y2", "y3"}, {}, {"q3"});
        s.old_coords = {"t", "u1", "u2"};
        s.new_coords = {"y1", "y2", "y3"};
        s.lhs_word = {umat(4, {{1, 4, fv("t")}}), w, residual};
        s.gamma = w;
        s.rhs_template = np("y");
        s.lhs_exponent = fv("q3") * fv("t");
        s.rhs_exponent = fv("q3") * fv("y3");
        r.steps = {s};
        add(std::move(r));
    }

    {  // W_N'(q1', 0, q3'): partially summed (2^2) coefficient in disguise
        RewriteRule r;
        r.id = "dict.wnp4.101";
        r.n = 4;
        r.input_kind = TermKind::WNprime4;
        r.input_pattern = {1, 0, 1};
        r.input_charges = {"q1", "q3"};
        r.outputs = {term(4, TermKind::Forbit, Partition{2, 2},
                          {slot_sym("q1", true), ChargeSlot::zero(), slot_sym("r1", false), slot_sym("q3", true)}, {},
                          {"r1"}, {}, {})};
        RewriteStep s;
        s.name = "eliminate";
        s.syms = symbols({"x1", "x2", "x3", "x4", "y1", "y2", "y3"}, {"r1"}, {"q1", "q3"});
        s.eliminations = {{"r1", "x3"}};
        s.old_coords = {"x1", "x2", "x3", "x4"};
        s.new_coords = {"y1", "y2", "y3"};
        s.lhs_word = {umat(4, {{1, 3, fv("x1")}, {1, 4, fv("x2")}, {2, 3, fv("x3")}, {2, 4, fv("x4")}})};
        s.rhs_template = np("y");
        s.lhs_exponent = fv("q1") * fv("x1") + fv("r1") * fv("x3") + fv("q3") * fv("x4");
        s.rhs_exponent = fv("q1") * fv("y1") + fv("q3") * fv("y3");
        r.steps = {s};
        add(std::move(r));
    }

    {  // W_N'(q1, q2', q3) with arbitrary outer charges
        RewriteRule r;
        r.id = "dict.wnp4.x1x";
        r.n = 4;
        r.input_kind = TermKind::WNprime4;
        r.input_pattern = {2, 1, 2};
        r.input_charges = {"q1", "q2", "q3"};
        FracMatrix residual = umat(4, {{1, 3, fv("u1")}, {2, 4, fv("u3")}});
        FracMatrix levi = umat(4, {{1, 2, fv("q3") / fv("q2")}, {3, 4, -fv("q1") / fv("q2")}});
        r.outputs = {term(4, TermKind::Forbit, Partition{2, 1, 1}, {slot_sym("q2", true)}, {residual, levi}, {}, {},
                          {"u1", "u3"})};
        RewriteStep s;
        s.name = "conjugate";
        s.syms = symbols({"t", "u1", "u3", "y1", "y2", "y3"}, {"q1", "q3"}, {"q2"});
        s.old_coords = {"t", "u1", "u3"};
        s.new_coords = {"y1", "y2", "y3"};
        s.lhs_word = {umat(4, {{1, 4, fv("t")}}), residual, levi};
        s.gamma = levi;
        s.rhs_template = np("y");
        s.lhs_exponent = fv("q2") * fv("t");
        s.rhs_exponent = fv("q1") * fv("y1") + fv("q2") * fv("y2") + fv("q3") * fv("y3");
        r.steps = {s};
        add(std::move(r));
    }
}

// --- SL(3) dictionary ---

inline void RuleRegistry::build_sl3_rows() {
    using namespace ruledef;

    {  // generic: the regular orbit
        RewriteRule r;
        r.id = "sl3.dict.generic";
        r.n = 3;
        r.input_kind = TermKind::WN3;
        r.input_pattern = {1, 1};
        r.input_charges = {"q1", "q2"};
        r.outputs = {term(3, TermKind::Freg3, {}, {slot_sym("q1", true), slot_sym("q2", true)}, {}, {}, {}, {})};
        RewriteStep s;
        s.name = "identity";
        s.n = 3;
        s.gamma = FracMatrix::identity(3);
        s.syms = symbols({"x1", "x2", "x3", "y1", "y2", "y3"}, {}, {"q1", "q2"});
        s.old_coords = {"x1", "x2", "x3"};
        s.new_coords = {"y1", "y2", "y3"};
        s.lhs_word = {n3("x")};
        s.rhs_template = n3("y");
        s.lhs_exponent = fv("q1") * fv("x1") + fv("q2") * fv("x3");
        s.rhs_exponent = fv("q1") * fv("y1") + fv("q2") * fv("y3");
        r.steps = {s};
        add(std::move(r));
    }

    auto alpha_row = [&](const std::string& id, std::vector<int> pattern, const std::string& charge,
                         FracMatrix w, FracMatrix residual, std::set<std::string> integ,
                         const std::string& charged_coord) {
        RewriteRule r;
        r.id = id;
        r.n = 3;
        r.input_kind = TermKind::WN3;
        r.input_pattern = std::move(pattern);
        r.input_charges = {charge};
        r.outputs = {term(3, TermKind::Fmin3, {}, {slot_sym(charge, true)}, {w, residual}, {}, {}, integ)};
        RewriteStep s;
        s.name = "conjugate";
        s.n = 3;
        s.gamma = FracMatrix::identity(3);
        s.syms = symbols({"t", "y1", "y2", "y3"}, {}, {charge});
        for (const auto& c : integ) s.syms[c] = SymKind::Coord;
        s.old_coords = {"t"};
        for (const auto& c : integ) s.old_coords.push_back(c);
        s.new_coords = {"y1", "y2", "y3"};
        s.lhs_word = {umat(3, {{1, 3, fv("t")}}), w, residual};
        s.gamma = w;
        s.rhs_template = n3("y");
        s.lhs_exponent = fv(charge) * fv("t");
        s.rhs_exponent = fv(charge) * fv(charged_coord);
        r.steps = {s};
        add(std::move(r));
    };
    alpha_row("sl3.dict.alpha1", {1, 0}, "q1", fmat(3, {{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}),
              umat(3, {{1, 3, fv("u2")}, {2, 3, fv("u3")}}), {"u2", "u3"}, "y1");
    alpha_row("sl3.dict.alpha2", {0, 1}, "q2", fmat(3, {{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}}),
              umat(3, {{1, 2, fv("u1")}, {1, 3, fv("u2")}}), {"u1", "u2"}, "y3");
    // the same derivation backs the standalone statement connecting the
    // minimal orbit coefficient with the alpha_1 Whittaker vector
    alpha_row("sl3.fmin.alpha1", {1, 0}, "q1", fmat(3, {{-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}),
              umat(3, {{1, 3, fv("u2")}, {2, 3, fv("u3")}}), {"u2", "u3"}, "y1");

    {  // the non-abelian Whittaker vector is the minimal orbit coefficient
        RewriteRule r;
        r.id = "sl3.dict.nonabelian";
        r.n = 3;
        r.input_kind = TermKind::WZ3;
        r.input_pattern = {1};
        r.input_charges = {"q1"};
        r.outputs = {term(3, TermKind::Fmin3, {}, {slot_sym("q1", true)}, {}, {}, {}, {})};
        RewriteStep s;
        s.name = "identity";
        s.n = 3;
        s.gamma = FracMatrix::identity(3);
        s.syms = symbols({"t", "y1"}, {}, {"q1"});
        s.old_coords = {"t"};
        s.new_coords = {"y1"};
        s.lhs_word = {umat(3, {{1, 3, fv("t")}})};
        s.rhs_template = umat(3, {{1, 3, fv("y1")}});
        s.lhs_exponent = fv("q1") * fv("t");
        s.rhs_exponent = fv("q1") * fv("y1");
        r.steps = {s};
        add(std::move(r));
    }
}

// --- SL(3) minimal-orbit expansion and the parabolic coefficient chain ---

inline void RuleRegistry::build_sl3_expansions() {
    using namespace ruledef;

    {  // F_min(q1'; g) as regular coefficients plus degenerate Whittaker vectors
        RewriteRule r;
        r.id = "sl3.orbit_sum";
        r.n = 3;
        r.input_kind = TermKind::Fmin3;
        r.input_pattern = {1};
        r.input_charges = {"q1"};
        FracMatrix levi(3);
        levi.at(0, 0) = Frac(-1);
        levi.at(1, 2) = Frac(-1);
        levi.at(2, 1) = Frac(-1);
        levi.at(2, 2) = fv("r1") / fv("q1");
        r.outputs = {term(3, TermKind::Freg3, {}, {slot_sym("q1", true), slot_sym("r2", true)}, {levi}, {"r1"}, {"r2"}, {}),
                     term(3, TermKind::WN3, {}, {slot_sym("q1", true), ChargeSlot::zero()}, {levi}, {"r1"}, {}, {})};

        RewriteStep s1;
        s1.name = "expand-and-conjugate";
        s1.n = 3;
        s1.gamma = FracMatrix::identity(3);
        s1.syms = symbols({"x1", "x2", "y1", "y2"}, {"r1"}, {"q1"});
        s1.expansions = {{"r1", "x2"}};
        s1.old_coords = {"x1", "x2"};
        s1.new_coords = {"y1", "y2"};
        s1.lhs_word = {umat(3, {{1, 2, fv("x2")}, {1, 3, fv("x1")}})};
        s1.gamma = levi.inverse();
        s1.rhs_template = umat(3, {{1, 2, fv("y1")}, {1, 3, fv("y2")}});
        s1.rhs_fixed = {levi};
        s1.lhs_exponent = fv("q1") * fv("x1") + fv("r1") * fv("x2");
        s1.rhs_exponent = fv("q1") * fv("y1");

        RewriteStep s2;
        s2.name = "expand-lower-row";
        s2.n = 3;
        s2.gamma = FracMatrix::identity(3);
        s2.syms = symbols({"w1", "w2", "w3", "z1", "z2", "z3"}, {"r1", "r2"}, {"q1"});
        s2.expansions = {{"r2", "w3"}};
        s2.old_coords = {"w1", "w2", "w3"};
        s2.new_coords = {"z1", "z2", "z3"};
        s2.lhs_word = {n3("w"), levi};
        s2.rhs_template = umat(3, {{1, 2, fv("z1")}, {1, 3, fv("z2")}, {2, 3, fv("z3")}});
        s2.rhs_fixed = {levi};
        s2.lhs_exponent = fv("q1") * fv("w1") + fv("r2") * fv("w3");
        s2.rhs_exponent = fv("q1") * fv("z1") + fv("r2") * fv("z3");
        r.steps = {s1, s2};
        add(std::move(r));
    }

    {  // F_U(0, q1'; l_U g) as an integrated minimal-orbit coefficient
        RewriteRule r;
        r.id = "sl3.fu.canonical";
        r.n = 3;
        r.input_kind = TermKind::Fmin3;
        r.input_pattern = {1};
        r.input_charges = {"q1"};
        r.outputs = {term(3, TermKind::Fmin3, {}, {slot_sym("q1", true)}, {umat(3, {{1, 2, fv("u1")}})}, {}, {}, {"u1"})};
        RewriteStep s;
        s.name = "absorb-row-coordinate";
        s.n = 3;
        s.gamma = FracMatrix::identity(3);
        s.syms = symbols({"x", "u1", "y1", "y2"}, {}, {"q1"});
        s.old_coords = {"x", "u1"};
        s.new_coords = {"y1", "y2"};
        s.lhs_word = {umat(3, {{1, 3, fv("x")}}), umat(3, {{1, 2, fv("u1")}})};
        s.rhs_template = umat(3, {{1, 2, fv("y1")}, {1, 3, fv("y2")}});
        s.lhs_exponent = fv("q1") * fv("x");
        s.rhs_exponent = fv("q1") * fv("y2");
        r.steps = {s};
        add(std::move(r));
    }

    {  // the extra unipotent integration picks out the n = 0 translate
        RewriteRule r;
        r.id = "sl3.fu.whittaker";
        r.n = 3;
        r.input_kind = TermKind::WN3;
        r.input_pattern = {1, 0};
        r.input_charges = {"q1"};
        FracMatrix levi(3);
        levi.at(0, 0) = Frac(-1);
        levi.at(1, 2) = Frac(-1);
        levi.at(2, 1) = Frac(-1);
        levi.at(2, 2) = fv("r1");
        FracMatrix levi0(3);
        levi0.at(0, 0) = Frac(-1);
        levi0.at(1, 2) = Frac(-1);
        levi0.at(2, 1) = Frac(-1);
        r.outputs = {term(3, TermKind::WN3, {}, {slot_sym("q1", true), ChargeSlot::zero()}, {levi0}, {}, {}, {})};
        RewriteStep s;
        s.name = "collapse-translate-sum";
        s.n = 3;
        s.gamma = FracMatrix::identity(3);
        s.syms = symbols({"x1", "x2", "x3", "u1", "y1", "y2", "y3", "v"}, {"r1"}, {"q1"});
        s.old_coords = {"x1", "x2", "x3", "u1"};
        s.new_coords = {"y1", "y2", "y3", "v"};
        s.lhs_word = {n3("x"), levi, umat(3, {{1, 2, fv("u1")}})};
        s.rhs_template = n3("y");
        s.rhs_fixed = {levi};
        s.psi_extra = {{"v", fv("u1")}};
        s.lhs_exponent = fv("q1") * fv("x1");
        s.rhs_exponent = fv("q1") * fv("y1");
        s.collapses = {{"r1", "v", -fv("q1")}};
        r.steps = {s};
        add(std::move(r));
    }
}

}  // namespace nilorb

#include "nilorb/rules_sl4.hpp"
