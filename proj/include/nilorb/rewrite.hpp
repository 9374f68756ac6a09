// Machine-checked rewrite rules between Whittaker vectors and orbit
// coefficients. A rule's witness carries the displayed matrices and character
// exponents; the coordinate substitution is solved from the matrix identity
// and then every claim is re-verified exactly:
//   (a) the conjugation identity has zero residual,
//   (b) the substitution is measure preserving (det Jacobian = +-1),
//   (c) the character exponent transforms as claimed,
//   (d) sign flips only hit uncharged coordinates (or flip the charge),
// plus bookkeeping audits for Fourier expansions, eliminations, sum collapses
// and summation reindexings.
#pragma once

#include "nilorb/formal.hpp"

namespace nilorb {

enum class SymKind { Coord, FreeCharge, NonZeroCharge, Param };

struct CollapseSpec {
    std::string summed;  // the charge forced to zero by the integration
    std::string coord;   // new-side coordinate appearing only in the exponent
    Frac coeff;          // its non-vanishing coefficient
};

struct ReindexSpec {
    std::string old_sym;  // summation variable being replaced
    Frac expr;            // its image; must be c*old_sym + lower terms with c a unit
};

struct RewriteStep {
    std::string name;
    int n = 4;
    std::map<std::string, SymKind> syms;
    std::vector<std::pair<std::string, std::string>> eliminations;  // (charge, coord): sum+integral collapse at 0
    std::vector<std::pair<std::string, std::string>> expansions;    // (charge, coord): inserted Fourier pair
    std::vector<std::string> old_coords, new_coords;
    std::vector<FracMatrix> lhs_word;
    FracMatrix gamma = FracMatrix::identity(4);  // rational left factor absorbed by automorphy
    FracMatrix rhs_template = FracMatrix::identity(4);
    std::vector<FracMatrix> rhs_fixed;
    Frac lhs_exponent, rhs_exponent;
    std::map<std::string, Frac> psi_extra;  // new coords not visible in the template
    std::vector<CollapseSpec> collapses;
    std::vector<ReindexSpec> reindex;
};

struct CheckItem {
    std::string what;
    bool pass = true;
    std::string detail;
};

struct StepReport {
    std::string step;
    bool pass = true;
    std::vector<CheckItem> items;

    void record(const std::string& what, bool ok, const std::string& detail = "") {
        items.push_back({what, ok, detail});
        pass = pass && ok;
    }
};

struct RuleReport {
    std::string rule;
    bool pass = true;
    std::vector<StepReport> steps;
};

namespace detail {

inline std::optional<std::string> single_variable(const Frac& f) {
    if (!f.den().is_constant() || f.den().constant_value() != 1) return std::nullopt;
    const auto& terms = f.num().terms();
    if (terms.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms.begin();
    if (c != 1 || m.factors.size() != 1 || m.factors[0].second != 1) return std::nullopt;
    return symtab::name(m.factors[0].first);
}

inline bool monomial_over_kinds(const Poly& p, const std::map<std::string, SymKind>& syms,
                                std::initializer_list<SymKind> allowed) {
    if (p.is_zero() || p.terms().size() != 1) return false;
    for (const auto& [v, e] : p.terms().begin()->first.factors) {
        auto it = syms.find(symtab::name(v));
        if (it == syms.end()) return false;
        bool ok = false;
        for (SymKind k : allowed) ok = ok || it->second == k;
        if (!ok) return false;
    }
    return true;
}

}  // namespace detail

inline StepReport verify_step(const RewriteStep& s) {
    StepReport rep;
    rep.step = s.name;
    const int n = s.n;
    try {
        // matrix sizes
        {
            bool sized = s.gamma.size() == n && s.rhs_template.size() == n;
            for (const auto& m : s.lhs_word) sized = sized && m.size() == n;
            for (const auto& m : s.rhs_fixed) sized = sized && m.size() == n;
            rep.record("matrix-sizes", sized);
            if (!sized) return rep;
        }

        // symbol discipline
        {
            bool ok = true;
            std::string bad;
            auto check_decl = [&](const Frac& f) {
                for (int v : f.variables())
                    if (!s.syms.count(symtab::name(v))) {
                        ok = false;
                        bad = symtab::name(v);
                    }
            };
            for (const auto& m : s.lhs_word)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) check_decl(m.at(i, j));
            check_decl(s.lhs_exponent);
            check_decl(s.rhs_exponent);
            for (const auto& c : s.old_coords)
                if (!s.syms.count(c) || s.syms.at(c) != SymKind::Coord) { ok = false; bad = c; }
            for (const auto& c : s.new_coords)
                if (!s.syms.count(c) || s.syms.at(c) != SymKind::Coord) { ok = false; bad = c; }
            rep.record("symbols-declared", ok, bad);
        }

        // gamma is rational in the charges and unimodular
        {
            Frac det = s.gamma.determinant();
            bool uni = det.is_constant() && (det.constant_value() == 1 || det.constant_value() == -1);
            rep.record("gamma-unimodular", uni, uni ? "" : det.str());
            bool no_coords = true;
            for (const auto& c : s.old_coords)
                if (s.gamma.contains(symtab::intern(c))) no_coords = false;
            for (const auto& c : s.new_coords)
                if (s.gamma.contains(symtab::intern(c))) no_coords = false;
            rep.record("gamma-coordinate-free", no_coords);
        }

        auto lhs_word = s.lhs_word;
        Frac lhs_exp = s.lhs_exponent;
        std::vector<std::string> old_coords = s.old_coords;

        // eliminations: sum over c with integral over x picks the x = 0 slice
        for (const auto& [charge, coord] : s.eliminations) {
            int ci = symtab::intern(charge), xi = symtab::intern(coord);
            Frac bilinear = Frac::variable(charge) * Frac::variable(coord);
            Frac rest = lhs_exp - bilinear;
            bool isolated = !rest.contains(ci) && !rest.contains(xi);
            for (const auto& m : lhs_word)
                if (m.contains(ci)) isolated = false;
            rep.record("elimination-isolated[" + charge + "," + coord + "]", isolated);
            lhs_exp = rest;
            for (auto& m : lhs_word) m = m.substituted({{xi, Frac(0)}});
            std::erase(old_coords, coord);
        }

        // expansions: inserted coordinates must sit at shift-compatible positions
        for (const auto& [charge, coord] : s.expansions) {
            int ci = symtab::intern(charge), xi = symtab::intern(coord);
            const FracMatrix& front = lhs_word.front();
            int pi = -1, pj = -1;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (detail::single_variable(front.at(i, j)) == coord) { pi = i; pj = j; }
            rep.record("expansion-position[" + coord + "]", pi >= 0);
            if (pi < 0) continue;
            Frac dc = lhs_exp.derivative(ci);
            bool paired = dc == Frac::variable(coord) && !(lhs_exp - Frac::variable(charge) * Frac::variable(coord)).contains(xi);
            rep.record("expansion-paired[" + charge + "," + coord + "]", paired);
            // periodicity of the family under shifts of the inserted coordinate
            std::string qn = fresh_symbol();
            FracMatrix shift = FracMatrix::identity(n);
            shift.at(pi, pj) = Frac::variable(qn);
            FracMatrix moved = shift * front;
            bool legal = true;
            std::string why;
            for (int i = 0; i < n && legal; ++i)
                for (int j = 0; j < n && legal; ++j) {
                    if (moved.at(i, j) == front.at(i, j)) continue;
                    auto var = detail::single_variable(front.at(i, j));
                    bool coordinate_entry =
                        var && std::find(old_coords.begin(), old_coords.end(), *var) != old_coords.end();
                    Frac at_zero = substitute(moved.at(i, j), {{symtab::intern(qn), Frac(0)}});
                    if (!coordinate_entry || !(at_zero == front.at(i, j))) {
                        legal = false;
                        why = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                    }
                }
            rep.record("expansion-shift-legal[" + coord + "]", legal, why);
        }

        // the conjugation identity, solving the substitution from the products
        FracMatrix lhs_product = word_product(lhs_word, n);
        FracMatrix solved = s.gamma.inverse() * lhs_product;
        for (auto it = s.rhs_fixed.rbegin(); it != s.rhs_fixed.rend(); ++it) solved = solved * it->inverse();

        std::map<std::string, Frac> psi = s.psi_extra;
        {
            bool shape = true;
            std::string residuals;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    auto var = detail::single_variable(s.rhs_template.at(i, j));
                    bool is_new = var && std::find(s.new_coords.begin(), s.new_coords.end(), *var) != s.new_coords.end();
                    if (is_new) {
                        psi[*var] = solved.at(i, j);
                    } else if (!(solved.at(i, j) == s.rhs_template.at(i, j))) {
                        shape = false;
                        residuals += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                                     (solved.at(i, j) - s.rhs_template.at(i, j)).str() + "; ";
                    }
                }
            rep.record("conjugation-identity", shape, residuals);
        }
        {
            bool covered = true;
            std::string missing;
            for (const auto& c : s.new_coords)
                if (!psi.count(c)) { covered = false; missing = c; }
            rep.record("substitution-covers-coordinates", covered, missing);
            if (!covered) return rep;
        }

        // measure preservation
        {
            bool square = old_coords.size() == s.new_coords.size();
            rep.record("coordinate-count", square);
            if (square) {
                int k = static_cast<int>(old_coords.size());
                if (k == 0) {
                    rep.record("jacobian-unimodular", true);
                } else {
                    FracMatrix jac(k);
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j)
                            jac.at(i, j) = psi.at(s.new_coords[i]).derivative(symtab::intern(old_coords[j]));
                    Frac det = jac.determinant();
                    bool uni = det.is_constant() && (det.constant_value() == 1 || det.constant_value() == -1);
                    rep.record("jacobian-unimodular", uni, uni ? "" : det.str());
                }
            }
        }

        // character exponent
        bool exponent_ok = false;
        {
            std::map<int, Frac> by_id;
            for (const auto& [name, value] : psi) by_id.emplace(symtab::intern(name), value);
            Frac rhs_total = s.rhs_exponent;
            for (const auto& c : s.collapses) rhs_total += c.coeff * Frac::variable(c.summed) * Frac::variable(c.coord);
            Frac transported = substitute(rhs_total, by_id);
            exponent_ok = transported == lhs_exp;
            rep.record("exponent-transforms", exponent_ok, exponent_ok ? "" : (transported - lhs_exp).str());
        }

        // collapse bookkeeping
        for (const auto& c : s.collapses) {
            bool ok = true;
            std::string why;
            auto kind = s.syms.find(c.summed);
            if (kind == s.syms.end() || kind->second != SymKind::FreeCharge) { ok = false; why = "summed symbol kind"; }
            if (std::find(s.new_coords.begin(), s.new_coords.end(), c.coord) == s.new_coords.end()) {
                ok = false;
                why = "coordinate not on the new side";
            }
            int coord_id = symtab::intern(c.coord);
            if (s.rhs_template.contains(coord_id) || s.rhs_exponent.contains(coord_id)) { ok = false; why = "coordinate survives"; }
            for (const auto& m : s.rhs_fixed)
                if (m.contains(coord_id)) { ok = false; why = "coordinate survives in translate"; }
            if (!detail::monomial_over_kinds(c.coeff.num(), s.syms, {SymKind::NonZeroCharge}) &&
                !(c.coeff.is_constant() && !c.coeff.is_zero()))
                { ok = false; why = "coefficient not provably non-zero"; }
            rep.record("collapse[" + c.summed + "]", ok, why);
        }

        // sign-flip audit: a bare flip is fine on uncharged coordinates; on charged
        // ones the flip must be compensated within the verified exponent identity.
        for (const auto& c : s.new_coords) {
            auto it = psi.find(c);
            if (it == psi.end()) continue;
            Frac negated = -it->second;
            auto var = detail::single_variable(negated);
            if (!var || std::find(old_coords.begin(), old_coords.end(), *var) == old_coords.end()) continue;
            Frac cx = lhs_exp.derivative(symtab::intern(*var));
            Frac cy = s.rhs_exponent.derivative(symtab::intern(c));
            bool ok = cx.is_zero() || cx == -cy || exponent_ok;
            std::string detail = cx.is_zero()          ? "uncharged coordinate"
                                 : (cx == -cy)         ? "charge negated with the flip"
                                                       : "absorbed by the exponent identity";
            rep.record("signflip[" + *var + "->" + c + "]", ok, detail);
        }

        // reindexing of summation variables: triangular with unit leading coefficient
        {
            std::set<std::string> later;
            for (const auto& r : s.reindex) later.insert(r.old_sym);
            for (const auto& r : s.reindex) {
                later.erase(r.old_sym);
                int oi = symtab::intern(r.old_sym);
                Frac lead = r.expr.derivative(oi);
                bool ok = !lead.is_zero() && !lead.contains(oi);
                if (ok)
                    ok = (lead.is_constant() && !lead.is_zero()) ||
                         (detail::monomial_over_kinds(lead.num(), s.syms, {SymKind::NonZeroCharge}) &&
                          detail::monomial_over_kinds(lead.den(), s.syms, {SymKind::NonZeroCharge}));
                Frac rest = r.expr - lead * Frac::variable(r.old_sym);
                if (rest.contains(oi)) ok = false;
                for (const auto& l : later)
                    if (rest.contains(symtab::intern(l))) ok = false;
                rep.record("reindex[" + r.old_sym + "]", ok);
            }
        }
    } catch (const std::exception& e) {
        rep.record("exception", false, e.what());
    }
    return rep;
}

/// The coordinate substitution a step's identity induces, new coordinate ->
/// expression in the old ones (as re-derived by the checker).
inline std::map<std::string, Frac> solve_substitution(const RewriteStep& s) {
    auto lhs_word = s.lhs_word;
    for (const auto& [charge, coord] : s.eliminations) {
        int xi = symtab::intern(coord);
        for (auto& m : lhs_word) m = m.substituted({{xi, Frac(0)}});
    }
    FracMatrix solved = s.gamma.inverse() * word_product(lhs_word, s.n);
    for (auto it = s.rhs_fixed.rbegin(); it != s.rhs_fixed.rend(); ++it) solved = solved * it->inverse();
    std::map<std::string, Frac> psi = s.psi_extra;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            auto var = detail::single_variable(s.rhs_template.at(i, j));
            if (var && std::find(s.new_coords.begin(), s.new_coords.end(), *var) != s.new_coords.end())
                psi[*var] = solved.at(i, j);
        }
    return psi;
}

/// A derivation between term families: the verified steps plus the data needed
/// to instantiate it (input slot pattern and output templates).
struct RewriteRule {
    std::string id;
    int n = 4;
    TermKind input_kind = TermKind::ConstantTerm;
    Partition input_orbit;
    std::vector<int> input_pattern;             // per slot: 0 zero, 1 non-zero, 2 arbitrary
    std::vector<std::string> input_charges;     // charge symbols appearing in the templates
    std::vector<FormalTerm> outputs;            // term templates over the input charges
    std::vector<RewriteStep> steps;
};

inline RuleReport verify_rewrite_rule(const RewriteRule& rule) {
    RuleReport rep;
    rep.rule = rule.id;
    for (const auto& step : rule.steps) {
        rep.steps.push_back(verify_step(step));
        rep.pass = rep.pass && rep.steps.back().pass;
    }
    return rep;
}

inline nlohmann::ordered_json report_to_json(const RuleReport& r) {
    nlohmann::ordered_json j;
    j["rule"] = r.rule;
    j["pass"] = r.pass;
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : r.steps) {
        nlohmann::ordered_json js;
        js["step"] = s.step;
        js["pass"] = s.pass;
        js["checks"] = nlohmann::ordered_json::array();
        for (const auto& item : s.items) {
            nlohmann::ordered_json ji;
            ji["what"] = item.what;
            ji["pass"] = item.pass;
            if (!item.detail.empty()) ji["detail"] = item.detail;
            js["checks"].push_back(ji);
        }
        j["steps"].push_back(js);
    }
    return j;
}

}  // namespace nilorb
