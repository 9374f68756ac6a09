// Operation layer over the rule registry: rewriting Whittaker vectors as
// orbit coefficients, expanding orbit coefficients, wavefront filtering and
// the endpoint pipelines for the minimal and next-to-minimal representations.
#pragma once

#include "nilorb/classify.hpp"
#include "nilorb/rules.hpp"

namespace nilorb {

enum class ExpansionStrategy { Alpha1, Alpha2, Alpha3 };

namespace expdetail {

inline bool slot_matches(int pattern, const ChargeSlot& s) {
    if (pattern == 0) return s.is_zero();
    if (pattern == 1) return s.known_nonzero();
    return true;
}

}  // namespace expdetail

/// Instantiates a rule on a term: binds the rule's charge symbols to the slot
/// expressions, freshens the rule's bound symbols, and composes translates.
inline FormalExpansion apply_rule(const RewriteRule& rule, const FormalTerm& input) {
    if (input.n != rule.n || input.kind != rule.input_kind ||
        (rule.input_kind == TermKind::Forbit && !(input.orbit == rule.input_orbit)))
        throw std::domain_error("apply_rule: rule " + rule.id + " does not apply to this term");
    if (input.slots.size() != rule.input_pattern.size())
        throw std::domain_error("apply_rule: slot count mismatch for " + rule.id);
    for (std::size_t i = 0; i < input.slots.size(); ++i)
        if (!expdetail::slot_matches(rule.input_pattern[i], input.slots[i]))
            throw std::domain_error("apply_rule: slot pattern mismatch for " + rule.id);

    // bind charge symbols; when fewer names than slots, they attach to the
    // charged (non-zero-pattern) slots in order
    std::map<int, Frac> binding;
    if (rule.input_charges.size() == input.slots.size()) {
        for (std::size_t i = 0; i < input.slots.size(); ++i)
            binding.emplace(symtab::intern(rule.input_charges[i]), input.slots[i].expr);
    } else {
        std::size_t next = 0;
        for (std::size_t i = 0; i < input.slots.size() && next < rule.input_charges.size(); ++i) {
            if (rule.input_pattern[i] == 0) continue;
            binding.emplace(symtab::intern(rule.input_charges[next++]), input.slots[i].expr);
        }
        if (next != rule.input_charges.size())
            throw std::logic_error("apply_rule: charge binding failed for " + rule.id);
    }

    FormalExpansion out;
    for (const auto& s : input.slots)
        if (s.nonzero && !s.expr.is_constant())
            for (int v : s.expr.variables())
                if (!input.is_bound(symtab::name(v))) out.free_nonzero.insert(symtab::name(v));

    for (const auto& tmpl : rule.outputs) {
        std::map<int, Frac> sub = binding;
        std::map<std::string, std::string> fresh;
        for (const auto* set : {&tmpl.summed_free, &tmpl.summed_nonzero, &tmpl.integrated})
            for (const auto& name : *set) {
                fresh[name] = fresh_symbol();
                sub.emplace(symtab::intern(name), Frac::variable(fresh[name]));
            }

        FormalTerm t;
        t.n = tmpl.n;
        t.kind = tmpl.kind;
        t.orbit = tmpl.orbit;
        for (const auto& slot : tmpl.slots) t.slots.push_back({substitute(slot.expr, sub), slot.nonzero});
        for (const auto& m : tmpl.translate) t.translate.push_back(m.substituted(sub));
        for (const auto& m : input.translate) t.translate.push_back(m);
        for (const auto& name : tmpl.summed_free) t.summed_free.insert(fresh[name]);
        for (const auto& name : tmpl.summed_nonzero) t.summed_nonzero.insert(fresh[name]);
        for (const auto& name : tmpl.integrated) t.integrated.insert(fresh[name]);
        t.summed_free.insert(input.summed_free.begin(), input.summed_free.end());
        t.summed_nonzero.insert(input.summed_nonzero.begin(), input.summed_nonzero.end());
        t.integrated.insert(input.integrated.begin(), input.integrated.end());
        t.residual_integrations = static_cast<int>(t.integrated.size());
        t.validate();
        out.terms.push_back(std::move(t));
    }
    return out;
}

/// The matching dictionary row for a Whittaker term with a decided slot pattern.
inline const RewriteRule& dictionary_row(const FormalTerm& t) {
    auto decide = [](const ChargeSlot& s) -> int {
        if (s.is_zero()) return 0;
        if (s.known_nonzero()) return 1;
        throw std::domain_error("whittaker_to_orbit: slot pattern not fully specified");
    };
    const auto& reg = RuleRegistry::instance();
    if (t.kind == TermKind::WN4) {
        std::string id = "dict.wn4.";
        for (const auto& s : t.slots) id += std::to_string(decide(s));
        return reg.rule(id);
    }
    if (t.kind == TermKind::WNprime4) {
        if (t.slots[1].known_nonzero()) return reg.rule("dict.wnp4.x1x");
        std::string id = std::to_string(decide(t.slots[0])) + "0" + std::to_string(decide(t.slots[2]));
        if (id == "000") throw std::domain_error("whittaker_to_orbit: trivial character on N'");
        return reg.rule("dict.wnp4." + id);
    }
    if (t.kind == TermKind::WN3) {
        int a = decide(t.slots[0]), b = decide(t.slots[1]);
        if (a && b) return reg.rule("sl3.dict.generic");
        if (a) return reg.rule("sl3.dict.alpha1");
        if (b) return reg.rule("sl3.dict.alpha2");
        throw std::domain_error("whittaker_to_orbit: trivial character on N");
    }
    if (t.kind == TermKind::WZ3) return reg.rule("sl3.dict.nonabelian");
    throw std::domain_error("whittaker_to_orbit: not a Whittaker term");
}

/// Rewrites a Whittaker vector as (translated, partially integrated) orbit coefficients.
inline FormalExpansion whittaker_to_orbit(const FormalTerm& t) { return apply_rule(dictionary_row(t), t); }

/// Expands the minimal-orbit coefficient of SL(4) along the chosen simple root.
inline FormalExpansion expand_F212(const ChargeSlot& charge, ExpansionStrategy strategy) {
    FormalTerm input;
    input.n = 4;
    input.kind = TermKind::Forbit;
    input.orbit = Partition{2, 1, 1};
    input.slots = {charge};
    input.validate();
    const char* id = strategy == ExpansionStrategy::Alpha2   ? "expand.f211.alpha2"
                     : strategy == ExpansionStrategy::Alpha1 ? "expand.f211.alpha1"
                                                             : "expand.f211.alpha3";
    return apply_rule(RuleRegistry::instance().rule(id), input);
}

/// Brings a (2^2) coefficient to the partially summed form, swapping the two
/// charged rows first when the leading charge vanishes.
inline FormalExpansion partial_sum_form(const std::array<ChargeSlot, 4>& charges) {
    FormalTerm input;
    input.n = 4;
    input.kind = TermKind::Forbit;
    input.orbit = Partition{2, 2};
    input.slots = {charges[0], charges[1], charges[2], charges[3]};
    input.validate();
    if (!charges[0].known_nonzero()) {
        if (!charges[2].known_nonzero())
            throw std::domain_error("partial_sum_form: charges violate the orbit condition");
        // interchange reflection inside the Levi: charges (m1,m2,m3,m4) -> (-m3,-m4,m1,m2)
        FracMatrix w(4);
        w.at(0, 1) = Frac(-1);
        w.at(1, 0) = Frac(1);
        w.at(2, 2) = Frac(1);
        w.at(3, 3) = Frac(1);
        FormalTerm swapped = input;
        swapped.slots = {ChargeSlot{-charges[2].expr, charges[2].nonzero},
                         ChargeSlot{-charges[3].expr, charges[3].nonzero}, charges[0], charges[1]};
        swapped.translate.insert(swapped.translate.begin(), w);
        return apply_rule(RuleRegistry::instance().rule("expand.f22.partial_sum"), swapped);
    }
    return apply_rule(RuleRegistry::instance().rule("expand.f22.partial_sum"), input);
}

/// Expands the partially summed (2^2) coefficient.
inline FormalExpansion expand_F22_partial(const ChargeSlot& m1, const ChargeSlot& m6) {
    FormalTerm input;
    input.n = 4;
    input.kind = TermKind::FpartialSum22;
    input.slots = {m1, m6};
    input.validate();
    return apply_rule(RuleRegistry::instance().rule("expand.f22.orbits"), input);
}

namespace expdetail {

/// Recognizes the two-parameter Levi family in front of a (2^2) coefficient
/// produced by the minimal-orbit expansion and rewrites the term through the
/// partially summed form. The leading factor [[,1,,],[1,a,,],[,,,1],[,,1,b]]
/// splits as A(a) B(b) with only B surviving.
inline FormalTerm partial_sum_of_l22_family(const FormalTerm& t) {
    if (t.kind != TermKind::Forbit || !(t.orbit == Partition{2, 2}) || t.translate.empty())
        throw std::domain_error("partial_sum_of_l22_family: unexpected term");
    const FracMatrix& head = t.translate.front();
    auto entry_sym = [&](int i, int j) -> std::string {
        auto v = detail::single_variable(head.at(i, j));
        if (!v || !t.summed_free.count(*v)) throw std::domain_error("partial_sum_of_l22_family: not the Levi family");
        return *v;
    };
    FracMatrix expected(4);
    expected.at(0, 1) = Frac(1);
    expected.at(1, 0) = Frac(1);
    expected.at(2, 3) = Frac(1);
    expected.at(3, 2) = Frac(1);
    std::string a = entry_sym(1, 1), b = entry_sym(3, 3);
    expected.at(1, 1) = head.at(1, 1);
    expected.at(3, 3) = head.at(3, 3);
    if (!(head == expected)) throw std::domain_error("partial_sum_of_l22_family: not the Levi family");
    if (!t.slots[0].is_zero() || !t.slots[1].known_nonzero() || !t.slots[2].known_nonzero() || !t.slots[3].is_zero())
        throw std::domain_error("partial_sum_of_l22_family: unexpected charges");

    FormalTerm out;
    out.n = 4;
    out.kind = TermKind::FpartialSum22;
    out.slots = {ChargeSlot{-t.slots[2].expr, true}, t.slots[1]};
    FracMatrix b_factor(4);
    b_factor.at(0, 0) = Frac(-1);
    b_factor.at(1, 1) = Frac(1);
    b_factor.at(2, 3) = Frac(1);
    b_factor.at(3, 2) = Frac(1);
    b_factor.at(3, 3) = Frac::variable(b);
    out.translate.push_back(b_factor);
    out.translate.insert(out.translate.end(), t.translate.begin() + 1, t.translate.end());
    out.summed_free = t.summed_free;
    out.summed_free.erase(a);
    out.summed_nonzero = t.summed_nonzero;
    out.integrated = t.integrated;
    out.residual_integrations = t.residual_integrations;
    out.validate();
    return out;
}

inline bool is_endpoint_kind(TermKind k) {
    switch (k) {
        case TermKind::WN4:
        case TermKind::WNprime4:
        case TermKind::WN3:
        case TermKind::WZ3:
        case TermKind::ConstantTerm: return true;
        default: return false;
    }
}

}  // namespace expdetail

/// Drives an expansion down to Whittaker vectors and the constant term,
/// filtering against the wavefront of rep after every pass.
inline FormalExpansion expand_to_whittaker(FormalExpansion e, const Partition& rep,
                                           ExpansionStrategy strategy = ExpansionStrategy::Alpha2) {
    for (int round = 0; round < 8; ++round) {
        e = apply_representation_filter(e, rep);
        bool done = true;
        FormalExpansion next;
        next.free_nonzero = e.free_nonzero;
        for (const auto& t : e.terms) {
            if (expdetail::is_endpoint_kind(t.kind)) {
                next.terms.push_back(t);
                continue;
            }
            done = false;
            FormalExpansion piece;
            if (t.kind == TermKind::Forbit && t.orbit == Partition{2, 1, 1}) {
                const char* id = strategy == ExpansionStrategy::Alpha2   ? "expand.f211.alpha2"
                                 : strategy == ExpansionStrategy::Alpha1 ? "expand.f211.alpha1"
                                                                         : "expand.f211.alpha3";
                piece = apply_rule(RuleRegistry::instance().rule(id), t);
            } else if (t.kind == TermKind::Forbit && t.orbit == Partition{2, 2}) {
                piece.terms.push_back(expdetail::partial_sum_of_l22_family(t));
            } else if (t.kind == TermKind::FpartialSum22) {
                piece = apply_rule(RuleRegistry::instance().rule("expand.f22.orbits"), t);
            } else if (t.kind == TermKind::Fmin3) {
                piece = apply_rule(RuleRegistry::instance().rule("sl3.orbit_sum"), t);
            } else {
                throw std::domain_error("expand_to_whittaker: no registered expansion for " + kind_name(t.kind));
            }
            next.free_nonzero.insert(piece.free_nonzero.begin(), piece.free_nonzero.end());
            next.terms.insert(next.terms.end(), piece.terms.begin(), piece.terms.end());
        }
        if (done) return canonicalize(std::move(next));
        e = std::move(next);
    }
    throw std::logic_error("expand_to_whittaker: expansion did not terminate");
}

/// The full Fourier expansion grouped by nilpotent orbit, each group rewritten
/// through the Whittaker dictionary, then filtered against rep.
inline std::map<Partition, FormalExpansion> expand_eisenstein(int n, const std::optional<Partition>& rep) {
    if (n != 3 && n != 4) throw std::domain_error("expand_eisenstein: n must be 3 or 4");
    std::map<Partition, FormalExpansion> groups;

    auto convert = [&](TermKind kind, std::vector<ChargeSlot> slots, const std::set<std::string>& summed_nz,
                       const std::set<std::string>& summed_free) {
        FormalTerm w;
        w.n = n;
        w.kind = kind;
        w.slots = std::move(slots);
        w.validate();
        FormalExpansion conv = whittaker_to_orbit(w);
        for (auto& t : conv.terms) {
            t.summed_nonzero.insert(summed_nz.begin(), summed_nz.end());
            t.summed_free.insert(summed_free.begin(), summed_free.end());
            t.validate();
        }
        return conv;
    };
    auto append = [&](FormalExpansion& dst, const FormalExpansion& src) {
        dst.terms.insert(dst.terms.end(), src.terms.begin(), src.terms.end());
    };
    auto nz = [](const std::string& s) { return ChargeSlot::sym(s, true); };
    auto any = [](const std::string& s) { return ChargeSlot::sym(s, false); };
    auto zero = [] { return ChargeSlot::zero(); };

    if (n == 4) {
        FormalExpansion trivial;
        FormalTerm c;
        c.n = 4;
        c.kind = TermKind::ConstantTerm;
        trivial.terms.push_back(c);
        groups[Partition{1, 1, 1, 1}] = trivial;

        FormalExpansion min_group;
        append(min_group, convert(TermKind::WN4, {nz("m"), zero(), zero()}, {"m"}, {}));
        append(min_group, convert(TermKind::WN4, {zero(), nz("m"), zero()}, {"m"}, {}));
        append(min_group, convert(TermKind::WN4, {zero(), zero(), nz("m")}, {"m"}, {}));
        append(min_group, convert(TermKind::WNprime4, {nz("m"), zero(), zero()}, {"m"}, {}));
        append(min_group, convert(TermKind::WNprime4, {zero(), zero(), nz("m")}, {"m"}, {}));
        append(min_group, convert(TermKind::WNprime4, {any("n"), nz("m"), any("k")}, {"m"}, {"n", "k"}));
        groups[Partition{2, 1, 1}] = min_group;

        FormalExpansion ntm_group;
        append(ntm_group, convert(TermKind::WN4, {nz("m"), zero(), nz("n")}, {"m", "n"}, {}));
        append(ntm_group, convert(TermKind::WNprime4, {nz("m"), zero(), nz("n")}, {"m", "n"}, {}));
        groups[Partition{2, 2}] = ntm_group;

        FormalExpansion subreg_group;
        append(subreg_group, convert(TermKind::WN4, {nz("m"), nz("n"), zero()}, {"m", "n"}, {}));
        append(subreg_group, convert(TermKind::WN4, {zero(), nz("m"), nz("n")}, {"m", "n"}, {}));
        groups[Partition{3, 1}] = subreg_group;

        FormalExpansion reg_group;
        append(reg_group, convert(TermKind::WN4, {nz("m"), nz("n"), nz("k")}, {"m", "n", "k"}, {}));
        groups[Partition{4}] = reg_group;
    } else {
        FormalExpansion trivial;
        FormalTerm c;
        c.n = 3;
        c.kind = TermKind::ConstantTerm;
        trivial.terms.push_back(c);
        groups[Partition{1, 1, 1}] = trivial;

        FormalExpansion min_group;
        append(min_group, convert(TermKind::WN3, {nz("m"), zero()}, {"m"}, {}));
        append(min_group, convert(TermKind::WN3, {zero(), nz("m")}, {"m"}, {}));
        append(min_group, convert(TermKind::WZ3, {nz("k")}, {"k"}, {}));
        groups[Partition{2, 1}] = min_group;

        FormalExpansion reg_group;
        append(reg_group, convert(TermKind::WN3, {nz("m"), nz("n")}, {"m", "n"}, {}));
        groups[Partition{3}] = reg_group;
    }

    for (auto& [orbit, group] : groups) group = canonicalize(apply_representation_filter(group, rep));
    return groups;
}

/// The SL(3) parabolic coefficient F_U(m1, m2) in the minimal representation:
/// reduced to canonical charges, expressed through the minimal orbit
/// coefficient, and collapsed onto a single translated Whittaker vector.
inline FormalTerm sl3_fu_to_whittaker(const Rational& m1, const Rational& m2) {
    auto [canonical, l_u] = sl3_parabolic_reduce(m1, m2);
    const auto& reg = RuleRegistry::instance();

    // F_U(0, m'; l_U g) = int F_min(m'; U(u1) l_U g) du1
    FormalTerm fmin;
    fmin.n = 3;
    fmin.kind = TermKind::Fmin3;
    fmin.slots = {ChargeSlot::value(canonical)};
    fmin.validate();
    FormalExpansion lifted = apply_rule(reg.rule("sl3.fu.canonical"), fmin);
    FormalTerm& with_u = lifted.terms.at(0);
    with_u.translate.push_back(FracMatrix::from_rational(l_u));

    // minimal representation: only the degenerate Whittaker branch survives
    FormalExpansion expanded = apply_rule(reg.rule("sl3.orbit_sum"), with_u);
    FormalExpansion surviving = apply_representation_filter(expanded, Partition{2, 1});
    if (surviving.terms.size() != 1) throw std::logic_error("sl3_fu_to_whittaker: expected a single surviving term");

    // the u1 integration picks the n = 0 translate (sl3.fu.whittaker)
    const FormalTerm& collapsed_template = reg.rule("sl3.fu.whittaker").outputs.at(0);
    FormalTerm result;
    result.n = 3;
    result.kind = TermKind::WN3;
    result.slots = {ChargeSlot::value(canonical), ChargeSlot::zero()};
    result.translate = {collapsed_template.translate.at(0), FracMatrix::from_rational(l_u)};
    result.validate();
    return canonicalize_term(std::move(result));
}

}  // namespace nilorb
