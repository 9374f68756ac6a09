// Symbolic Whittaker vectors and orbit coefficients: terms with charge slots,
// unipotent/Levi translate words, summed charges and residual integrations,
// together with canonical forms (alpha equivalence) and wavefront filtering.
#pragma once

#include "nilorb/partition.hpp"
#include "nilorb/poly.hpp"

#include <json.hpp>

#include <atomic>
#include <optional>

namespace nilorb {

enum class TermKind { ConstantTerm, WN4, WNprime4, Forbit, FpartialSum22, WN3, WZ3, Fmin3, Freg3 };

inline std::string kind_name(TermKind k) {
    switch (k) {
        case TermKind::ConstantTerm: return "constant";
        case TermKind::WN4: return "W_N4";
        case TermKind::WNprime4: return "W_Np4";
        case TermKind::Forbit: return "F_orbit";
        case TermKind::FpartialSum22: return "F_part22";
        case TermKind::WN3: return "W_N3";
        case TermKind::WZ3: return "W_Z3";
        case TermKind::Fmin3: return "F_min3";
        default: return "F_reg3";
    }
}

struct ChargeSlot {
    Frac expr;
    bool nonzero = false;

    static ChargeSlot zero() { return {Frac(0), false}; }
    static ChargeSlot value(const Rational& q) { return {Frac(q), q != 0}; }
    static ChargeSlot sym(const std::string& name, bool nonzero) { return {Frac::variable(name), nonzero}; }

    bool is_zero() const { return expr.is_zero(); }
    bool known_nonzero() const { return (nonzero && !expr.is_zero()) || (expr.is_constant() && !expr.is_zero()); }
    bool operator==(const ChargeSlot&) const = default;
};

inline int slot_count(TermKind kind, const Partition& orbit) {
    switch (kind) {
        case TermKind::ConstantTerm: return 0;
        case TermKind::WN4:
        case TermKind::WNprime4: return 3;
        case TermKind::FpartialSum22:
        case TermKind::WN3:
        case TermKind::Freg3: return 2;
        case TermKind::WZ3:
        case TermKind::Fmin3: return 1;
        case TermKind::Forbit:
            if (orbit == Partition{4}) return 3;
            if (orbit == Partition{3, 1}) return 4;
            if (orbit == Partition{2, 2}) return 4;
            if (orbit == Partition{2, 1, 1}) return 1;
            if (orbit == Partition{1, 1, 1, 1}) return 0;
            throw std::domain_error("slot_count: unsupported orbit " + orbit.str());
    }
    return 0;
}

struct FormalTerm {
    int n = 4;
    TermKind kind = TermKind::ConstantTerm;
    Partition orbit;  // meaningful for Forbit
    std::vector<ChargeSlot> slots;
    std::vector<FracMatrix> translate;
    std::set<std::string> summed_free;
    std::set<std::string> summed_nonzero;
    std::set<std::string> integrated;
    int residual_integrations = 0;

    void validate() const {
        if (n != 3 && n != 4) throw std::domain_error("FormalTerm: n must be 3 or 4");
        if (static_cast<int>(slots.size()) != slot_count(kind, orbit))
            throw std::domain_error("FormalTerm: wrong slot count for " + kind_name(kind));
        if (residual_integrations != static_cast<int>(integrated.size()))
            throw std::domain_error("FormalTerm: residual integration count out of sync");
        for (const auto& m : translate) {
            if (m.size() != n) throw std::domain_error("FormalTerm: translate size mismatch");
            Frac det = m.determinant();
            if (!det.is_constant() || (det.constant_value() != 1 && det.constant_value() != -1))
                throw std::domain_error("FormalTerm: translate factor is not unimodular");
        }
        for (const auto& s : summed_free)
            if (summed_nonzero.count(s) || integrated.count(s))
                throw std::domain_error("FormalTerm: bound symbol classes overlap");
        for (const auto& s : summed_nonzero)
            if (integrated.count(s)) throw std::domain_error("FormalTerm: bound symbol classes overlap");
    }

    bool is_bound(const std::string& s) const {
        return summed_free.count(s) || summed_nonzero.count(s) || integrated.count(s);
    }
};

struct FormalExpansion {
    std::vector<FormalTerm> terms;
    std::set<std::string> free_nonzero;  // input charge symbols known to be non-zero
};

inline std::string fresh_symbol() {
    static std::atomic<unsigned> counter{0};
    return "%b" + std::to_string(counter.fetch_add(1));
}

/// Slot pattern classification of a Whittaker term; nullopt when a slot is symbolically undecided.
inline std::optional<Partition> orbit_of_whittaker_charges(TermKind kind, const std::vector<ChargeSlot>& slots, int n) {
    const int expected = (kind == TermKind::WN3 || kind == TermKind::WZ3) ? 3 : 4;
    if (n != expected) throw std::domain_error("orbit_of_whittaker_charges: rank does not match the term kind");
    auto decide = [](const ChargeSlot& s) -> std::optional<bool> {
        if (s.is_zero()) return false;
        if (s.known_nonzero()) return true;
        return std::nullopt;
    };
    if (kind == TermKind::WNprime4) {
        auto mid = decide(slots[1]);
        if (mid && *mid) return Partition{2, 1, 1};  // any character charged on the middle slot
        if (!mid) return std::nullopt;
        auto a = decide(slots[0]), c = decide(slots[2]);
        if (!a || !c) return std::nullopt;
        if (*a && *c) return Partition{2, 2};
        if (*a || *c) return Partition{2, 1, 1};
        return Partition{1, 1, 1, 1};
    }
    std::vector<bool> nz;
    for (const auto& s : slots) {
        auto d = decide(s);
        if (!d) return std::nullopt;
        nz.push_back(*d);
    }
    if (kind == TermKind::WN4) {
        int count = static_cast<int>(std::count(nz.begin(), nz.end(), true));
        if (count == 3) return Partition{4};
        if (count == 0) return Partition{1, 1, 1, 1};
        if (count == 1) return Partition{2, 1, 1};
        if (nz[0] && nz[2]) return Partition{2, 2};
        return Partition{3, 1};
    }
    if (kind == TermKind::WN3) {
        if (nz[0] && nz[1]) return Partition{3};
        if (nz[0] || nz[1]) return Partition{2, 1};
        return Partition{1, 1, 1};
    }
    throw std::domain_error("orbit_of_whittaker_charges: not a Whittaker kind");
}

/// Orbit the term is attached to; nullopt when it depends on undecided summed charges.
inline std::optional<Partition> term_orbit(const FormalTerm& t) {
    switch (t.kind) {
        case TermKind::ConstantTerm: return Partition(std::vector<int>(t.n, 1));
        case TermKind::Forbit: return t.orbit;
        case TermKind::FpartialSum22: return Partition{2, 2};
        case TermKind::WZ3:
        case TermKind::Fmin3: return Partition{2, 1};
        case TermKind::Freg3: return Partition{3};
        default: return orbit_of_whittaker_charges(t.kind, t.slots, t.n);
    }
}

namespace detail {

inline void rename_in_sets(FormalTerm& t, const std::string& from, const std::string& to) {
    for (auto* set : {&t.summed_free, &t.summed_nonzero, &t.integrated}) {
        if (set->erase(from)) set->insert(to);
    }
}

inline void substitute_everywhere(FormalTerm& t, const std::map<int, Frac>& sub) {
    for (auto& slot : t.slots) slot.expr = substitute(slot.expr, sub);
    for (auto& m : t.translate) m = m.substituted(sub);
}

/// Collect bound symbols in deterministic first-occurrence order:
/// slots first, then translate entries row-major.
inline std::vector<std::string> bound_occurrence_order(const FormalTerm& t) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    auto visit = [&](const Frac& f) {
        std::vector<std::string> names;
        for (int v : f.variables()) names.push_back(symtab::name(v));
        std::sort(names.begin(), names.end());
        for (const auto& name : names)
            if (t.is_bound(name) && seen.insert(name).second) order.push_back(name);
    };
    for (const auto& s : t.slots) visit(s.expr);
    for (const auto& m : t.translate)
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) visit(m.at(i, j));
    return order;
}

inline bool monomial_over(const Poly& p, const std::set<std::string>& nonzero_syms) {
    if (p.terms().size() != 1) return false;
    for (const auto& [v, e] : p.terms().begin()->first.factors)
        if (!nonzero_syms.count(symtab::name(v))) return false;
    return true;
}

}  // namespace detail

/// Canonical form: adjacent coordinate-free translate factors multiplied out,
/// summed symbols rescaled to unit leading coefficient where the summation
/// reindexing freedom allows it, and bound symbols renamed u1../s1../t1...
inline FormalTerm canonicalize_term(FormalTerm t, const std::set<std::string>& extra_nonzero = {}) {
    // 1. translate normalization
    std::vector<FracMatrix> word;
    auto has_integrated = [&](const FracMatrix& m) {
        for (const auto& s : t.integrated)
            if (m.contains(symtab::intern(s))) return true;
        return false;
    };
    for (const auto& factor : t.translate) {
        if (factor == FracMatrix::identity(t.n)) continue;
        if (!word.empty() && !has_integrated(word.back()) && !has_integrated(factor)) word.back() = word.back() * factor;
        else word.push_back(factor);
    }
    if (!word.empty() && word.back() == FracMatrix::identity(t.n)) word.pop_back();
    t.translate = std::move(word);

    // set of symbols that may appear in rescaling coefficients
    std::set<std::string> nonzero_syms = extra_nonzero;
    for (const auto& s : t.slots)
        if (s.nonzero && !s.expr.is_constant())
            for (int v : s.expr.variables())
                if (!t.is_bound(symtab::name(v))) nonzero_syms.insert(symtab::name(v));

    // 2. rescale summed symbols with a uniform monomial coefficient
    auto order = detail::bound_occurrence_order(t);
    for (const auto& name : order) {
        if (!t.summed_free.count(name) && !t.summed_nonzero.count(name)) continue;
        int id = symtab::intern(name);
        Frac sym = Frac::variable(name);
        std::optional<Frac> lead;
        bool linear = true;
        auto inspect = [&](const Frac& e) {
            if (!linear || !e.contains(id)) return;
            Frac coeff = e / sym;
            if (coeff.contains(id)) { linear = false; return; }
            for (int v : coeff.variables())
                if (t.is_bound(symtab::name(v))) { linear = false; return; }
            if (!coeff.is_constant() &&
                !(detail::monomial_over(coeff.num(), nonzero_syms) && detail::monomial_over(coeff.den(), nonzero_syms))) {
                linear = false;
                return;
            }
            if (!lead) lead = coeff;
        };
        for (const auto& s : t.slots) inspect(s.expr);
        for (const auto& m : t.translate)
            for (int i = 0; i < m.size() && linear; ++i)
                for (int j = 0; j < m.size() && linear; ++j) inspect(m.at(i, j));
        if (linear && lead && !(*lead == Frac(1))) {
            detail::substitute_everywhere(t, {{id, sym / *lead}});
        }
    }

    // 3. deterministic renaming of bound symbols
    order = detail::bound_occurrence_order(t);
    int iu = 0, is = 0, it = 0;
    std::map<std::string, std::string> target;
    for (const auto& name : order) {
        if (t.integrated.count(name)) target[name] = "u" + std::to_string(++iu);
        else if (t.summed_free.count(name)) target[name] = "s" + std::to_string(++is);
        else target[name] = "t" + std::to_string(++it);
    }
    // vanished sums keep a stable name at the end
    for (const auto* set : {&t.summed_free, &t.summed_nonzero, &t.integrated})
        for (const auto& name : *set)
            if (!target.count(name)) {
                if (t.integrated.count(name)) target[name] = "u" + std::to_string(++iu);
                else if (t.summed_free.count(name)) target[name] = "s" + std::to_string(++is);
                else target[name] = "t" + std::to_string(++it);
            }
    // two-phase rename through fresh intermediates
    std::map<int, Frac> phase1;
    std::map<std::string, std::string> mid;
    for (const auto& [from, to] : target) {
        std::string tmp = fresh_symbol();
        mid[tmp] = to;
        phase1.emplace(symtab::intern(from), Frac::variable(tmp));
        detail::rename_in_sets(t, from, tmp);
    }
    detail::substitute_everywhere(t, phase1);
    std::map<int, Frac> phase2;
    for (const auto& [tmp, to] : mid) {
        phase2.emplace(symtab::intern(tmp), Frac::variable(to));
        detail::rename_in_sets(t, tmp, to);
    }
    detail::substitute_everywhere(t, phase2);

    t.validate();
    return t;
}

inline std::string term_sort_key(const FormalTerm& t) {
    std::ostringstream os;
    os << kind_name(t.kind) << "|" << t.n << "|" << (t.kind == TermKind::Forbit ? t.orbit.str() : "") << "|";
    for (const auto& s : t.slots) os << s.expr.str() << (s.nonzero ? "'" : "") << ",";
    os << "|";
    for (const auto& m : t.translate) os << m.str() << "|";
    for (const auto& s : t.summed_free) os << "S" << s;
    for (const auto& s : t.summed_nonzero) os << "T" << s;
    os << "#" << t.residual_integrations;
    return os.str();
}

inline FormalExpansion canonicalize(FormalExpansion e) {
    for (auto& t : e.terms) t = canonicalize_term(std::move(t), e.free_nonzero);
    std::stable_sort(e.terms.begin(), e.terms.end(),
                     [](const FormalTerm& a, const FormalTerm& b) { return term_sort_key(a) < term_sort_key(b); });
    return e;
}

inline bool equivalent_terms(const FormalTerm& a, const FormalTerm& b) {
    if (a.n != b.n || a.kind != b.kind || a.slots.size() != b.slots.size() ||
        a.translate.size() != b.translate.size() || a.residual_integrations != b.residual_integrations ||
        a.summed_free.size() != b.summed_free.size() || a.summed_nonzero.size() != b.summed_nonzero.size())
        return false;
    if (a.kind == TermKind::Forbit && !(a.orbit == b.orbit)) return false;
    for (std::size_t i = 0; i < a.slots.size(); ++i)
        if (a.slots[i].expr != b.slots[i].expr || a.slots[i].nonzero != b.slots[i].nonzero) return false;
    for (std::size_t i = 0; i < a.translate.size(); ++i)
        if (!(a.translate[i] == b.translate[i])) return false;
    return true;
}

/// Alpha equivalence: equality of canonical forms, term by term.
inline bool equivalent(const FormalExpansion& a, const FormalExpansion& b) {
    FormalExpansion ca = canonicalize(a), cb = canonicalize(b);
    if (ca.terms.size() != cb.terms.size()) return false;
    for (std::size_t i = 0; i < ca.terms.size(); ++i)
        if (!equivalent_terms(ca.terms[i], cb.terms[i])) return false;
    return true;
}

/// Removes the terms whose orbit lies outside the closure of rep; summed
/// charges whose zero/nonzero status decides the orbit are split first.
/// rep = nullopt keeps everything (the generic representation).
inline FormalExpansion apply_representation_filter(const FormalExpansion& e, const std::optional<Partition>& rep) {
    if (!rep) return e;
    FormalExpansion out;
    out.free_nonzero = e.free_nonzero;
    std::vector<FormalTerm> queue = e.terms;
    while (!queue.empty()) {
        FormalTerm t = std::move(queue.back());
        queue.pop_back();
        auto orbit = term_orbit(t);
        if (orbit) {
            if (orbit->n() != rep->n())
                throw std::domain_error("apply_representation_filter: representation is for a different group");
            if (dominance_leq(*orbit, *rep)) out.terms.push_back(std::move(t));
            continue;
        }
        // split the first undecided summed slot symbol into zero / non-zero branches
        std::string split;
        for (const auto& s : t.slots) {
            if (s.is_zero() || s.known_nonzero()) continue;
            for (int v : s.expr.variables()) {
                std::string name = symtab::name(v);
                if (t.summed_free.count(name)) { split = name; break; }
            }
            if (!split.empty()) break;
        }
        if (split.empty())
            throw std::logic_error("apply_representation_filter: cannot decide the orbit of a term");
        int id = symtab::intern(split);

        FormalTerm zero_branch = t;
        zero_branch.summed_free.erase(split);
        detail::substitute_everywhere(zero_branch, {{id, Frac(0)}});
        queue.push_back(std::move(zero_branch));

        FormalTerm nz_branch = std::move(t);
        nz_branch.summed_free.erase(split);
        nz_branch.summed_nonzero.insert(split);
        for (auto& s : nz_branch.slots)
            if (!s.expr.is_zero() && s.expr.contains(id)) {
                Frac coeff = s.expr / Frac::variable(split);
                if (!coeff.contains(id)) s.nonzero = true;  // slot = coeff * split with split != 0
            }
        queue.push_back(std::move(nz_branch));
    }
    return canonicalize(std::move(out));
}

// --- serialization ---

inline nlohmann::ordered_json slot_to_json(const ChargeSlot& s) {
    return {{"charge", s.expr.str()}, {"nonzero", s.nonzero}};
}

inline nlohmann::ordered_json matrix_to_json(const FracMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::ordered_json term_to_json(const FormalTerm& t) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(t.kind);
    j["n"] = t.n;
    if (t.kind == TermKind::Forbit) j["orbit"] = t.orbit.str();
    j["slots"] = nlohmann::ordered_json::array();
    for (const auto& s : t.slots) j["slots"].push_back(slot_to_json(s));
    j["translate"] = nlohmann::ordered_json::array();
    for (const auto& m : t.translate) j["translate"].push_back(matrix_to_json(m));
    j["summed_free"] = t.summed_free;
    j["summed_nonzero"] = t.summed_nonzero;
    j["integrated"] = t.integrated;
    j["residual_integrations"] = t.residual_integrations;
    return j;
}

inline nlohmann::ordered_json expansion_to_json(const FormalExpansion& e) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : e.terms) j["terms"].push_back(term_to_json(t));
    return j;
}

inline std::string latex_kind(const FormalTerm& t) {
    switch (t.kind) {
        case TermKind::ConstantTerm: return "E_0";
        case TermKind::WN4:
        case TermKind::WN3: return "W_N";
        case TermKind::WNprime4: return "W_{N'}";
        case TermKind::Forbit: {
            std::string parts;
            for (std::size_t i = 0; i < t.orbit.parts().size(); ++i)
                parts += (i ? "," : "") + std::to_string(t.orbit.parts()[i]);
            return "F_{(" + parts + ")}";
        }
        case TermKind::FpartialSum22: return "F_{[2^2]}";
        case TermKind::WZ3: return "W_{\\psi_Z}";
        case TermKind::Fmin3: return "F_{\\mathcal{O}_{min}}";
        default: return "F_{\\mathcal{O}_{reg}}";
    }
}

inline std::string term_to_latex(const FormalTerm& t) {
    std::ostringstream os;
    for (const auto& s : t.summed_free) os << "\\sum_{" << s << " \\in \\mathbb{Q}} ";
    for (const auto& s : t.summed_nonzero) os << "\\sum_{" << s << " \\neq 0} ";
    if (t.residual_integrations > 0) os << "\\int ";
    os << latex_kind(t) << "(\\chi";
    for (const auto& s : t.slots) os << ", " << s.expr.str();
    os << "; ";
    for (const auto& m : t.translate) {
        os << "\\begin{psmallmatrix}";
        for (int i = 0; i < m.size(); ++i) {
            for (int j = 0; j < m.size(); ++j) {
                if (j) os << " & ";
                if (!m.at(i, j).is_zero()) os << m.at(i, j).str();
            }
            if (i + 1 < m.size()) os << " \\\\ ";
        }
        os << "\\end{psmallmatrix} ";
    }
    os << "g)";
    if (t.residual_integrations > 0) {
        os << " \\, d^{" << t.residual_integrations << "}u";
    }
    return os.str();
}

inline std::string expansion_to_latex(const FormalExpansion& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i) out += "\n + ";
        out += term_to_latex(e.terms[i]);
    }
    return out;
}

}  // namespace nilorb
