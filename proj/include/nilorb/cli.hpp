// Command-line front end: orbit catalogs, nilpotent and character
// classification, symbolic expansions with wavefront filters, rewrite-rule
// verification sweeps, spherical vectors and the Euler-product checks.
#pragma once

#include "nilorb/expand.hpp"
#include "nilorb/spherical.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <random>
#include <thread>

namespace nilorb {

namespace clidetail {

inline nlohmann::ordered_json rational_matrix_to_json(const RationalMatrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(format_rational(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::ordered_json orbit_record_to_json(const OrbitRecord& rec) {
    nlohmann::ordered_json j;
    j["partition"] = rec.partition.parts();
    j["bala_carter"] = rec.bala_carter;
    j["dimension"] = rec.dimension;
    j["dynkin_weights"] = rec.dynkin_weights;
    j["stabilizer_type"] = rec.stabilizer_type;
    nlohmann::ordered_json mask = nlohmann::ordered_json::array();
    for (const auto& [i, k] : rec.v_mask) mask.push_back(nlohmann::ordered_json::array({i, k}));
    j["v_mask"] = mask;
    return j;
}

inline std::vector<Rational> parse_charges(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(parse_rational(cell));
    return out;
}

inline ExceptionalGroup parse_group(const std::string& s) {
    if (s == "e6" || s == "E6") return ExceptionalGroup::E6;
    if (s == "e7" || s == "E7") return ExceptionalGroup::E7;
    if (s == "e8" || s == "E8") return ExceptionalGroup::E8;
    throw std::domain_error("unknown group '" + s + "' (expected e6, e7 or e8)");
}

inline Realization parse_realization(const std::string& s) {
    if (s == "abelian") return Realization::Abelian;
    if (s == "heisenberg") return Realization::Heisenberg;
    throw std::domain_error("unknown realization '" + s + "' (expected abelian or heisenberg)");
}

inline nlohmann::ordered_json classification_to_json(const ClassificationResult& res) {
    nlohmann::ordered_json j;
    j["orbit"] = res.orbit.str();
    j["conjugator"] = rational_matrix_to_json(res.conjugator);
    nlohmann::ordered_json charges;
    for (const auto& [pos, value] : res.canonical_charges.charges)
        charges["(" + std::to_string(pos.first) + "," + std::to_string(pos.second) + ")"] = format_rational(value);
    j["canonical_charges"] = charges;
    j["weyl_prefix"] = rational_matrix_to_json(res.weyl_prefix);
    return j;
}

inline CharacterMatrix character_on_alpha(int alpha, const std::vector<Rational>& charges) {
    auto desc = ParabolicDescriptor::maximal(4, alpha);
    std::map<Position, Rational> map;
    if (alpha == 1) {
        if (charges.size() != 3) throw std::domain_error("alpha1 expects charges m1,m2,m3");
        map = {{{1, 2}, charges[0]}, {{1, 3}, charges[1]}, {{1, 4}, charges[2]}};
    } else if (alpha == 2) {
        if (charges.size() != 4) throw std::domain_error("alpha2 expects charges m1,m2,m3,m4");
        map = {{{1, 3}, charges[0]}, {{1, 4}, charges[1]}, {{2, 3}, charges[2]}, {{2, 4}, charges[3]}};
    } else {
        if (charges.size() != 3) throw std::domain_error("alpha3 expects charges m1,m2,m3");
        map = {{{3, 4}, charges[0]}, {{2, 4}, charges[1]}, {{1, 4}, charges[2]}};
    }
    return CharacterMatrix(desc, std::move(map));
}

}  // namespace clidetail

/// Runs the command line; returns 0 on success, 1 when a verification sweep
/// failed, 2 on usage or domain errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nilpotent-orbit Fourier machinery for SL(3)/SL(4) and minimal spherical vectors"};
    app.require_subcommand(1);

    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "latex", "text"}));
    app.add_option("--seed", seed, "seed for randomized sweeps");

    int orbits_n = 4;
    auto* orbits_cmd = app.add_subcommand("orbits", "print the nilpotent orbit catalog")->fallthrough();
    orbits_cmd->add_option("--n", orbits_n, "rank (3 or 4)")->required();

    int cn_n = 4;
    std::string cn_matrix;
    auto* cn_cmd = app.add_subcommand("classify-nilpotent", "Jordan type of a nilpotent rational matrix")->fallthrough();
    cn_cmd->add_option("--n", cn_n, "matrix size")->required();
    cn_cmd->add_option("--matrix", cn_matrix, "row-major entries, e.g. 0,1;0,0")->required();

    std::string cc_alpha, cc_group, cc_charges;
    auto* cc_cmd = app.add_subcommand("classify-character", "orbit attachment of a parabolic character")->fallthrough();
    cc_cmd->add_option("--alpha", cc_alpha, "maximal parabolic of SL(4): alpha1, alpha2 or alpha3");
    cc_cmd->add_option("--group", cc_group, "sl3 for the two-charge reduction");
    cc_cmd->add_option("--charges", cc_charges, "comma-separated rational charges")->required();

    int ex_n = 4;
    std::string ex_coeff = "F212", ex_rep = "generic", ex_strategy = "alpha2";
    auto* ex_cmd = app.add_subcommand("expand", "expand an orbit coefficient")->fallthrough();
    ex_cmd->add_option("--n", ex_n, "rank (3 or 4)")->required();
    ex_cmd->add_option("--coefficient", ex_coeff, "F212, F22 or Fmin3")->required();
    ex_cmd->add_option("--rep", ex_rep, "generic, min or ntm");
    ex_cmd->add_option("--strategy", ex_strategy, "alpha1, alpha2 or alpha3")
        ->check(CLI::IsMember({"alpha1", "alpha2", "alpha3"}));

    int vr_n = 4;
    auto* vr_cmd = app.add_subcommand("verify-rules", "check every registered rewrite rule")->fallthrough();
    vr_cmd->add_option("--n", vr_n, "rank (3 or 4)")->required();

    std::string sp_group, sp_realization, sp_place, sp_charge;
    auto* sp_cmd = app.add_subcommand("spherical", "evaluate a local spherical vector")->fallthrough();
    sp_cmd->add_option("--group", sp_group)->required();
    sp_cmd->add_option("--realization", sp_realization)->required();
    sp_cmd->add_option("--place", sp_place, "a prime or inf")->required();
    sp_cmd->add_option("--charge", sp_charge)->required();

    std::string vp_group, vp_realization;
    std::uint64_t vp_mmax = 100;
    auto* vp_cmd = app.add_subcommand("verify-prop", "exact Euler factorization sweep")->fallthrough();
    vp_cmd->add_option("--group", vp_group)->required();
    vp_cmd->add_option("--realization", vp_realization)->required();
    vp_cmd->add_option("--mmax", vp_mmax);

    unsigned eu_s = 2;
    std::uint64_t eu_m = 0, eu_mmax = 0;
    auto* eu_cmd = app.add_subcommand("euler", "divisor sum versus its Euler product")->fallthrough();
    eu_cmd->add_option("--s", eu_s)->required();
    eu_cmd->add_option("--m", eu_m);
    eu_cmd->add_option("--mmax", eu_mmax);

    try {
        std::vector<const char*> argv;
        argv.push_back("nilorb");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; };

    try {
        if (orbits_cmd->parsed()) {
            auto catalog = orbit_catalog(orbits_n);
            if (format == "json") {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& rec : catalog) j.push_back(clidetail::orbit_record_to_json(rec));
                emit(j);
            } else if (format == "latex") {
                out << "\\begin{array}{lcccc}\n";
                out << "\\text{Orbit} & \\text{Diagram} & \\dim & C \\\\\n";
                for (const auto& rec : catalog) {
                    out << rec.partition.str() << " = " << rec.bala_carter << " & [";
                    for (std::size_t i = 0; i < rec.dynkin_weights.size(); ++i)
                        out << (i ? "," : "") << rec.dynkin_weights[i];
                    out << "] & " << rec.dimension << " & " << rec.stabilizer_type << " \\\\\n";
                }
                out << "\\end{array}\n";
            } else {
                for (const auto& rec : catalog) {
                    out << rec.partition.str() << " bala_carter=" << rec.bala_carter << " dim=" << rec.dimension
                        << " diagram=[";
                    for (std::size_t i = 0; i < rec.dynkin_weights.size(); ++i)
                        out << (i ? "," : "") << rec.dynkin_weights[i];
                    out << "] stabilizer=" << rec.stabilizer_type << "\n";
                }
            }
            return 0;
        }

        if (cn_cmd->parsed()) {
            RationalMatrix m = parse_matrix(cn_matrix, cn_n);
            Partition type = jordan_type(m);
            nlohmann::ordered_json j;
            j["partition"] = type.str();
            j["dimension"] = orbit_dimension(type);
            j["dynkin_weights"] = weighted_dynkin(type);
            emit(j);
            return 0;
        }

        if (cc_cmd->parsed()) {
            auto charges = clidetail::parse_charges(cc_charges);
            if (cc_group == "sl3") {
                if (charges.size() != 2) throw std::domain_error("sl3 expects charges m1,m2");
                auto [canonical, levi] = sl3_parabolic_reduce(charges[0], charges[1]);
                RationalMatrix embedded(3);
                embedded.at(0, 1) = charges[0];
                embedded.at(0, 2) = charges[1];
                nlohmann::ordered_json j;
                j["orbit"] = jordan_type(embedded).str();
                j["canonical_charge"] = format_rational(canonical);
                j["conjugator"] = clidetail::rational_matrix_to_json(levi);
                emit(j);
                return 0;
            }
            int alpha = cc_alpha == "alpha1" ? 1 : cc_alpha == "alpha2" ? 2 : cc_alpha == "alpha3" ? 3 : 0;
            if (alpha == 0) throw std::domain_error("--alpha must be alpha1, alpha2 or alpha3 (or pass --group sl3)");
            auto result = classify_maximal_parabolic(alpha, clidetail::character_on_alpha(alpha, charges));
            emit(clidetail::classification_to_json(result));
            return 0;
        }

        if (ex_cmd->parsed()) {
            std::optional<Partition> rep;
            if (ex_rep == "min") rep = ex_n == 4 ? Partition{2, 1, 1} : Partition{2, 1};
            else if (ex_rep == "ntm") {
                if (ex_n != 4) throw std::domain_error("the next-to-minimal wavefront needs n = 4");
                rep = Partition{2, 2};
            } else if (ex_rep != "generic") {
                throw std::domain_error("--rep must be generic, min or ntm");
            }
            ExpansionStrategy strategy = ex_strategy == "alpha1"   ? ExpansionStrategy::Alpha1
                                         : ex_strategy == "alpha3" ? ExpansionStrategy::Alpha3
                                                                   : ExpansionStrategy::Alpha2;
            FormalExpansion result;
            if (ex_coeff == "F212") {
                if (ex_n != 4) throw std::domain_error("F212 lives in SL(4)");
                auto base = expand_F212(ChargeSlot::sym("m", true), strategy);
                result = rep ? expand_to_whittaker(base, *rep, strategy) : canonicalize(base);
            } else if (ex_coeff == "F22") {
                if (ex_n != 4) throw std::domain_error("F22 lives in SL(4)");
                auto base = expand_F22_partial(ChargeSlot::sym("m", true), ChargeSlot::sym("n", true));
                result = rep ? expand_to_whittaker(base, *rep, strategy) : canonicalize(base);
            } else if (ex_coeff == "Fmin3") {
                if (ex_n != 3) throw std::domain_error("Fmin3 lives in SL(3)");
                if (ex_rep == "ntm") throw std::domain_error("SL(3) has no next-to-minimal orbit");
                FormalTerm fmin;
                fmin.n = 3;
                fmin.kind = TermKind::Fmin3;
                fmin.slots = {ChargeSlot::sym("m", true)};
                fmin.validate();
                auto base = apply_rule(RuleRegistry::instance().rule("sl3.orbit_sum"), fmin);
                base.free_nonzero = {"m"};
                result = rep ? expand_to_whittaker(base, *rep) : canonicalize(base);
            } else {
                throw std::domain_error("--coefficient must be F212, F22 or Fmin3");
            }
            if (format == "latex") out << expansion_to_latex(result) << "\n";
            else emit(expansion_to_json(result));
            return 0;
        }

        if (vr_cmd->parsed()) {
            auto rules = RuleRegistry::instance().rules_for(vr_n);
            if (rules.empty()) throw std::domain_error("no rules registered for n = " + std::to_string(vr_n));
            bool all_pass = true;
            nlohmann::ordered_json reports = nlohmann::ordered_json::array();
            for (const auto* rule : rules) {
                auto report = verify_rewrite_rule(*rule);
                all_pass = all_pass && report.pass;
                if (format == "json" || format == "latex") reports.push_back(report_to_json(report));
                else out << (report.pass ? "[pass] " : "[FAIL] ") << rule->id << "\n";
            }
            // seeded mutation canary: a corrupted witness must be rejected
            std::mt19937_64 rng(seed);
            RewriteRule mutant = *rules[rng() % rules.size()];
            auto& step = mutant.steps[rng() % mutant.steps.size()];
            step.gamma.at(0, 0) = step.gamma.at(0, 0) + Frac(1);
            bool canary_ok = !verify_rewrite_rule(mutant).pass;
            all_pass = all_pass && canary_ok;
            if (format == "json" || format == "latex") {
                nlohmann::ordered_json j;
                j["rules"] = reports;
                j["mutation_canary"] = nlohmann::ordered_json{{"rule", mutant.id}, {"rejected", canary_ok}};
                j["pass"] = all_pass;
                emit(j);
            } else {
                out << (canary_ok ? "[pass] " : "[FAIL] ") << "mutation canary on " << mutant.id << "\n";
                out << (all_pass ? "all rules verified\n" : "rule verification FAILED\n");
            }
            return all_pass ? 0 : 1;
        }

        if (sp_cmd->parsed()) {
            auto group = clidetail::parse_group(sp_group);
            auto realization = clidetail::parse_realization(sp_realization);
            Rational charge = parse_rational(sp_charge);
            nlohmann::ordered_json j;
            j["group"] = group_name(group);
            j["realization"] = realization_name(realization);
            j["charge"] = format_rational(charge);
            if (sp_place == "inf") {
                SphericalSpec spec(group, realization, PAdicPlace::infinity());
                double value = local_spherical_real(group, realization, to_double(charge));
                j["place"] = "inf";
                j["value"] = value;
            } else {
                std::uint64_t p = std::stoull(sp_place);
                SphericalSpec spec(group, realization, PAdicPlace::finite(p));
                j["place"] = p;
                j["value"] = format_rational(local_spherical(spec, charge));
            }
            if (format == "text") out << j["value"].dump() << "\n";
            else emit(j);
            return 0;
        }

        if (vp_cmd->parsed()) {
            auto group = clidetail::parse_group(vp_group);
            auto realization = clidetail::parse_realization(vp_realization);
            if (vp_mmax == 0) throw std::domain_error("--mmax must be positive");
            const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
            std::vector<std::future<std::vector<SphericalCheckReport>>> futures;
            for (unsigned w = 0; w < workers; ++w) {
                futures.push_back(std::async(std::launch::async, [&, w] {
                    std::vector<SphericalCheckReport> bad;
                    for (std::uint64_t m = 1 + w; m <= vp_mmax; m += workers) {
                        auto report = verify_factorization(group, realization, m);
                        if (!report.pass) bad.push_back(report);
                    }
                    return bad;
                }));
            }
            std::vector<SphericalCheckReport> failures;
            for (auto& f : futures) {
                auto bad = f.get();
                failures.insert(failures.end(), bad.begin(), bad.end());
            }
            nlohmann::ordered_json j;
            j["pair"] = group_name(group) + "/" + realization_name(realization);
            j["mmax"] = vp_mmax;
            j["checked"] = vp_mmax;
            j["failed"] = failures.size();
            j["pass"] = failures.empty();
            nlohmann::ordered_json bad = nlohmann::ordered_json::array();
            for (const auto& r : failures) bad.push_back(spherical_report_to_json(r));
            if (!failures.empty()) j["failures"] = bad;
            if (format == "text")
                out << j["pair"].get<std::string>() << " m<=" << vp_mmax
                    << (failures.empty() ? " all factorizations hold\n" : " FAILURES\n");
            else emit(j);
            return failures.empty() ? 0 : 1;
        }

        if (eu_cmd->parsed()) {
            if (eu_m == 0 && eu_mmax == 0) throw std::domain_error("pass --m or --mmax");
            if (eu_m != 0) {
                Int sigma = divisor_sigma(eu_s, eu_m);
                Rational euler = euler_sigma_product(eu_s, eu_m);
                nlohmann::ordered_json j;
                j["s"] = eu_s;
                j["m"] = eu_m;
                j["divisor_sigma"] = sigma.str();
                j["euler_product"] = format_rational(euler);
                j["equal"] = Rational(sigma) == euler;
                emit(j);
                return j["equal"] == true ? 0 : 1;
            }
            std::uint64_t mismatches = 0;
            for (std::uint64_t m = 1; m <= eu_mmax; ++m)
                if (Rational(divisor_sigma(eu_s, m)) != euler_sigma_product(eu_s, m)) ++mismatches;
            nlohmann::ordered_json j;
            j["s"] = eu_s;
            j["mmax"] = eu_mmax;
            j["mismatches"] = mismatches;
            j["pass"] = mismatches == 0;
            emit(j);
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace nilorb
