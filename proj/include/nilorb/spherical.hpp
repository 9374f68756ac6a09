// Local spherical vectors of minimal representations of E6/E7/E8 in the
// abelian and Heisenberg realisations, the SL(2) spherical Whittaker value,
// the global degenerate Whittaker data at s = 3/2, and the exact Euler
// factorization checks connecting them.
#pragma once

#include "nilorb/bessel.hpp"
#include "nilorb/divisor.hpp"
#include "nilorb/orbit.hpp"

#include <json.hpp>

namespace nilorb {

enum class Realization { Abelian, Heisenberg };

inline std::string realization_name(Realization r) { return r == Realization::Abelian ? "abelian" : "heisenberg"; }

struct SphericalSpec {
    ExceptionalGroup group;
    Realization realization;
    PAdicPlace place;

    SphericalSpec(ExceptionalGroup g, Realization r, PAdicPlace p) : group(g), realization(r), place(std::move(p)) {
        if (group == ExceptionalGroup::E8 && realization == Realization::Abelian)
            throw std::domain_error("SphericalSpec: E8 admits no 3-grading, so no abelian realisation");
    }
};

/// The SL(2, Q_p) spherical Whittaker value
///   |v|^(-2s+2) gamma_p(m v^2) (1 - p^(-2s)) (1 - p^(-2s+1)|m v^2|^(2s-1)) / (1 - p^(-2s+1)),
/// exact whenever 2s is an integer.
inline Rational cs_whittaker_sl2_exact(const Rational& s, const Rational& v, const Rational& m, std::uint64_t p) {
    if (v == 0 || m == 0) throw std::domain_error("cs_whittaker_sl2: v and m must be non-zero");
    if (den(Rational(2) * s) != 1) throw std::domain_error("cs_whittaker_sl2_exact: 2s must be an integer");
    long two_s = (Int(2) * num(s) / den(s)).convert_to<long>();
    if (two_s == 1) throw std::domain_error("cs_whittaker_sl2: pole at 2s = 1");
    const Rational pr{Int(p)};
    long a = padic_valuation(v, p);
    long b = padic_valuation(m * v * v, p);
    if (b < 0) return Rational(0);  // gamma_p vanishes outside Z_p
    Rational torus = rat_pow(pr, a * (two_s - 2));         // |v|^(-2s+2)
    Rational first = Rational(1) - rat_pow(pr, -two_s);    // 1 - p^(-2s)
    Rational geom = Rational(1) - rat_pow(pr, 1 - two_s - b * (two_s - 1));
    Rational denom = Rational(1) - rat_pow(pr, 1 - two_s);
    return torus * first * geom / denom;
}

inline double cs_whittaker_sl2(const Rational& s, const Rational& v, const Rational& m, std::uint64_t p) {
    if (den(Rational(2) * s) == 1) return to_double(cs_whittaker_sl2_exact(s, v, m, p));
    if (v == 0 || m == 0) throw std::domain_error("cs_whittaker_sl2: v and m must be non-zero");
    const double ds = to_double(s);
    const double dp = static_cast<double>(p);
    long a = padic_valuation(v, p);
    long b = padic_valuation(m * v * v, p);
    if (b < 0) return 0.0;
    double torus = std::pow(dp, static_cast<double>(a) * (2.0 * ds - 2.0));
    double first = 1.0 - std::pow(dp, -2.0 * ds);
    double geom = 1.0 - std::pow(dp, 1.0 - 2.0 * ds - b * (2.0 * ds - 1.0));
    double denom = 1.0 - std::pow(dp, 1.0 - 2.0 * ds);
    if (denom == 0.0) throw std::domain_error("cs_whittaker_sl2: pole at 2s = 1");
    return torus * first * geom / denom;
}

/// x^power K_order(x): the shape of every archimedean spherical vector here.
struct ArchimedeanForm {
    BesselOrder order;
    Rational power;
};

inline ArchimedeanForm archimedean_form(ExceptionalGroup group, Realization realization) {
    if (realization == Realization::Abelian) {
        switch (group) {
            case ExceptionalGroup::E6: return {BesselOrder::integer(1), Rational(-1)};
            case ExceptionalGroup::E7: return {BesselOrder(3), Rational(-3, 2)};
            default: throw std::domain_error("archimedean_form: E8 has no abelian realisation");
        }
    }
    switch (group) {
        case ExceptionalGroup::E6: return {BesselOrder(1), Rational(-5, 2)};
        case ExceptionalGroup::E7: return {BesselOrder::integer(1), Rational(-4)};
        default: return {BesselOrder::integer(2), Rational(-7)};
    }
}

/// Finite-place spherical vector as an exact rational in the charge x.
inline Rational local_spherical_finite(ExceptionalGroup group, Realization realization, std::uint64_t p,
                                       const Rational& x) {
    if (x == 0) throw std::domain_error("local_spherical: charge must be non-zero");
    if (!is_prime(p)) throw std::domain_error("local_spherical: place must be prime");
    const long v = padic_valuation(x, p);
    const Rational pr{Int(p)};
    auto bracket = [&](unsigned s) {
        // (1 - p^s |x|^{-s}) / (1 - p^s)
        return (Rational(1) - rat_pow(pr, static_cast<long>(s) * (v + 1))) / (Rational(1) - rat_pow(pr, s));
    };
    if (realization == Realization::Abelian) {
        switch (group) {
            case ExceptionalGroup::E6: return bracket(2);
            case ExceptionalGroup::E7: return bracket(3);
            default: throw std::domain_error("local_spherical: E8 has no abelian realisation");
        }
    }
    switch (group) {
        case ExceptionalGroup::E6: return rat_pow(pr, 2 * v) * bracket(1);
        case ExceptionalGroup::E7: return rat_pow(pr, 3 * v) * bracket(2);
        default: return rat_pow(pr, 5 * v) * bracket(4);
    }
}

/// Real-place spherical vector, x > 0.
inline double local_spherical_real(ExceptionalGroup group, Realization realization, double x) {
    if (!(x > 0)) throw std::domain_error("local_spherical: real charge must be positive");
    auto form = archimedean_form(group, realization);
    return std::pow(x, to_double(form.power)) * bessel_k(form.order, x);
}

inline Rational local_spherical(const SphericalSpec& spec, const Rational& x) {
    if (!spec.place.is_finite())
        throw std::domain_error("local_spherical: use local_spherical_real at the archimedean place");
    return local_spherical_finite(spec.group, spec.realization, spec.place.prime(), x);
}

/// Decomposed global degenerate Whittaker value at s = 3/2:
/// prefactor * |m|^bessel_power * sigma(m) * K_order(|m|).
struct GlobalWhittakerValue {
    std::string prefactor_label;
    unsigned sigma_exponent = 0;
    Int arithmetic_part;
    BesselOrder bessel_order = BesselOrder::integer(0);
    Rational bessel_power;
};

inline GlobalWhittakerValue global_degenerate_whittaker(ExceptionalGroup group, int node, std::uint64_t m) {
    if (m == 0) throw std::domain_error("global_degenerate_whittaker: charge must be positive");
    GlobalWhittakerValue val;
    if (group == ExceptionalGroup::E6 && node == 1) {
        val = {"2/xi(3)", 2, Int(0), BesselOrder::integer(1), Rational(-1)};
    } else if (group == ExceptionalGroup::E6 && node == 2) {
        val = {"2/xi(3)", 1, Int(0), BesselOrder(1), Rational(-1, 2)};
    } else if (group == ExceptionalGroup::E7 && node == 7) {
        val = {"2/xi(4)", 3, Int(0), BesselOrder(3), Rational(-3, 2)};
    } else if (group == ExceptionalGroup::E7 && node == 1) {
        val = {"2/xi(3)", 2, Int(0), BesselOrder::integer(1), Rational(-1)};
    } else if (group == ExceptionalGroup::E8 && node == 8) {
        val = {"2*xi(4)/(xi(3)*xi(5))", 4, Int(0), BesselOrder::integer(2), Rational(-2)};
    } else {
        throw std::domain_error("global_degenerate_whittaker: unsupported (group, node) pair");
    }
    val.arithmetic_part = divisor_sigma(val.sigma_exponent, m);
    return val;
}

/// The simple root whose Whittaker vector matches the given realisation.
inline int whittaker_node(ExceptionalGroup group, Realization realization) {
    if (realization == Realization::Abelian) {
        if (group == ExceptionalGroup::E6) return 1;
        if (group == ExceptionalGroup::E7) return 7;
        throw std::domain_error("whittaker_node: E8 has no abelian realisation");
    }
    if (group == ExceptionalGroup::E6) return 2;
    if (group == ExceptionalGroup::E7) return 1;
    return 8;
}

/// Power of m the finite product contributes beyond the divisor sum.
inline unsigned charge_power(ExceptionalGroup group, Realization realization) {
    if (realization == Realization::Abelian) return 0;
    switch (group) {
        case ExceptionalGroup::E6: return 2;
        case ExceptionalGroup::E7: return 3;
        default: return 5;
    }
}

struct SphericalCheckReport {
    std::string pair;
    std::uint64_t m = 0;
    std::string lhs, rhs;
    bool pass = false;
    std::string detail;
};

/// Checks, exactly over Q, that the finite-place spherical vectors multiply to
/// the predicted m^a sigma_b(m), and that the archimedean data of the global
/// Whittaker value matches the real spherical vector symbol by symbol.
inline SphericalCheckReport verify_factorization(ExceptionalGroup group, Realization realization, std::uint64_t m) {
    SphericalCheckReport report;
    report.pair = group_name(group) + "/" + realization_name(realization);
    report.m = m;
    if (m == 0) throw std::domain_error("verify_factorization: m must be positive");

    Rational product(1);
    for (const auto& [p, e] : factorize(m)) product *= local_spherical_finite(group, realization, p, Rational(Int(m)));

    const unsigned a = charge_power(group, realization);
    auto global = global_degenerate_whittaker(group, whittaker_node(group, realization), m);
    Rational predicted = Rational(int_pow(Int(m), a)) * Rational(global.arithmetic_part);

    report.lhs = format_rational(product);
    report.rhs = format_rational(predicted);
    bool finite_ok = product == predicted;
    if (!finite_ok) report.detail = "finite-place product mismatch";

    auto real_form = archimedean_form(group, realization);
    bool order_ok = real_form.order.twice() == global.bessel_order.twice();
    bool power_ok = global.bessel_power - Rational(static_cast<int>(a)) == real_form.power;
    if (!order_ok) report.detail += (report.detail.empty() ? "" : "; ") + std::string("Bessel order mismatch");
    if (!power_ok) report.detail += (report.detail.empty() ? "" : "; ") + std::string("charge power mismatch");

    report.pass = finite_ok && order_ok && power_ok;
    return report;
}

inline nlohmann::ordered_json spherical_report_to_json(const SphericalCheckReport& r) {
    nlohmann::ordered_json j;
    j["pair"] = r.pair;
    j["m"] = r.m;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j;
}

}  // namespace nilorb
