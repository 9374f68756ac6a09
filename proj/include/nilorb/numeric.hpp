// Exact integer and rational arithmetic plus small number-theoretic helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& x) { return numerator(x); }
inline Int den(const Rational& x) { return denominator(x); }

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0) {
        if (exp < 0) throw std::domain_error("rat_pow: 0 to a negative power");
        return Rational(0);
    }
    Int n = int_pow(num(base), static_cast<unsigned>(exp < 0 ? -exp : exp));
    Int d = int_pow(den(base), static_cast<unsigned>(exp < 0 ? -exp : exp));
    return exp > 0 ? Rational(n, d) : Rational(d, n);
}

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1u) == 0) { d >>= 1u; ++s; }
    const Int m(n);
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        Int x = boost::multiprecision::powm(Int(a), Int(d), m);
        if (x == 1 || x == m - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % m;
            if (x == m - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

struct PrimePower {
    std::uint64_t p;
    unsigned e;
};

// Trial-division factorization; intended for desk-scale m.
inline std::vector<PrimePower> factorize(std::uint64_t m) {
    if (m == 0) throw std::domain_error("factorize: zero input");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        unsigned e = 0;
        while (m % p == 0) { m /= p; ++e; }
        out.push_back({p, e});
    }
    if (m > 1) out.push_back({m, 1});
    return out;
}

// Extended gcd: returns g = gcd(a, b) with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Inverse of a modulo m, for gcd(a, m) = 1, m > 0.
inline Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(a % m, m, x, y);
    if (g != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline std::string format_rational(const Rational& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

inline Rational parse_rational(const std::string& s) {
    auto bad = [&] { return std::domain_error("malformed rational '" + s + "'"); };
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw bad();
        if (d < 0) { n = -n; d = -d; }
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace nilorb
