// p-adic valuations, norms and fractional parts of rationals.
#pragma once

#include "nilorb/numeric.hpp"

#include <optional>

namespace nilorb {

/// A place of Q: a finite prime p or the archimedean place.
class PAdicPlace {
public:
    static PAdicPlace finite(std::uint64_t p) {
        if (!is_prime(p)) throw std::domain_error("PAdicPlace: " + std::to_string(p) + " is not prime");
        return PAdicPlace(p);
    }
    static PAdicPlace infinity() { return PAdicPlace(std::nullopt); }

    bool is_finite() const { return p_.has_value(); }
    std::uint64_t prime() const {
        if (!p_) throw std::domain_error("PAdicPlace: archimedean place has no prime");
        return *p_;
    }
    bool operator==(const PAdicPlace&) const = default;

private:
    explicit PAdicPlace(std::optional<std::uint64_t> p) : p_(p) {}
    std::optional<std::uint64_t> p_;
};

inline long int_valuation(Int n, const Int& p) {
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

/// v_p(x) for x != 0: the exponent of p in x.
inline long padic_valuation(const Rational& x, std::uint64_t p) {
    if (x == 0) throw std::domain_error("padic_valuation: zero input");
    if (!is_prime(p)) throw std::domain_error("padic_valuation: " + std::to_string(p) + " is not prime");
    const Int pp(p);
    return int_valuation(num(x), pp) - int_valuation(den(x), pp);
}

/// |x|_p = p^(-v_p(x)) at a finite place (with |0|_p = 0), |x| at the archimedean one.
inline Rational padic_abs(const Rational& x, const PAdicPlace& place) {
    if (!place.is_finite()) return x < 0 ? Rational(-x) : x;
    if (x == 0) return Rational(0);
    long v = padic_valuation(x, place.prime());
    return rat_pow(Rational(Int(place.prime())), -v);
}

/// The unique a/p^k in [0,1) congruent to x modulo rationals with p-free denominator.
inline Rational fractional_part_p(const Rational& x, std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error("fractional_part_p: " + std::to_string(p) + " is not prime");
    const Int pp(p);
    Int d = den(x);
    long k = int_valuation(d, pp);
    if (k == 0) return Rational(0);
    // x = n / (d' p^k) with p coprime to n and d'; solve a = n (d')^{-1} mod p^k.
    Int pk = int_pow(pp, static_cast<unsigned>(k));
    Int dprime = d / pk;
    Int n_mod = num(x) % pk;
    if (n_mod < 0) n_mod += pk;
    Int a = n_mod * mod_inverse(dprime, pk) % pk;
    return Rational(a, pk);
}

}  // namespace nilorb
