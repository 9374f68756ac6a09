// Divisor sums and their exact Euler-product form.
#pragma once

#include "nilorb/numeric.hpp"
#include "nilorb/padic.hpp"

namespace nilorb {

/// sigma_s(m) = sum of d^s over divisors d of m, by divisor enumeration.
inline Int divisor_sigma(unsigned s, std::uint64_t m) {
    if (m == 0) throw std::domain_error("divisor_sigma: m must be positive");
    auto factors = factorize(m);
    std::vector<Int> divisors{Int(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divisors.size();
        Int pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pe);
        }
    }
    Int total = 0;
    for (const Int& d : divisors) total += int_pow(d, s);
    return total;
}

/// prod over p | m of (1 - p^s |m|_p^(-s)) / (1 - p^s), exactly.
inline Rational euler_sigma_product(unsigned s, std::uint64_t m) {
    if (m == 0) throw std::domain_error("euler_sigma_product: m must be positive");
    if (s == 0) throw std::domain_error("euler_sigma_product: s = 0 makes each local factor 0/0");
    Rational product(1);
    for (const auto& [p, e] : factorize(m)) {
        // |m|_p^{-s} = p^{s e}, so the local factor is (1 - p^{s(e+1)}) / (1 - p^s).
        Int ps = int_pow(Int(p), s);
        product *= Rational(Int(1) - int_pow(ps, e + 1)) / Rational(Int(1) - ps);
    }
    return product;
}

}  // namespace nilorb
