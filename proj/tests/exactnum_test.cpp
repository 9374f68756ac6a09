#include <catch2/catch_amalgamated.hpp>

#include "nilorb/bessel.hpp"
#include "nilorb/divisor.hpp"
#include "nilorb/padic.hpp"

#include <cmath>
#include <random>

using namespace nilorb;

namespace {

// Independent valuation oracle: strip factors of p from numerator and denominator.
long valuation_oracle(Rational x, std::uint64_t p) {
    long v = 0;
    Int n = num(x), d = den(x);
    while (n % p == 0) { n /= p; ++v; }
    while (d % p == 0) { d /= p; --v; }
    return v;
}

// Independent divisor-sum oracle: scan all candidates up to m.
Int sigma_oracle(unsigned s, std::uint64_t m) {
    Int total = 0;
    for (std::uint64_t d = 1; d <= m; ++d)
        if (m % d == 0) total += int_pow(Int(d), s);
    return total;
}

// Independent fractional-part oracle: search a/p^k with x - a/p^k in Z_(p).
Rational fractional_oracle(const Rational& x, std::uint64_t p) {
    for (unsigned k = 0; k <= 40; ++k) {
        Int pk = int_pow(Int(p), k);
        for (Int a = 0; a < pk; ++a) {
            Rational r(a, pk);
            if (den(x - r) % p != 0) return r;
        }
    }
    FAIL("fractional_oracle: no representative found");
    return Rational(0);
}

Rational random_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> numd(-bound, bound);
    std::uniform_int_distribution<int> dend(1, bound);
    Rational r;
    do {
        r = Rational(numd(rng), dend(rng));
    } while (r == 0);
    return r;
}

}  // namespace

TEST_CASE("padic_valuation matches factor counting") {
    CHECK(padic_valuation(Rational(12), 2) == 2);
    CHECK(padic_valuation(Rational(1), 5) == 0);
    CHECK(padic_valuation(Rational(7, 8), 2) == -3);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Rational x = random_rational(rng, 600);
        for (std::uint64_t p : {2, 3, 5, 7}) CHECK(padic_valuation(x, p) == valuation_oracle(x, p));
    }
}

TEST_CASE("padic_valuation rejects bad input") {
    CHECK_THROWS_AS(padic_valuation(Rational(0), 3), std::domain_error);
    CHECK_THROWS_AS(padic_valuation(Rational(5), 6), std::domain_error);
}

TEST_CASE("padic_abs values") {
    CHECK(padic_abs(Rational(12), PAdicPlace::finite(2)) == Rational(1, 4));
    CHECK(padic_abs(Rational(0), PAdicPlace::finite(3)) == 0);
    CHECK(padic_abs(Rational(-5, 9), PAdicPlace::finite(3)) == 9);
    CHECK(padic_abs(Rational(-5, 9), PAdicPlace::infinity()) == Rational(5, 9));
}

TEST_CASE("valuation and norm are multiplicative") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational x = random_rational(rng, 400);
        Rational y = random_rational(rng, 400);
        for (std::uint64_t p : {2, 3, 5, 7, 11}) {
            CHECK(padic_valuation(x * y, p) == padic_valuation(x, p) + padic_valuation(y, p));
            auto place = PAdicPlace::finite(p);
            CHECK(padic_abs(x * y, place) == padic_abs(x, place) * padic_abs(y, place));
        }
    }
}

TEST_CASE("product formula over the support of x") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Rational x = random_rational(rng, 999);
        REQUIRE(abs(num(x) * den(x)) <= 1000000);
        Rational prod = padic_abs(x, PAdicPlace::infinity());
        Int support = abs(num(x)) * den(x);
        for (const auto& [p, e] : factorize(support.convert_to<std::uint64_t>()))
            prod *= padic_abs(x, PAdicPlace::finite(p));
        CHECK(prod == 1);
    }
}

TEST_CASE("fractional_part_p examples and oracle") {
    CHECK(fractional_part_p(Rational(7, 8), 2) == Rational(7, 8));
    CHECK(fractional_part_p(Rational(3, 5), 2) == 0);
    CHECK(fractional_part_p(Rational(1, 6), 2) == Rational(1, 2));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        Rational x = random_rational(rng, 64);
        for (std::uint64_t p : {2, 3, 5}) CHECK(fractional_part_p(x, p) == fractional_oracle(x, p));
    }
}

TEST_CASE("fractional_part_p is periodic and additive mod Z_(p)") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        Rational x = random_rational(rng, 200);
        Rational y = random_rational(rng, 200);
        for (std::uint64_t p : {2, 3, 7}) {
            for (int n : {-3, 1, 12}) CHECK(fractional_part_p(x + n, p) == fractional_part_p(x, p));
            Rational defect = fractional_part_p(x + y, p) - fractional_part_p(x, p) - fractional_part_p(y, p);
            CHECK(den(defect) % p != 0);
        }
    }
}

TEST_CASE("divisor_sigma examples and oracle") {
    CHECK(divisor_sigma(2, 6) == 50);
    CHECK(divisor_sigma(4, 2) == 17);
    for (unsigned s : {0u, 1u, 3u, 7u}) CHECK(divisor_sigma(s, 1) == 1);
    CHECK_THROWS_AS(divisor_sigma(2, 0), std::domain_error);

    for (std::uint64_t m = 1; m <= 120; ++m)
        for (unsigned s : {1u, 2u, 3u}) CHECK(divisor_sigma(s, m) == sigma_oracle(s, m));
}

TEST_CASE("euler_sigma_product equals divisor_sigma") {
    CHECK(euler_sigma_product(2, 4) == 21);
    CHECK(euler_sigma_product(3, 1) == 1);
    CHECK(euler_sigma_product(2, 6) == 50);
    CHECK_THROWS_AS(euler_sigma_product(0, 6), std::domain_error);

    for (unsigned s = 1; s <= 4; ++s)
        for (std::uint64_t m = 1; m <= 2000; ++m)
            CHECK(euler_sigma_product(s, m) == Rational(divisor_sigma(s, m)));
}

TEST_CASE("bessel_k half-integer closed forms") {
    const double x0 = 1.0;
    CHECK_THAT(bessel_k(BesselOrder(1), x0),
               Catch::Matchers::WithinRel(std::sqrt(M_PI / 2.0) * std::exp(-1.0), 1e-14));
    CHECK_THAT(bessel_k(BesselOrder(3), 2.0),
               Catch::Matchers::WithinRel(std::sqrt(M_PI / 4.0) * std::exp(-2.0) * 1.5, 1e-14));
    for (double x = 0.01; x <= 50.0; x *= 1.37) {
        double k_half = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
        CHECK_THAT(bessel_k(BesselOrder(1), x), Catch::Matchers::WithinRel(k_half, 1e-12));
        CHECK_THAT(bessel_k(BesselOrder(3), x), Catch::Matchers::WithinRel(k_half * (1.0 + 1.0 / x), 1e-12));
    }
}

TEST_CASE("bessel_k reference values") {
    struct Ref { int twice; double x; double value; };
    // Frozen from an independent arbitrary-precision evaluation.
    const Ref refs[] = {
        {0, 0.01, 4.72124473016109494},
        {0, 0.5, 0.924419071227665862},
        {0, 2.0, 0.113893872749533436},
        {0, 7.5, 0.000249177616356114389},
        {0, 50.0, 3.41016774978949551e-23},
        {0, 300.0, 3.72369485488914326e-132},
        {0, 700.0, 4.66977643168537688e-306},
        {2, 0.01, 99.9738941182962456},
        {2, 0.5, 1.65644112000330089},
        {2, 2.0, 0.139865881816522427},
        {2, 7.5, 0.000265297390125289526},
        {2, 50.0, 3.44410222671755561e-23},
        {2, 300.0, 3.7298958583323727e-132},
        {2, 700.0, 4.67311079670796611e-306},
        {4, 0.1, 199.503964642114117},
        {4, 2.0, 0.253759754566055863},
        {4, 13.7, 4.33707264549076614e-7},
        {4, 250.0, 2.13167092847897264e-110},
        {6, 0.75, 17.7111644706003877},
        {6, 42.0, 1.23243057554194039e-19},
        {10, 1.3, 93.2180889874253978},
        {10, 80.0, 2.94917644202061401e-36},
        {1, 0.01, 12.4084345328469299},
        {3, 0.01, 1253.2518878175399},
        {5, 3.0, 0.0840606319741173827},
        {7, 10.0, 0.000031758488835389642},
        {1, 650.0, 2.51298573360732476e-284},
    };
    for (const auto& r : refs)
        CHECK_THAT(bessel_k(BesselOrder(r.twice), r.x), Catch::Matchers::WithinRel(r.value, 1e-12));
}

TEST_CASE("bessel_k recurrence consistency") {
    for (double x = 0.1; x <= 50.0; x *= 1.31) {
        double lhs2 = bessel_k(BesselOrder::integer(2), x);
        double rhs2 = bessel_k(BesselOrder::integer(0), x) + (2.0 / x) * bessel_k(BesselOrder::integer(1), x);
        CHECK_THAT(lhs2, Catch::Matchers::WithinRel(rhs2, 1e-10));
        // nu = 1/2 and nu = 1
        double l12 = bessel_k(BesselOrder(3), x);
        double r12 = bessel_k(BesselOrder(1), x) * (1.0 + 1.0 / x);
        CHECK_THAT(l12, Catch::Matchers::WithinRel(r12, 1e-10));
    }
}

TEST_CASE("bessel_k domain and underflow behaviour") {
    CHECK_THROWS_AS(bessel_k(BesselOrder::integer(0), 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(BesselOrder::integer(1), -3.0), std::domain_error);
    CHECK(bessel_k(BesselOrder::integer(0), 800.0) == 0.0);
    CHECK(bessel_k_scaled(BesselOrder::integer(0), 800.0) > 0.0);
    CHECK_THROWS_AS(BesselOrder(Rational(1, 3)), std::domain_error);
    CHECK_THROWS_AS(BesselOrder(-1), std::domain_error);
}

TEST_CASE("primality and factorization helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(is_prime(2147483647ull));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));  // Carmichael
    auto f = factorize(5040);
    REQUIRE(f.size() == 4);
    CHECK(f[0].p == 2);
    CHECK(f[0].e == 4);
    CHECK(f[3].p == 7);
}

TEST_CASE("rational string round trip") {
    CHECK(format_rational(Rational(-5, 9)) == "-5/9");
    CHECK(format_rational(Rational(4)) == "4");
    CHECK(parse_rational("-5/9") == Rational(-5, 9));
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("x"), std::domain_error);
}
