// Acceptance suite: one pass/fail line per criterion, non-zero exit on any
// failure. Each criterion enforces its own runtime budget.

#include "nilorb/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

using namespace nilorb;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (detail.empty()) detail = why;
    }
    void expect(bool ok, const std::string& why) {
        if (!ok) fail(why);
    }
};

int g_failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.fail(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds)
        outcome.fail("runtime " + std::to_string(elapsed) + "s exceeds budget " + std::to_string(budget_seconds) + "s");
    if (!outcome.pass) ++g_failures;
    std::cout << (outcome.pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label << " ("
              << std::fixed << std::setprecision(2) << elapsed << "s)";
    if (!outcome.pass) std::cout << " -- " << outcome.detail;
    std::cout << std::defaultfloat << "\n";
}

RationalMatrix jordan_matrix(const Partition& lambda) {
    RationalMatrix j(lambda.n());
    int offset = 0;
    for (int p : lambda.parts()) {
        for (int k = 0; k + 1 < p; ++k) j.at(offset + k, offset + k + 1) = 1;
        offset += p;
    }
    return j;
}

RationalMatrix random_invertible(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    RationalMatrix lower = RationalMatrix::identity(n);
    RationalMatrix upper = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower.at(i, j) = d(rng);
            upper.at(j, i) = Rational(d(rng), 1 + std::abs(d(rng)));
        }
    return lower * upper;
}

FormalTerm make_whittaker(int n, TermKind kind, std::vector<ChargeSlot> slots) {
    FormalTerm t;
    t.n = n;
    t.kind = kind;
    t.slots = std::move(slots);
    t.validate();
    return t;
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n";

    criterion(1, "SL(4) orbit catalog: computed dimensions and weighted diagrams", 1.0, [](Outcome& o) {
        auto catalog = orbit_catalog(4);  // computes and cross-checks internally
        o.expect(catalog.size() == 5, "five orbits expected");
        const std::vector<int> dims = {12, 10, 8, 6, 0};
        const std::vector<std::vector<int>> diagrams = {{2, 2, 2}, {2, 0, 2}, {0, 2, 0}, {1, 0, 1}, {0, 0, 0}};
        for (std::size_t i = 0; i < catalog.size(); ++i) {
            o.expect(catalog[i].dimension == dims[i], "dimension mismatch at row " + std::to_string(i));
            o.expect(catalog[i].dynkin_weights == diagrams[i], "diagram mismatch at row " + std::to_string(i));
        }
        std::ostringstream out, err;
        o.expect(run_cli({"orbits", "--n", "4"}, out, err) == 0, "CLI orbits failed");
    });

    criterion(2, "grading and conjugate-partition dimension formulas agree for n <= 8", 1.0, [](Outcome& o) {
        int cases = 0;
        for (int n = 2; n <= 8; ++n)
            for (const auto& lambda : all_partitions(n)) {
                orbit_dimension(lambda);  // throws on disagreement
                ++cases;
            }
        o.expect(cases == 65, "expected the 65 partitions of 2 <= n <= 8, saw " + std::to_string(cases));
    });

    criterion(3, "200 planted Jordan forms classified exactly after random conjugation", 5.0, [](Outcome& o) {
        std::mt19937_64 rng(20240811);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + static_cast<int>(rng() % 4);
            auto parts = all_partitions(n);
            Partition lambda = parts[rng() % parts.size()];
            RationalMatrix p = random_invertible(n, rng);
            RationalMatrix x = p * jordan_matrix(lambda) * p.inverse();
            if (!(jordan_type(x) == lambda)) {
                o.fail("misclassified " + lambda.str());
                return;
            }
        }
    });

    criterion(4, "charge conditions match Jordan attachment exhaustively on the five shapes", 30.0, [](Outcome& o) {
        const std::vector<Partition> shapes = {Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1},
                                               Partition{1, 1, 1, 1}};
        long cases = 0;
        for (const auto& shape : shapes) {
            auto desc = ParabolicDescriptor::from_orbit(shape);
            std::vector<Position> slots(desc.abelianization_mask.begin(), desc.abelianization_mask.end());
            std::vector<int> vals(slots.size(), -2);
            for (;;) {
                std::map<Position, Rational> charges;
                for (std::size_t i = 0; i < slots.size(); ++i)
                    if (vals[i] != 0) charges[slots[i]] = vals[i];
                attach_orbit(CharacterMatrix(desc, charges));  // throws on disagreement
                ++cases;
                std::size_t i = 0;
                for (; i < vals.size() && vals[i] == 2; ++i) vals[i] = -2;
                if (i == vals.size()) break;
                ++vals[i];
            }
        }
        o.expect(cases == 125 + 625 + 625 + 5 + 1, "unexpected case count " + std::to_string(cases));
    });

    criterion(5, "every registered rewrite rule verifies; corrupted witnesses are rejected", 10.0, [](Outcome& o) {
        const auto& registry = RuleRegistry::instance();
        o.expect(registry.rules().size() == 26, "expected 26 registered rules");
        for (const auto& rule : registry.rules()) {
            auto report = verify_rewrite_rule(rule);
            if (!report.pass) {
                o.fail("rule " + rule.id + " failed verification");
                return;
            }
        }
        // perturb one entry of one witness translate: must fail with a residual
        RewriteRule mutant = registry.rule("dict.wn4.100");
        mutant.steps[0].lhs_word[1].at(0, 1) = mutant.steps[0].lhs_word[1].at(0, 1) + Frac(1);
        auto bad = verify_rewrite_rule(mutant);
        o.expect(!bad.pass, "mutated witness was accepted");
        bool residual = false;
        for (const auto& s : bad.steps)
            for (const auto& item : s.items)
                if (!item.pass && !item.detail.empty()) residual = true;
        o.expect(residual, "no residual reported for the mutant");
    });

    criterion(6, "minimal and next-to-minimal endpoints match the displayed expansions", 10.0, [](Outcome& o) {
        auto fx = [](const std::string& s) { return Frac::variable(s); };
        auto nz = [](const std::string& s) { return ChargeSlot::sym(s, true); };

        {  // (a) SL(3), minimal representation
            FormalTerm fmin;
            fmin.n = 3;
            fmin.kind = TermKind::Fmin3;
            fmin.slots = {nz("m")};
            fmin.validate();
            auto endpoint = expand_to_whittaker(
                apply_rule(RuleRegistry::instance().rule("sl3.orbit_sum"), fmin), Partition{2, 1});
            FormalTerm w = make_whittaker(3, TermKind::WN3, {nz("m"), ChargeSlot::zero()});
            FracMatrix l(3);
            l.at(0, 0) = Frac(-1);
            l.at(1, 2) = Frac(-1);
            l.at(2, 1) = Frac(-1);
            l.at(2, 2) = fx("n");
            w.translate = {l};
            w.summed_free = {"n"};
            w.validate();
            FormalExpansion expected{{w}, {"m"}};
            o.expect(equivalent(endpoint, expected), "SL(3) minimal endpoint mismatch");
        }

        {  // (b) SL(4), minimal representation, all three strategies
            struct Case {
                ExpansionStrategy strategy;
                std::vector<ChargeSlot> slots;
                FracMatrix translate;
            };
            FracMatrix l2(4), l1(4), l3(4);
            l2.at(0, 1) = Frac(1);
            l2.at(1, 0) = Frac(1);
            l2.at(1, 1) = fx("a");
            l2.at(2, 3) = Frac(1);
            l2.at(3, 2) = Frac(1);
            l2.at(3, 3) = fx("b");
            l1.at(0, 0) = Frac(1);
            l1.at(1, 3) = Frac(1);
            l1.at(2, 1) = Frac(-1);
            l1.at(2, 3) = fx("a");
            l1.at(3, 2) = Frac(-1);
            l1.at(3, 3) = fx("b");
            l3.at(0, 1) = Frac(-1);
            l3.at(1, 2) = Frac(-1);
            l3.at(2, 0) = Frac(1);
            l3.at(2, 1) = fx("a");
            l3.at(2, 2) = fx("b");
            l3.at(3, 3) = Frac(1);
            std::vector<Case> cases = {
                {ExpansionStrategy::Alpha2, {ChargeSlot::zero(), nz("m"), ChargeSlot::zero()}, l2},
                {ExpansionStrategy::Alpha1, {nz("m"), ChargeSlot::zero(), ChargeSlot::zero()}, l1},
                {ExpansionStrategy::Alpha3, {ChargeSlot::zero(), ChargeSlot::zero(), nz("m")}, l3},
            };
            for (const auto& c : cases) {
                auto endpoint =
                    expand_to_whittaker(expand_F212(nz("m"), c.strategy), Partition{2, 1, 1}, c.strategy);
                FormalTerm w = make_whittaker(4, TermKind::WN4, c.slots);
                w.translate = {c.translate};
                w.summed_free = {"a", "b"};
                w.validate();
                FormalExpansion expected{{w}, {"m"}};
                if (!equivalent(endpoint, expected)) {
                    o.fail("SL(4) minimal endpoint mismatch for a strategy");
                    return;
                }
            }
        }

        {  // (c) SL(4), next-to-minimal representation: the two-sum display
            auto endpoint = expand_to_whittaker(expand_F212(nz("m"), ExpansionStrategy::Alpha2), Partition{2, 2});
            FormalExpansion expected;
            FormalTerm t1 = make_whittaker(4, TermKind::WN4, {nz("m"), ChargeSlot::zero(), nz("k")});
            FracMatrix m1(4);
            m1.at(0, 0) = Frac(1);
            m1.at(1, 3) = Frac(1);
            m1.at(2, 1) = Frac(1);
            m1.at(2, 3) = fx("a");
            m1.at(3, 2) = Frac(1);
            m1.at(3, 3) = fx("b");
            t1.translate = {m1};
            t1.summed_nonzero = {"k"};
            t1.summed_free = {"a", "b"};
            t1.validate();
            FormalTerm t2 = make_whittaker(4, TermKind::WN4, {ChargeSlot::zero(), nz("m"), ChargeSlot::zero()});
            FracMatrix m2(4);
            m2.at(0, 1) = Frac(1);
            m2.at(1, 0) = Frac(1);
            m2.at(1, 1) = fx("a");
            m2.at(2, 3) = Frac(1);
            m2.at(3, 2) = Frac(1);
            m2.at(3, 3) = fx("b");
            t2.translate = {m2};
            t2.summed_free = {"a", "b"};
            t2.validate();
            expected.terms = {t1, t2};
            expected.free_nonzero = {"m"};
            o.expect(equivalent(endpoint, expected), "SL(4) next-to-minimal endpoint mismatch");
        }
    });

    criterion(7, "divisor sums equal their Euler products for s in {1..4}, m up to 10^4", 10.0, [](Outcome& o) {
        for (unsigned s = 1; s <= 4; ++s)
            for (std::uint64_t m = 1; m <= 10000; ++m)
                if (Rational(divisor_sigma(s, m)) != euler_sigma_product(s, m)) {
                    o.fail("mismatch at s=" + std::to_string(s) + ", m=" + std::to_string(m));
                    return;
                }
    });

    criterion(8, "spherical-vector factorization for all five pairs, m up to 500", 5.0, [](Outcome& o) {
        const std::vector<std::pair<ExceptionalGroup, Realization>> pairs = {
            {ExceptionalGroup::E6, Realization::Abelian},    {ExceptionalGroup::E7, Realization::Abelian},
            {ExceptionalGroup::E6, Realization::Heisenberg}, {ExceptionalGroup::E7, Realization::Heisenberg},
            {ExceptionalGroup::E8, Realization::Heisenberg}};
        for (const auto& [g, r] : pairs)
            for (std::uint64_t m = 1; m <= 500; ++m) {
                auto report = verify_factorization(g, r, m);
                if (!report.pass) {
                    o.fail(report.pair + " failed at m=" + std::to_string(m) + ": " + report.detail);
                    return;
                }
            }
    });

    criterion(9, "SL(2) spherical Whittaker value: normalization, support, unit invariance", 5.0, [](Outcome& o) {
        for (std::uint64_t p : {2, 3, 5, 7}) {
            Rational pr{Int(p)};
            o.expect(cs_whittaker_sl2_exact(Rational(1), 1, 1, p) == Rational(1) - rat_pow(pr, -2),
                     "normalization at m = v = 1 failed");
            o.expect(cs_whittaker_sl2_exact(Rational(2), 1, Rational(1, Int(p)), p) == 0,
                     "support condition failed");
        }
        std::mt19937_64 rng(1729);
        auto unit = [&](std::uint64_t p) {
            for (;;) {
                int a = 1 + static_cast<int>(rng() % 50), b = 1 + static_cast<int>(rng() % 50);
                if (a % p != 0 && b % p != 0) return Rational(a, b);
            }
        };
        for (std::uint64_t p : {2, 3, 5, 7})
            for (int trial = 0; trial < 100; ++trial) {
                Rational v(1 + static_cast<int>(rng() % 30), 1 + static_cast<int>(rng() % 30));
                Rational m(1 + static_cast<int>(rng() % 30), 1 + static_cast<int>(rng() % 30));
                Rational u1 = unit(p), u2 = unit(p);
                if (cs_whittaker_sl2_exact(Rational(2), v, m, p) !=
                    cs_whittaker_sl2_exact(Rational(2), v * u1, m * u2, p)) {
                    o.fail("exact unit invariance failed");
                    return;
                }
                double lhs = cs_whittaker_sl2(Rational(7, 10), v, m, p);
                double rhs = cs_whittaker_sl2(Rational(7, 10), v * u1, m * u2, p);
                bool close = lhs == 0.0 ? rhs == 0.0 : std::fabs(lhs - rhs) <= 1e-12 * std::fabs(lhs);
                if (!close) {
                    o.fail("floating unit invariance failed");
                    return;
                }
            }
    });

    criterion(10, "Bessel accuracy: half-integer closed forms and the K2 recurrence", 5.0, [](Outcome& o) {
        for (double x = 0.01; x <= 50.0; x *= 1.1) {
            double base = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
            double k12 = bessel_k(BesselOrder(1), x);
            double k32 = bessel_k(BesselOrder(3), x);
            if (std::fabs(k12 - base) > 1e-12 * base) {
                o.fail("K_{1/2} closed form violated at x=" + std::to_string(x));
                return;
            }
            if (std::fabs(k32 - base * (1.0 + 1.0 / x)) > 1e-12 * base * (1.0 + 1.0 / x)) {
                o.fail("K_{3/2} closed form violated at x=" + std::to_string(x));
                return;
            }
        }
        for (double x = 0.1; x <= 50.0; x *= 1.07) {
            double lhs = bessel_k(BesselOrder::integer(2), x);
            double rhs = bessel_k(BesselOrder::integer(0), x) + (2.0 / x) * bessel_k(BesselOrder::integer(1), x);
            if (std::fabs(lhs - rhs) > 1e-10 * std::fabs(rhs)) {
                o.fail("K_2 recurrence violated at x=" + std::to_string(x));
                return;
            }
        }
    });

    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria FAILED\n";
    return 1;
}
