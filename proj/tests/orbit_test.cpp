#include <catch2/catch_amalgamated.hpp>

#include "nilorb/orbit.hpp"

#include <random>

using namespace nilorb;

namespace {

RationalMatrix elementary(int n, int i, int j) {  // 1-based E_ij
    RationalMatrix m(n);
    m.at(i - 1, j - 1) = 1;
    return m;
}

RationalMatrix jordan_matrix(const Partition& lambda) {
    const int n = lambda.n();
    RationalMatrix j(n);
    int offset = 0;
    for (int p : lambda.parts()) {
        for (int k = 0; k + 1 < p; ++k) j.at(offset + k, offset + k + 1) = 1;
        offset += p;
    }
    return j;
}

// Unit triangular factors make the conjugator trivially invertible.
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

}  // namespace

TEST_CASE("weighted Dynkin diagrams for the catalogued orbits") {
    CHECK(weighted_dynkin(Partition{2, 2}) == std::vector<int>{0, 2, 0});
    CHECK(weighted_dynkin(Partition{3, 1}) == std::vector<int>{2, 0, 2});
    CHECK(weighted_dynkin(Partition{1, 1, 1, 1}) == std::vector<int>{0, 0, 0});
    CHECK(weighted_dynkin(Partition{2, 1, 1}) == std::vector<int>{1, 0, 1});
    CHECK(weighted_dynkin(Partition{4}) == std::vector<int>{2, 2, 2});
}

TEST_CASE("weighted Dynkin labels always lie in {0,1,2}") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& lambda : all_partitions(n))
            for (int w : weighted_dynkin(lambda)) {
                CHECK(w >= 0);
                CHECK(w <= 2);
            }
}

TEST_CASE("orbit dimensions, both formulas") {
    CHECK(orbit_dimension(Partition{2, 2}) == 8);
    CHECK(orbit_dimension(Partition{4}) == 12);
    CHECK(orbit_dimension(Partition{1, 1, 1, 1}) == 0);
    // The grading/conjugate cross-check is built in; sweep every partition up to n = 8.
    for (int n = 2; n <= 8; ++n)
        for (const auto& lambda : all_partitions(n)) CHECK_NOTHROW(orbit_dimension(lambda));
}

TEST_CASE("grading pieces and V masks") {
    CHECK(v_mask(Partition{2, 1, 1}) == std::set<Position>{{1, 4}});
    CHECK(v_mask(Partition{2, 2}) == std::set<Position>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(v_mask(Partition{1, 1, 1, 1}).empty());
    for (int n = 2; n <= 6; ++n)
        for (const auto& lambda : all_partitions(n))
            for (const auto& [i, j] : v_mask(lambda)) CHECK(i < j);
}

TEST_CASE("jordan_type basics") {
    CHECK(jordan_type(RationalMatrix(4)) == Partition{1, 1, 1, 1});
    CHECK(jordan_type(elementary(4, 1, 2) + elementary(4, 3, 4)) == Partition{2, 2});
    RationalMatrix super(4);
    for (int i = 0; i < 3; ++i) super.at(i, i + 1) = 1;
    CHECK(jordan_type(super) == Partition{4});
    CHECK_THROWS_AS(jordan_type(RationalMatrix::identity(3)), std::domain_error);
    RationalMatrix mixed = elementary(3, 1, 2);
    mixed.at(2, 2) = 1;  // nilpotent part plus a fixed direction
    CHECK_THROWS_AS(jordan_type(mixed), std::domain_error);
}

TEST_CASE("jordan_type recovers planted Jordan forms") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto parts = all_partitions(n);
        Partition lambda = parts[rng() % parts.size()];
        RationalMatrix p = random_invertible(n, rng);
        RationalMatrix x = p * jordan_matrix(lambda) * p.inverse();
        CHECK(jordan_type(x) == lambda);
    }
}

TEST_CASE("jordan_type is conjugation invariant") {
    std::mt19937_64 rng(5150);
    RationalMatrix x = elementary(4, 1, 2) + elementary(4, 2, 3);
    for (int trial = 0; trial < 25; ++trial) {
        RationalMatrix g = random_invertible(4, rng);
        CHECK(jordan_type(g * x * g.inverse()) == jordan_type(x));
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(Partition{2, 1, 1}, Partition{2, 2}));
    CHECK(dominance_leq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominance_leq(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_FALSE(dominance_leq(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK_THROWS_AS(dominance_leq(Partition{2, 1}, Partition{2, 2}), std::domain_error);
}

TEST_CASE("dominance is a partial order for n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        auto parts = all_partitions(n);
        for (const auto& a : parts) {
            CHECK(dominance_leq(a, a));
            for (const auto& b : parts) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                for (const auto& c : parts)
                    if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
            }
        }
    }
}

TEST_CASE("hasse diagrams at small rank") {
    auto edges4 = hasse_cover_edges(4);
    REQUIRE(edges4.size() == 4);  // total order for n = 4
    auto has_edge = [&](const Partition& a, const Partition& b) {
        return std::find(edges4.begin(), edges4.end(), std::make_pair(a, b)) != edges4.end();
    };
    CHECK(has_edge(Partition{1, 1, 1, 1}, Partition{2, 1, 1}));
    CHECK(has_edge(Partition{2, 1, 1}, Partition{2, 2}));
    CHECK(has_edge(Partition{2, 2}, Partition{3, 1}));
    CHECK(has_edge(Partition{3, 1}, Partition{4}));
    auto edges3 = hasse_cover_edges(3);
    REQUIRE(edges3.size() == 2);
    auto edges2 = hasse_cover_edges(2);
    REQUIRE(edges2.size() == 1);
    CHECK(edges2[0].first == Partition{1, 1});
    CHECK(edges2[0].second == Partition{2});
}

TEST_CASE("jm_triple standard sl(2)") {
    auto triple = jm_triple(elementary(2, 1, 2));
    RationalMatrix h(2);
    h.at(0, 0) = 1;
    h.at(1, 1) = -1;
    CHECK(triple.H == h);
    CHECK(triple.Y == elementary(2, 2, 1));
}

TEST_CASE("jm_triple for a minimal representative") {
    for (int n : {3, 4, 5}) {
        auto triple = jm_triple(elementary(n, 1, 2));
        CHECK(triple.H.trace() == 0);
        // H is conjugate to diag(1, 0, ..., 0, -1): compare characteristic polynomials pointwise.
        for (int c = -3; c <= 3; ++c) {
            RationalMatrix shifted = RationalMatrix::identity(n) * Rational(c) - triple.H;
            Rational expected = Rational(c - 1) * rat_pow(Rational(c), n - 2) * Rational(c + 1);
            CHECK(shifted.determinant() == expected);
        }
    }
}

TEST_CASE("jm_triple satisfies the bracket relations on random nilpotents") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        auto parts = all_partitions(n);
        Partition lambda = parts[rng() % parts.size()];
        RationalMatrix p = random_invertible(n, rng);
        RationalMatrix x = p * jordan_matrix(lambda) * p.inverse();
        auto triple = jm_triple(x);  // throws unless the brackets hold exactly
        CHECK(bracket(triple.X, triple.Y) == triple.H);
        CHECK(jordan_type(triple.X) == lambda);
        if (!x.is_zero()) CHECK(jordan_type(triple.Y) == lambda);
    }
}

TEST_CASE("orbit catalogs") {
    auto cat4 = orbit_catalog(4);
    REQUIRE(cat4.size() == 5);
    std::vector<int> dims;
    for (const auto& rec : cat4) dims.push_back(rec.dimension);
    CHECK(dims == std::vector<int>{12, 10, 8, 6, 0});
    CHECK(cat4[2].partition == Partition{2, 2});
    CHECK(cat4[2].stabilizer_type == "A1");
    CHECK(cat4[2].bala_carter == "2A1");
    CHECK(cat4[3].v_mask == std::set<Position>{{1, 4}});

    auto cat3 = orbit_catalog(3);
    REQUIRE(cat3.size() == 3);
    CHECK(cat3[1].partition == Partition{2, 1});
    CHECK(cat3[1].dimension == 4);
    CHECK(cat3[1].bala_carter == "A1");

    CHECK_THROWS_AS(orbit_catalog(5), std::domain_error);
}

TEST_CASE("minimal representation functional dimensions") {
    CHECK(gkdim_minimal(ExceptionalGroup::E6) == 11);
    CHECK(gkdim_minimal(ExceptionalGroup::E7) == 17);
    CHECK(gkdim_minimal(ExceptionalGroup::E8) == 29);
}

TEST_CASE("matrix utilities") {
    auto m = parse_matrix("0,1,0,0;0,0,0,0;0,0,0,1;0,0,0,0", 4);
    CHECK(jordan_type(m) == Partition{2, 2});
    CHECK_THROWS_AS(parse_matrix("1,2;3", 2), std::domain_error);
    CHECK_THROWS_AS(parse_matrix("1,2", 2), std::domain_error);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        RationalMatrix g = random_invertible(4, rng);
        CHECK(g * g.inverse() == RationalMatrix::identity(4));
        CHECK((g * g.inverse()).determinant() == 1);
    }
    RationalMatrix r(3);
    r.at(0, 0) = Rational(1, 2);
    r.at(0, 1) = 1;
    r.at(1, 0) = Rational(1, 4);
    r.at(1, 1) = Rational(1, 2);
    CHECK(r.rank() == 1);
    CHECK(r.determinant() == 0);
}
