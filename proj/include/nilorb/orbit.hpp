// Partition-labelled nilpotent orbit data for sl(n): weighted Dynkin diagrams,
// gradings, dimensions, Jordan types, sl(2)-triples and the small-rank catalogs.
#pragma once

#include "nilorb/matrix.hpp"
#include "nilorb/partition.hpp"

#include <map>
#include <set>

namespace nilorb {

using Position = std::pair<int, int>;  // 1-based matrix position

/// H-eigenvalues on the standard basis: the multiset {p-1, p-3, ..., 1-p} over parts, sorted descending.
inline std::vector<int> dynkin_torus_weights(const Partition& lambda) {
    std::vector<int> h;
    for (int p : lambda.parts())
        for (int w = p - 1; w >= 1 - p; w -= 2) h.push_back(w);
    std::sort(h.rbegin(), h.rend());
    return h;
}

/// Weighted Dynkin diagram: consecutive differences of the sorted H-eigenvalues.
inline std::vector<int> weighted_dynkin(const Partition& lambda) {
    auto h = dynkin_torus_weights(lambda);
    std::vector<int> d;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) d.push_back(h[i] - h[i + 1]);
    return d;
}

/// The H-grading of sl(n) by matrix position; the traceless diagonal counts into degree 0.
inline std::map<int, std::set<Position>> grading_pieces(const Partition& lambda) {
    auto h = dynkin_torus_weights(lambda);
    int n = static_cast<int>(h.size());
    std::map<int, std::set<Position>> pieces;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            pieces[h[i] - h[j]].insert({i + 1, j + 1});
        }
    return pieces;
}

/// Positions of V = U_{i >= 2} in the sorted-H basis.
inline std::set<Position> v_mask(const Partition& lambda) {
    std::set<Position> mask;
    for (const auto& [degree, positions] : grading_pieces(lambda))
        if (degree >= 2) mask.insert(positions.begin(), positions.end());
    return mask;
}

/// dim of the orbit, computed from the grading and from the conjugate partition; both must agree.
inline int orbit_dimension(const Partition& lambda) {
    const int n = lambda.n();
    auto h = dynkin_torus_weights(lambda);
    int dim_g0 = n - 1;  // traceless diagonal
    int dim_g1 = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (h[i] == h[j]) ++dim_g0;
            if (h[i] - h[j] == 1) ++dim_g1;
        }
    int by_grading = (n * n - 1) - dim_g0 - dim_g1;

    int by_conjugate = n * n;
    const Partition transpose = lambda.conjugate();
    for (int t : transpose.parts()) by_conjugate -= t * t;

    if (by_grading != by_conjugate)
        throw std::logic_error("orbit_dimension: grading and conjugate-partition formulas disagree for " + lambda.str());
    return by_grading;
}

/// Jordan block sizes of a nilpotent matrix, from the rank sequence of its powers.
inline Partition jordan_type(const RationalMatrix& x) {
    const int n = x.size();
    std::vector<int> ranks{n};
    RationalMatrix power = RationalMatrix::identity(n);
    for (int k = 1; ranks.back() > 0; ++k) {
        if (k > n)
            throw std::domain_error("jordan_type: matrix is not nilpotent (rank of X^" + std::to_string(n) + " is positive)");
        power = power * x;
        int r = power.rank();
        if (r >= ranks.back() && r > 0)
            throw std::domain_error("jordan_type: matrix is not nilpotent (rank stalls at X^" + std::to_string(k) + ")");
        ranks.push_back(r);
    }
    std::vector<int> blocks_ge;  // blocks_ge[k-1] = #blocks of size >= k
    for (std::size_t k = 1; k < ranks.size(); ++k) blocks_ge.push_back(ranks[k - 1] - ranks[k]);
    return Partition(blocks_ge).conjugate();
}

struct JMTriple {
    RationalMatrix X, H, Y;
};

namespace detail {

/// Exact kernel basis of m, as row vectors.
inline std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    const int n = m.size();
    RationalMatrix a = m;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (a.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(a.at(row, j), a.at(p, j));
        Rational inv = Rational(1) / a.at(row, col);
        for (int j = 0; j < n; ++j) a.at(row, j) *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (int j = 0; j < n; ++j) a.at(r, j) -= f * a.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<Rational> apply(const RationalMatrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(v.size(), Rational(0));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (m.at(i, j) != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

}  // namespace detail

/// A Jacobson-Morozov triple through x, built from an exact Jordan basis.
inline JMTriple jm_triple(const RationalMatrix& x) {
    const int n = x.size();
    Partition lambda = jordan_type(x);  // also validates nilpotency
    const int longest = lambda.part(0);

    std::vector<std::vector<std::vector<Rational>>> kernels(longest + 1);
    RationalMatrix power = RationalMatrix::identity(n);
    for (int k = 0; k <= longest; ++k) {
        kernels[k] = detail::kernel_basis(power);  // ker(x^k); ker(x^0) = 0
        power = power * x;
    }

    // Chain tops, deepest blocks first. At stage k the span of ker(x^{k-1}) and the
    // pushed-down vectors from longer chains is extended inside ker(x^k).
    struct Chain {
        std::vector<Rational> top;
        int length;
    };
    std::vector<Chain> chains;
    std::vector<std::vector<Rational>> level;  // vectors of the current grade
    for (int k = longest; k >= 1; --k) {
        for (auto& v : level) v = detail::apply(x, v);
        RowSpace span(n);
        for (const auto& v : kernels[k - 1]) span.insert(v);
        for (const auto& v : level) span.insert(v);
        for (const auto& cand : kernels[k]) {
            std::vector<Rational> c = cand;
            if (!span.insert(c)) continue;
            chains.push_back({cand, k});
            level.push_back(cand);
        }
    }

    std::stable_sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) { return a.length > b.length; });

    RationalMatrix p(n);
    RationalMatrix h_j(n);
    RationalMatrix y_j(n);
    int col = 0;
    for (const auto& chain : chains) {
        const int len = chain.length;
        // Basis (x^{len-1} t, ..., x t, t) puts the block in standard superdiagonal form.
        std::vector<std::vector<Rational>> descent{chain.top};
        for (int j = 1; j < len; ++j) descent.push_back(detail::apply(x, descent.back()));
        for (int j = 0; j < len; ++j) {
            const auto& v = descent[len - 1 - j];
            for (int i = 0; i < n; ++i) p.at(i, col + j) = v[i];
            h_j.at(col + j, col + j) = len - 1 - 2 * j;
        }
        for (int j = 1; j < len; ++j) y_j.at(col + j, col + j - 1) = Rational(j) * (len - j);
        col += len;
    }

    RationalMatrix p_inv = p.inverse();
    JMTriple triple{x, p * h_j * p_inv, p * y_j * p_inv};
    if (!(bracket(triple.X, triple.Y) == triple.H) || !(bracket(triple.H, triple.X) == triple.X * Rational(2)) ||
        !(bracket(triple.H, triple.Y) == triple.Y * Rational(-2)))
        throw std::logic_error("jm_triple: bracket relations failed");
    return triple;
}

struct OrbitRecord {
    Partition partition;
    std::string bala_carter;
    int dimension = 0;
    std::vector<int> dynkin_weights;
    std::string stabilizer_type;
    std::set<Position> v_mask;
};

/// The sl(3)/sl(4) orbit catalogs: labels are stored, dimensions and diagrams computed and cross-checked.
inline std::vector<OrbitRecord> orbit_catalog(int n) {
    struct Entry {
        Partition partition;
        const char* bala_carter;
        const char* stabilizer;
        int expected_dim;
        std::vector<int> expected_diagram;
    };
    std::vector<Entry> entries;
    if (n == 4) {
        entries = {{Partition{4}, "A3", "1", 12, {2, 2, 2}},
                   {Partition{3, 1}, "A2", "T1", 10, {2, 0, 2}},
                   {Partition{2, 2}, "2A1", "A1", 8, {0, 2, 0}},
                   {Partition{2, 1, 1}, "A1", "A1xT1", 6, {1, 0, 1}},
                   {Partition{1, 1, 1, 1}, "0", "A3", 0, {0, 0, 0}}};
    } else if (n == 3) {
        entries = {{Partition{3}, "A2", "1", 6, {2, 2}},
                   {Partition{2, 1}, "A1", "T1", 4, {1, 1}},
                   {Partition{1, 1, 1}, "0", "A2", 0, {0, 0}}};
    } else {
        throw std::domain_error("orbit_catalog: only n = 3 and n = 4 are catalogued");
    }
    std::vector<OrbitRecord> records;
    for (const auto& e : entries) {
        OrbitRecord rec;
        rec.partition = e.partition;
        rec.bala_carter = e.bala_carter;
        rec.stabilizer_type = e.stabilizer;
        rec.dimension = orbit_dimension(e.partition);
        rec.dynkin_weights = weighted_dynkin(e.partition);
        rec.v_mask = v_mask(e.partition);
        if (rec.dimension != e.expected_dim || rec.dynkin_weights != e.expected_diagram)
            throw std::logic_error("orbit_catalog: computed data disagrees with the catalog for " + e.partition.str());
        if (rec.dimension % 2 != 0) throw std::logic_error("orbit_catalog: odd orbit dimension");
        records.push_back(std::move(rec));
    }
    return records;
}

enum class ExceptionalGroup { E6, E7, E8 };

inline std::string group_name(ExceptionalGroup g) {
    switch (g) {
        case ExceptionalGroup::E6: return "E6";
        case ExceptionalGroup::E7: return "E7";
        default: return "E8";
    }
}

/// Functional dimension of the minimal representation.
inline int gkdim_minimal(ExceptionalGroup g) {
    switch (g) {
        case ExceptionalGroup::E6: return 11;
        case ExceptionalGroup::E7: {
            // Half the minimal-orbit dimension, dim e7 - dim g(0) - dim g(1) = 133 - 67 - 32.
            constexpr int min_orbit_dim = 133 - 67 - 32;
            static_assert(min_orbit_dim / 2 == 17);
            return 17;
        }
        default: return 29;
    }
}

}  // namespace nilorb
