// Characters on unipotent radicals described by charge matrices, their Levi
// conjugation and the attachment of charge patterns to nilpotent orbits.
#pragma once

#include "nilorb/orbit.hpp"

#include <map>
#include <optional>

namespace nilorb {

/// A coordinate unipotent subgroup of SL(n): a bracket-closed set of strictly
/// upper positions, with the Levi it sits under and its abelianization.
struct ParabolicDescriptor {
    int n = 0;
    std::set<int> levi_roots;               // simple roots generating the Levi
    std::set<Position> radical_mask;        // strictly upper positions of u
    std::set<Position> abelianization_mask; // radical minus commutator positions

    bool operator==(const ParabolicDescriptor&) const = default;

    /// The standard parabolic with the given Levi simple roots; the radical
    /// consists of the positions crossing a block boundary.
    static ParabolicDescriptor standard(int n, std::set<int> levi) {
        ParabolicDescriptor d;
        d.n = n;
        d.levi_roots = std::move(levi);
        for (int r : d.levi_roots)
            if (r < 1 || r >= n) throw std::domain_error("ParabolicDescriptor: simple root out of range");
        // block id per row: a new block starts after every simple root not in the Levi
        std::vector<int> block(n, 0);
        for (int i = 1; i < n; ++i) block[i] = block[i - 1] + (d.levi_roots.count(i) ? 0 : 1);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (block[i - 1] != block[j - 1]) d.radical_mask.insert({i, j});
        d.finish();
        return d;
    }

    /// The subgroup V = U_{i >= 2} of an orbit's grading.
    static ParabolicDescriptor from_orbit(const Partition& lambda) {
        ParabolicDescriptor d;
        d.n = lambda.n();
        d.radical_mask = v_mask(lambda);
        auto diagram = weighted_dynkin(lambda);
        for (int i = 0; i < static_cast<int>(diagram.size()); ++i)
            if (diagram[i] == 0) d.levi_roots.insert(i + 1);
        d.finish();
        return d;
    }

    static ParabolicDescriptor maximal(int n, int alpha) {
        if (alpha < 1 || alpha >= n) throw std::domain_error("ParabolicDescriptor: maximal parabolic root out of range");
        std::set<int> levi;
        for (int r = 1; r < n; ++r)
            if (r != alpha) levi.insert(r);
        return standard(n, std::move(levi));
    }

private:
    void finish() {
        for (const auto& [i, j] : radical_mask) {
            if (!(1 <= i && i < j && j <= n))
                throw std::domain_error("ParabolicDescriptor: radical positions must be strictly upper");
            for (const auto& [k, l] : radical_mask)
                if (j == k && !radical_mask.count({i, l}))
                    throw std::domain_error("ParabolicDescriptor: radical not closed under brackets");
        }
        abelianization_mask = radical_mask;
        for (const auto& [i, j] : radical_mask)
            for (const auto& [k, l] : radical_mask)
                if (j == k) abelianization_mask.erase({i, l});
    }
};

/// psi_U(u) = e(tr M^T u), stored as the charges of M on the abelianization.
struct CharacterMatrix {
    ParabolicDescriptor parabolic;
    std::map<Position, Rational> charges;

    CharacterMatrix() = default;
    CharacterMatrix(ParabolicDescriptor p, std::map<Position, Rational> c)
        : parabolic(std::move(p)), charges(std::move(c)) {
        for (auto it = charges.begin(); it != charges.end();) {
            if (!parabolic.abelianization_mask.count(it->first))
                throw std::domain_error("CharacterMatrix: charge outside the abelianization");
            it = it->second == 0 ? charges.erase(it) : std::next(it);
        }
    }

    bool operator==(const CharacterMatrix&) const = default;

    bool is_trivial() const { return charges.empty(); }

    Rational charge(Position p) const {
        auto it = charges.find(p);
        return it == charges.end() ? Rational(0) : it->second;
    }

    /// The Lie-algebra element with the charges at their positions.
    RationalMatrix embed() const {
        RationalMatrix x(parabolic.n);
        for (const auto& [pos, m] : charges) x.at(pos.first - 1, pos.second - 1) = m;
        return x;
    }
};

/// M' with F_U(M; g) = F_U(M'; l g), i.e. M' = (l^T)^{-1} M l^T.
inline CharacterMatrix conjugate_character(const CharacterMatrix& m, const RationalMatrix& l) {
    if (l.size() != m.parabolic.n) throw std::domain_error("conjugate_character: size mismatch");
    if (l.determinant() == 0) throw std::domain_error("conjugate_character: conjugator is singular");
    RationalMatrix lt = l.transpose();
    RationalMatrix lt_inv = lt.inverse();
    RationalMatrix conj = lt_inv * m.embed() * lt;

    std::map<Position, Rational> out;
    for (int i = 0; i < m.parabolic.n; ++i)
        for (int j = 0; j < m.parabolic.n; ++j) {
            if (conj.at(i, j) == 0) continue;
            Position pos{i + 1, j + 1};
            if (!m.parabolic.abelianization_mask.count(pos))
                throw std::domain_error("conjugate_character: conjugator does not preserve the radical");
            out[pos] = conj.at(i, j);
        }
    CharacterMatrix result(m.parabolic, std::move(out));

    // Pairing check on the spanning set of the radical: tr(M'^T l E_ij l^{-1}) = tr(M^T E_ij).
    RationalMatrix l_inv = l.inverse();
    RationalMatrix mt = m.embed().transpose();
    RationalMatrix rt = result.embed().transpose();
    for (const auto& [i, j] : m.parabolic.radical_mask) {
        RationalMatrix e(m.parabolic.n);
        e.at(i - 1, j - 1) = 1;
        if ((rt * (l * e * l_inv)).trace() != (mt * e).trace())
            throw std::logic_error("conjugate_character: pairing identity failed");
    }
    return result;
}

namespace detail {

struct ShapePredicate {
    Partition orbit;
    std::set<Position> mask;
    // nonzero iff the charges lie in the shape's own orbit
    Rational (*value)(const CharacterMatrix&);
};

inline const std::vector<ShapePredicate>& catalog_shapes() {
    static const std::vector<ShapePredicate> shapes = {
        {Partition{4}, v_mask(Partition{4}),
         [](const CharacterMatrix& m) { return m.charge({1, 2}) * m.charge({2, 3}) * m.charge({3, 4}); }},
        {Partition{3, 1}, v_mask(Partition{3, 1}),
         [](const CharacterMatrix& m) {
             return m.charge({1, 2}) * m.charge({2, 4}) + m.charge({1, 3}) * m.charge({3, 4});
         }},
        {Partition{2, 2}, v_mask(Partition{2, 2}),
         [](const CharacterMatrix& m) {
             return m.charge({1, 3}) * m.charge({2, 4}) - m.charge({1, 4}) * m.charge({2, 3});
         }},
        {Partition{2, 1, 1}, v_mask(Partition{2, 1, 1}), [](const CharacterMatrix& m) { return m.charge({1, 4}); }},
    };
    return shapes;
}

}  // namespace detail

/// Jordan type of the embedded charges; on the catalogued V shapes the explicit
/// charge condition is evaluated as well and must agree.
inline Partition attach_orbit(const CharacterMatrix& m) {
    Partition orbit = jordan_type(m.embed());
    if (m.parabolic.n == 4) {
        for (const auto& shape : detail::catalog_shapes()) {
            if (m.parabolic.radical_mask != shape.mask) continue;
            bool predicate = shape.value(m) != 0;
            if (predicate != (orbit == shape.orbit))
                throw std::logic_error("attach_orbit: charge condition disagrees with the Jordan type for " +
                                       shape.orbit.str());
        }
    }
    return orbit;
}

}  // namespace nilorb
