// Classification of characters on the maximal parabolics of SL(4) and the
// SL(3) two-charge reduction, with explicit conjugators.
#pragma once

#include "nilorb/parabolic.hpp"

namespace nilorb {

struct ClassificationResult {
    Partition orbit;
    RationalMatrix conjugator;
    CharacterMatrix canonical_charges;
    RationalMatrix weyl_prefix;

    ClassificationResult(int n) : conjugator(RationalMatrix::identity(n)), weyl_prefix(RationalMatrix::identity(n)) {}
};

namespace detail {

/// Signed basis swap (a b), determinant +1, 1-based indices.
inline RationalMatrix signed_swap(int n, int a, int b) {
    RationalMatrix w = RationalMatrix::identity(n);
    w.at(a - 1, a - 1) = 0;
    w.at(b - 1, b - 1) = 0;
    w.at(a - 1, b - 1) = -1;
    w.at(b - 1, a - 1) = 1;
    return w;
}

}  // namespace detail

/// Maximal-parabolic classification for SL(4): every non-trivial character is
/// Levi-conjugate to a single-charge form attached to (2,1,1), except the
/// non-degenerate alpha_2 characters, which are attached to (2,2).
inline ClassificationResult classify_maximal_parabolic(int alpha, const CharacterMatrix& m) {
    if (alpha < 1 || alpha > 3) throw std::domain_error("classify_maximal_parabolic: alpha must be 1, 2 or 3");
    if (m.parabolic != ParabolicDescriptor::maximal(4, alpha))
        throw std::domain_error("classify_maximal_parabolic: character is not on the alpha_" + std::to_string(alpha) +
                                " radical");
    if (m.is_trivial()) throw std::domain_error("classify_maximal_parabolic: character must be non-trivial");

    ClassificationResult result(4);

    if (alpha == 2) {
        Rational det = m.charge({1, 3}) * m.charge({2, 4}) - m.charge({1, 4}) * m.charge({2, 3});
        if (det != 0) {
            result.orbit = Partition{2, 2};
            result.canonical_charges = m;
            return result;
        }
        // Degenerate: move a charge into the (1,4) slot, then clear the rest.
        RationalMatrix w = RationalMatrix::identity(4);
        if (m.charge({1, 4}) == 0) {
            if (m.charge({1, 3}) != 0) w = detail::signed_swap(4, 3, 4);
            else if (m.charge({2, 4}) != 0) w = detail::signed_swap(4, 1, 2);
            else w = detail::signed_swap(4, 3, 4) * detail::signed_swap(4, 1, 2);
        }
        CharacterMatrix moved = conjugate_character(m, w);
        Rational m2 = moved.charge({1, 4});
        RationalMatrix l = RationalMatrix::identity(4);
        l.at(0, 1) = moved.charge({2, 4}) / m2;
        l.at(2, 3) = -moved.charge({1, 3}) / m2;
        result.orbit = Partition{2, 1, 1};
        result.weyl_prefix = w;
        result.conjugator = l;
        result.canonical_charges = conjugate_character(moved, l);
        return result;
    }

    if (alpha == 1) {
        // Charges sit on the first row; land the non-zero one at (1,4).
        RationalMatrix w = RationalMatrix::identity(4);
        if (m.charge({1, 4}) == 0) {
            if (m.charge({1, 3}) != 0) w = detail::signed_swap(4, 3, 4);
            else w = detail::signed_swap(4, 2, 4);
        }
        CharacterMatrix moved = conjugate_character(m, w);
        Rational m3 = moved.charge({1, 4});
        RationalMatrix l = RationalMatrix::identity(4);
        l.at(1, 3) = -moved.charge({1, 2}) / m3;
        l.at(2, 3) = -moved.charge({1, 3}) / m3;
        result.orbit = Partition{2, 1, 1};
        result.weyl_prefix = w;
        result.conjugator = l;
        result.canonical_charges = conjugate_character(moved, l);
        return result;
    }

    // alpha == 3: charges sit on the last column; land the non-zero one at (1,4).
    RationalMatrix w = RationalMatrix::identity(4);
    if (m.charge({1, 4}) == 0) {
        if (m.charge({2, 4}) != 0) w = detail::signed_swap(4, 1, 2);
        else w = detail::signed_swap(4, 1, 3);
    }
    CharacterMatrix moved = conjugate_character(m, w);
    Rational m3 = moved.charge({1, 4});
    RationalMatrix l = RationalMatrix::identity(4);
    l.at(0, 1) = moved.charge({2, 4}) / m3;
    l.at(0, 2) = moved.charge({3, 4}) / m3;
    result.orbit = Partition{2, 1, 1};
    result.weyl_prefix = w;
    result.conjugator = l;
    result.canonical_charges = conjugate_character(moved, l);
    return result;
}

/// SL(3) first-row radical: bring (m1, m2) to a single canonical charge.
/// Returns the surviving charge and the Levi element l_U with
/// F_U(m1, m2; g) = F_U(0, m'; l_U g).
inline std::pair<Rational, RationalMatrix> sl3_parabolic_reduce(const Rational& m1, const Rational& m2) {
    if (m1 == 0 && m2 == 0) throw std::domain_error("sl3_parabolic_reduce: both charges vanish");
    if (m2 != 0) {
        RationalMatrix l = RationalMatrix::identity(3);
        l.at(1, 2) = -m1 / m2;
        return {m2, l};
    }
    RationalMatrix l(3);
    l.at(0, 0) = -1;
    l.at(1, 2) = -1;
    l.at(2, 1) = -1;
    return {m1, l};
}

}  // namespace nilorb
