// Dense square matrices over Q with exact arithmetic.
#pragma once

#include "nilorb/numeric.hpp"

#include <sstream>
#include <vector>

namespace nilorb {

class RationalMatrix {
public:
    explicit RationalMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, Rational(0)) {
        if (n <= 0) throw std::domain_error("RationalMatrix: size must be positive");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }
    Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const RationalMatrix&) const = default;

    RationalMatrix operator*(const RationalMatrix& o) const {
        require_same(o);
        RationalMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (int j = 0; j < n_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    RationalMatrix operator+(const RationalMatrix& o) const {
        require_same(o);
        RationalMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
        return r;
    }

    RationalMatrix operator-(const RationalMatrix& o) const {
        require_same(o);
        RationalMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    RationalMatrix operator*(const Rational& c) const {
        RationalMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
        return r;
    }

    RationalMatrix transpose() const {
        RationalMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    RationalMatrix pow(unsigned k) const {
        RationalMatrix r = identity(n_);
        RationalMatrix b = *this;
        while (k) {
            if (k & 1u) r = r * b;
            b = b * b;
            k >>= 1u;
        }
        return r;
    }

    Rational trace() const {
        Rational t = 0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (x != 0) return false;
        return true;
    }

    /// Rank by fraction-free (Bareiss) elimination on the denominator-cleared matrix.
    int rank() const {
        std::vector<std::vector<Int>> a(n_, std::vector<Int>(n_));
        for (int i = 0; i < n_; ++i) {
            Int l(1);
            for (int j = 0; j < n_; ++j) l = lcm(l, den(at(i, j)));
            for (int j = 0; j < n_; ++j) a[i][j] = num(at(i, j)) * (l / den(at(i, j)));
        }
        int rank = 0;
        Int prev(1);
        for (int col = 0; col < n_ && rank < n_; ++col) {
            int pivot = -1;
            for (int r = rank; r < n_; ++r)
                if (a[r][col] != 0) { pivot = r; break; }
            if (pivot < 0) continue;
            std::swap(a[rank], a[pivot]);
            for (int r = rank + 1; r < n_; ++r) {
                for (int c = col + 1; c < n_; ++c)
                    a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
                a[r][col] = 0;
            }
            prev = a[rank][col];
            ++rank;
        }
        return rank;
    }

    Rational determinant() const {
        RationalMatrix a = *this;
        Rational det(1);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (a.at(r, col) != 0) { pivot = r; break; }
            if (pivot < 0) return Rational(0);
            if (pivot != col) {
                for (int j = 0; j < n_; ++j) std::swap(a.at(col, j), a.at(pivot, j));
                det = -det;
            }
            det *= a.at(col, col);
            Rational inv = Rational(1) / a.at(col, col);
            for (int r = col + 1; r < n_; ++r) {
                Rational f = a.at(r, col) * inv;
                if (f == 0) continue;
                for (int j = col; j < n_; ++j) a.at(r, j) -= f * a.at(col, j);
            }
        }
        return det;
    }

    RationalMatrix inverse() const {
        RationalMatrix a = *this;
        RationalMatrix inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (a.at(r, col) != 0) { pivot = r; break; }
            if (pivot < 0) throw std::domain_error("RationalMatrix::inverse: singular matrix");
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(col, j), a.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
            Rational d = Rational(1) / a.at(col, col);
            for (int j = 0; j < n_; ++j) {
                a.at(col, j) *= d;
                inv.at(col, j) *= d;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || a.at(r, col) == 0) continue;
                Rational f = a.at(r, col);
                for (int j = 0; j < n_; ++j) {
                    a.at(r, j) -= f * a.at(col, j);
                    inv.at(r, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    std::string str() const {
        std::ostringstream os;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) os << (j ? "," : "") << format_rational(at(i, j));
            if (i + 1 < n_) os << ";";
        }
        return os.str();
    }

private:
    void require_same(const RationalMatrix& o) const {
        if (o.n_ != n_) throw std::domain_error("RationalMatrix: size mismatch");
    }

    int n_;
    std::vector<Rational> e_;
};

/// Commutator [A, B] = AB - BA.
inline RationalMatrix bracket(const RationalMatrix& a, const RationalMatrix& b) {
    return a * b - b * a;
}

/// Parses "a,b;c,d" row-major rational entries into an n x n matrix.
inline RationalMatrix parse_matrix(const std::string& text, int n) {
    RationalMatrix m(n);
    std::istringstream rows(text);
    std::string row;
    int i = 0;
    while (std::getline(rows, row, ';')) {
        if (i >= n) throw std::domain_error("parse_matrix: too many rows");
        std::istringstream cells(row);
        std::string cell;
        int j = 0;
        while (std::getline(cells, cell, ',')) {
            if (j >= n) throw std::domain_error("parse_matrix: too many columns in row " + std::to_string(i + 1));
            m.at(i, j) = parse_rational(cell);
            ++j;
        }
        if (j != n) throw std::domain_error("parse_matrix: row " + std::to_string(i + 1) + " has " + std::to_string(j) + " entries, expected " + std::to_string(n));
        ++i;
    }
    if (i != n) throw std::domain_error("parse_matrix: expected " + std::to_string(n) + " rows");
    return m;
}

/// Incremental exact Gaussian elimination for independence tests.
class RowSpace {
public:
    explicit RowSpace(int dim) : dim_(dim) {}

    /// Adds v to the span; returns false when v was already dependent.
    bool insert(std::vector<Rational> v) {
        reduce(v);
        int p = pivot_of(v);
        if (p < 0) return false;
        Rational inv = Rational(1) / v[p];
        for (auto& x : v) x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::vector<Rational> v) const {
        reduce(v);
        return pivot_of(v) < 0;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(std::vector<Rational>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Rational f = v[pivots_[k]];
            if (f == 0) continue;
            for (int j = 0; j < dim_; ++j) v[j] -= f * rows_[k][j];
        }
    }
    int pivot_of(const std::vector<Rational>& v) const {
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0) return j;
        return -1;
    }

    int dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

}  // namespace nilorb
