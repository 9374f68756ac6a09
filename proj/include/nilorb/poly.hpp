// Sparse multivariate polynomials and rational functions over Q, plus small
// matrices over them. Equality of fractions is decided by cross-multiplication,
// so no multivariate gcd is needed.
#pragma once

#include "nilorb/matrix.hpp"
#include "nilorb/numeric.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <vector>

namespace nilorb {

namespace symtab {

struct Table {
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::mutex mutex;
};

inline Table& table() {
    static Table t;
    return t;
}

inline int intern(const std::string& name) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
    int id = static_cast<int>(t.names.size());
    t.names.push_back(name);
    t.ids.emplace(name, id);
    return id;
}

inline std::string name(int id) {
    auto& t = table();
    std::lock_guard lock(t.mutex);
    return t.names.at(static_cast<std::size_t>(id));
}

}  // namespace symtab

/// Product of variable powers; factors sorted by variable id, exponents > 0.
struct Monomial {
    std::vector<std::pair<int, int>> factors;

    auto operator<=>(const Monomial&) const = default;

    bool is_one() const { return factors.empty(); }
    int degree_in(int var) const {
        for (const auto& [v, e] : factors)
            if (v == var) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        auto a = factors.begin(), b = o.factors.begin();
        while (a != factors.end() || b != o.factors.end()) {
            if (b == o.factors.end() || (a != factors.end() && a->first < b->first)) r.factors.push_back(*a++);
            else if (a == factors.end() || b->first < a->first) r.factors.push_back(*b++);
            else {
                r.factors.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return r;
    }
};

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    Poly(int c) : Poly(Rational(c)) {}

    static Poly variable(const std::string& name) { return variable_id(symtab::intern(name)); }
    static Poly variable_id(int id) {
        Poly p;
        p.terms_[Monomial{{{id, 1}}}] = 1;
        return p;
    }
    static Poly mono(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
    Rational constant_value() const {
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_.empty() ? Rational(0) : terms_.begin()->second;
    }

    bool contains(int var) const {
        for (const auto& [m, c] : terms_)
            if (m.degree_in(var) > 0) return true;
        return false;
    }

    std::set<int> variables() const {
        std::set<int> vars;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors) vars.insert(v);
        return vars;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) {
            auto [it, fresh] = terms_.try_emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        return r += o;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m = ma * mb;
                Rational prod = ca * cb;
                auto [it, fresh] = r.terms_.try_emplace(m, prod);
                if (!fresh) {
                    it->second += prod;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }
    Poly operator*(const Rational& c) const {
        if (c == 0) return Poly();
        Poly r = *this;
        for (auto& [m, v] : r.terms_) v *= c;
        return r;
    }

    bool operator==(const Poly&) const = default;

    Poly derivative(int var) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int e = m.degree_in(var);
            if (e == 0) continue;
            Monomial d;
            for (const auto& [v, k] : m.factors) {
                if (v == var) {
                    if (k > 1) d.factors.emplace_back(v, k - 1);
                } else {
                    d.factors.emplace_back(v, k);
                }
            }
            r.terms_[d] += c * e;
            if (r.terms_[d] == 0) r.terms_.erase(d);
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (!first) {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            } else if (a < 0 && (a == -1 && !m.is_one())) {
                os << "-";
                a = -a;
            }
            first = false;
            bool unit = a == 1 && !m.is_one();
            if (!unit) os << format_rational(a);
            bool star = !unit;
            for (const auto& [v, e] : m.factors) {
                if (star) os << "*";
                os << symtab::name(v);
                if (e > 1) os << "^" << e;
                star = true;
            }
        }
        return os.str();
    }

    bool needs_brackets() const { return terms_.size() > 1; }

private:
    std::map<Monomial, Rational> terms_;
};

/// Quotient of polynomials; denominator never zero. Normalized just enough to
/// keep printing stable: monomial content cancelled and the denominator's
/// leading coefficient scaled to 1.
class Frac {
public:
    Frac() : num_(), den_(1) {}
    Frac(const Rational& c) : num_(c), den_(1) {}
    Frac(int c) : num_(c), den_(1) {}
    Frac(const Poly& p) : num_(p), den_(1) {}
    Frac(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("Frac: zero denominator");
        normalize();
    }

    static Frac variable(const std::string& name) { return Frac(Poly::variable(name)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }
    bool contains(int var) const { return num_.contains(var) || den_.contains(var); }

    std::set<int> variables() const {
        auto vars = num_.variables();
        auto dv = den_.variables();
        vars.insert(dv.begin(), dv.end());
        return vars;
    }

    Frac operator-() const { return Frac(-num_, den_); }
    Frac operator+(const Frac& o) const { return Frac(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Frac operator-(const Frac& o) const { return Frac(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Frac operator*(const Frac& o) const { return Frac(num_ * o.num_, den_ * o.den_); }
    Frac operator/(const Frac& o) const {
        if (o.is_zero()) throw std::domain_error("Frac: division by zero");
        return Frac(num_ * o.den_, den_ * o.num_);
    }
    Frac& operator+=(const Frac& o) { return *this = *this + o; }
    Frac& operator-=(const Frac& o) { return *this = *this - o; }
    Frac& operator*=(const Frac& o) { return *this = *this * o; }

    bool operator==(const Frac& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const Frac& o) const { return !(*this == o); }

    Frac derivative(int var) const {
        return Frac(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
    }

    std::string str() const {
        if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
        std::string n = num_.needs_brackets() ? "(" + num_.str() + ")" : num_.str();
        std::string d = den_.needs_brackets() ? "(" + den_.str() + ")" : den_.str();
        return n + "/" + d;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        // cancel the common monomial content
        auto content = [](const Poly& p) {
            std::map<int, int> mins;
            bool first = true;
            for (const auto& [m, c] : p.terms()) {
                std::map<int, int> cur;
                for (const auto& [v, e] : m.factors) cur[v] = e;
                if (first) {
                    mins = cur;
                    first = false;
                } else {
                    for (auto it = mins.begin(); it != mins.end();) {
                        auto f = cur.find(it->first);
                        if (f == cur.end()) it = mins.erase(it);
                        else {
                            it->second = std::min(it->second, f->second);
                            ++it;
                        }
                    }
                }
            }
            return mins;
        };
        auto cn = content(num_), cd = content(den_);
        std::map<int, int> common;
        for (const auto& [v, e] : cn) {
            auto it = cd.find(v);
            if (it != cd.end()) common[v] = std::min(e, it->second);
        }
        if (!common.empty()) {
            auto strip = [&](const Poly& p) {
                Poly out;
                for (const auto& [m, c] : p.terms()) {
                    Monomial reduced;
                    for (const auto& [v, e] : m.factors) {
                        auto it = common.find(v);
                        int drop = it == common.end() ? 0 : it->second;
                        if (e - drop > 0) reduced.factors.emplace_back(v, e - drop);
                    }
                    out += Poly::mono(reduced, c);
                }
                return out;
            };
            num_ = strip(num_);
            den_ = strip(den_);
        }
        // scale the denominator's leading coefficient to 1
        Rational lead = den_.terms().begin()->second;
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
        if (den_.is_constant()) den_ = Poly(1);
        else if (num_ == den_) {
            num_ = Poly(1);
            den_ = Poly(1);
        }
    }

    Poly num_, den_;
};

/// p with every mapped variable replaced by the given rational function.
inline Frac substitute(const Poly& p, const std::map<int, Frac>& map) {
    Frac out(0);
    for (const auto& [m, c] : p.terms()) {
        Frac term{Rational(c)};
        Monomial untouched;
        for (const auto& [v, e] : m.factors) {
            auto it = map.find(v);
            if (it == map.end()) {
                untouched.factors.emplace_back(v, e);
                continue;
            }
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        term *= Frac(Poly::mono(untouched, Rational(1)));
        out += term;
    }
    return out;
}

inline Frac substitute(const Frac& f, const std::map<int, Frac>& map) {
    return substitute(f.num(), map) / substitute(f.den(), map);
}

inline Frac substitute(const Frac& f, const std::map<std::string, Frac>& map) {
    std::map<int, Frac> by_id;
    for (const auto& [name, value] : map) by_id.emplace(symtab::intern(name), value);
    return substitute(f, by_id);
}

/// Square matrix over rational functions.
class FracMatrix {
public:
    explicit FracMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, Frac(0)) {
        if (n <= 0) throw std::domain_error("FracMatrix: size must be positive");
    }

    static FracMatrix identity(int n) {
        FracMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Frac(1);
        return m;
    }

    static FracMatrix from_rational(const RationalMatrix& r) {
        FracMatrix m(r.size());
        for (int i = 0; i < r.size(); ++i)
            for (int j = 0; j < r.size(); ++j) m.at(i, j) = Frac(r.at(i, j));
        return m;
    }

    int size() const { return n_; }
    Frac& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Frac& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    FracMatrix operator*(const FracMatrix& o) const {
        if (o.n_ != n_) throw std::domain_error("FracMatrix: size mismatch");
        FracMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Frac& a = at(i, k);
                if (a.is_zero()) continue;
                for (int j = 0; j < n_; ++j) {
                    if (o.at(k, j).is_zero()) continue;
                    r.at(i, j) += a * o.at(k, j);
                }
            }
        return r;
    }

    FracMatrix operator-(const FracMatrix& o) const {
        FracMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
        return r;
    }

    bool operator==(const FracMatrix& o) const {
        if (o.n_ != n_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool contains(int var) const {
        for (const auto& x : e_)
            if (x.contains(var)) return true;
        return false;
    }

    FracMatrix substituted(const std::map<int, Frac>& map) const {
        FracMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = substitute(e_[i], map);
        return r;
    }

    Frac determinant() const {
        FracMatrix a = *this;
        Frac det(1);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (!a.at(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) return Frac(0);
            if (pivot != col) {
                for (int j = 0; j < n_; ++j) std::swap(a.at(col, j), a.at(pivot, j));
                det = -det;
            }
            det *= a.at(col, col);
            Frac inv = Frac(1) / a.at(col, col);
            for (int r = col + 1; r < n_; ++r) {
                Frac f = a.at(r, col) * inv;
                if (f.is_zero()) continue;
                for (int j = col; j < n_; ++j) a.at(r, j) -= f * a.at(col, j);
            }
        }
        return det;
    }

    FracMatrix inverse() const {
        FracMatrix a = *this;
        FracMatrix inv = identity(n_);
        for (int col = 0; col < n_; ++col) {
            int pivot = -1;
            for (int r = col; r < n_; ++r)
                if (!a.at(r, col).is_zero()) { pivot = r; break; }
            if (pivot < 0) throw std::domain_error("FracMatrix::inverse: singular matrix");
            for (int j = 0; j < n_; ++j) {
                std::swap(a.at(col, j), a.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
            Frac d = Frac(1) / a.at(col, col);
            for (int j = 0; j < n_; ++j) {
                a.at(col, j) *= d;
                inv.at(col, j) *= d;
            }
            for (int r = 0; r < n_; ++r) {
                if (r == col || a.at(r, col).is_zero()) continue;
                Frac f = a.at(r, col);
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
            for (int j = 0; j < n_; ++j) os << (j ? "," : "") << at(i, j).str();
            if (i + 1 < n_) os << ";";
        }
        return os.str();
    }

private:
    int n_;
    std::vector<Frac> e_;
};

inline FracMatrix word_product(const std::vector<FracMatrix>& word, int n) {
    FracMatrix p = FracMatrix::identity(n);
    for (const auto& m : word) p = p * m;
    return p;
}

}  // namespace nilorb
