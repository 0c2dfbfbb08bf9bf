#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclepack {

// Power product over integer variable indices: sorted (variable, exponent)
// pairs, exponents > 0.  Variable indices are edge ids downstream.
class monomial {
  public:
    monomial() = default;
    explicit monomial(std::vector<std::pair<int, int>> factors) : f_(std::move(factors)) {
        std::sort(f_.begin(), f_.end());
        std::vector<std::pair<int, int>> merged;
        for (auto& [v, e] : f_) {
            if (!merged.empty() && merged.back().first == v)
                merged.back().second += e;
            else
                merged.push_back({v, e});
        }
        std::erase_if(merged, [](const auto& p) { return p.second == 0; });
        for (auto& [v, e] : merged)
            if (e < 0) throw std::invalid_argument("negative exponent");
        f_ = std::move(merged);
    }

    static monomial var(int v, int e = 1) { return monomial({{v, e}}); }
    static monomial one() { return monomial(); }

    const std::vector<std::pair<int, int>>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }

    int exponent(int v) const {
        for (const auto& [w, e] : f_)
            if (w == v) return e;
        return 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, e] : f_) d += e;
        return d;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (const auto& [v, e] : f_) s.push_back(v);
        return s;
    }

    bool coprime_with(const monomial& o) const {
        for (const auto& [v, e] : f_)
            if (o.exponent(v) > 0) return false;
        return true;
    }

    monomial operator*(const monomial& o) const {
        std::vector<std::pair<int, int>> all = f_;
        all.insert(all.end(), o.f_.begin(), o.f_.end());
        return monomial(std::move(all));
    }

    bool divides(const monomial& o) const {
        for (const auto& [v, e] : f_)
            if (o.exponent(v) < e) return false;
        return true;
    }

    // o / *this; requires divides(o).
    monomial quotient_of(const monomial& o) const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [v, e] : o.f_) {
            int r = e - exponent(v);
            if (r > 0) out.push_back({v, r});
        }
        return monomial(std::move(out));
    }

    static monomial lcm(const monomial& a, const monomial& b) {
        std::vector<std::pair<int, int>> out;
        std::set<int> vars;
        for (auto& [v, e] : a.f_) vars.insert(v);
        for (auto& [v, e] : b.f_) vars.insert(v);
        for (int v : vars) out.push_back({v, std::max(a.exponent(v), b.exponent(v))});
        return monomial(std::move(out));
    }

    bool operator==(const monomial& o) const { return f_ == o.f_; }
    bool operator!=(const monomial& o) const { return !(*this == o); }
    // Structural order for canonical term-map storage only; monomial *orders*
    // in the Groebner sense live in the engine, not here.
    bool operator<(const monomial& o) const { return f_ < o.f_; }

  private:
    std::vector<std::pair<int, int>> f_;
};

// Sparse multivariate polynomial with exact rational coefficients.  The term
// map is canonical (no zero coefficients); display uses graded order.
class polynomial {
  public:
    polynomial() = default;

    static polynomial constant(const mpq_class& c) {
        polynomial p;
        if (c != 0) p.t_[monomial::one()] = c;
        return p;
    }
    static polynomial variable(int v) { return term(1, monomial::var(v)); }
    static polynomial term(const mpq_class& c, const monomial& m) {
        polynomial p;
        if (c != 0) p.t_[m] = c;
        return p;
    }

    const std::map<monomial, mpq_class>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }

    bool is_homogeneous() const {
        int d = -2;
        for (const auto& [m, c] : t_) {
            if (d == -2) d = m.total_degree();
            if (m.total_degree() != d) return false;
        }
        return true;
    }

    mpq_class coefficient(const monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? mpq_class(0) : it->second;
    }

    std::vector<int> support_vars() const {
        std::set<int> s;
        for (const auto& [m, c] : t_)
            for (int v : m.support()) s.insert(v);
        return {s.begin(), s.end()};
    }

    polynomial& operator+=(const polynomial& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    polynomial& operator-=(const polynomial& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend polynomial operator+(polynomial a, const polynomial& b) { return a += b; }
    friend polynomial operator-(polynomial a, const polynomial& b) { return a -= b; }
    polynomial operator-() const {
        polynomial p;
        for (const auto& [m, c] : t_) p.t_[m] = -c;
        return p;
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        polynomial p;
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) p.add_term(ma * mb, ca * cb);
        return p;
    }
    friend polynomial operator*(const mpq_class& c, const polynomial& a) {
        polynomial p;
        if (c == 0) return p;
        for (const auto& [m, k] : a.t_) p.t_[m] = c * k;
        return p;
    }

    bool operator==(const polynomial& o) const { return t_ == o.t_; }
    bool operator!=(const polynomial& o) const { return !(*this == o); }

    polynomial pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        polynomial r = constant(1);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    // Replace variable v by `repl` everywhere.
    polynomial substitute(int v, const polynomial& repl) const {
        polynomial out;
        for (const auto& [m, c] : t_) {
            int e = m.exponent(v);
            if (e == 0) {
                out.add_term(m, c);
                continue;
            }
            std::vector<std::pair<int, int>> rest;
            for (const auto& [w, k] : m.factors())
                if (w != v) rest.push_back({w, k});
            out += term(c, monomial(std::move(rest))) * repl.pow(e);
        }
        return out;
    }

    // Evaluate at a total point; every support variable must be assigned.
    mpq_class evaluate(const std::map<int, mpq_class>& point) const {
        mpq_class total = 0;
        for (const auto& [m, c] : t_) {
            mpq_class v = c;
            for (const auto& [var, e] : m.factors()) {
                auto it = point.find(var);
                if (it == point.end())
                    throw std::invalid_argument("evaluate: unassigned variable " +
                                                std::to_string(var));
                for (int k = 0; k < e; ++k) v *= it->second;
            }
            total += v;
        }
        return total;
    }

    // Display: graded (total degree ascending), then structural order; exact
    // rational coefficients.  Example: "x0 + x1 - x2" or "2*x0^2*x1 - 1/2".
    std::string str(const std::function<std::string(int)>& name = default_name) const {
        if (t_.empty()) return "0";
        std::vector<std::pair<monomial, mpq_class>> ts(t_.begin(), t_.end());
        std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            if (a.first.total_degree() != b.first.total_degree())
                return a.first.total_degree() < b.first.total_degree();
            return a.first < b.first;
        });
        std::ostringstream out;
        bool first = true;
        for (const auto& [m, c] : ts) {
            mpq_class a = c;
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool unit = a == 1;
            if (!unit || m.is_one()) out << a;
            bool lead = unit && !m.is_one();
            for (const auto& [v, e] : m.factors()) {
                if (!lead) out << "*";
                lead = false;
                out << name(v);
                if (e > 1) out << "^" << e;
            }
        }
        return out.str();
    }

    static std::string default_name(int v) { return "x" + std::to_string(v); }

  private:
    void add_term(const monomial& m, const mpq_class& c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (c != 0) t_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    std::map<monomial, mpq_class> t_;
};

// Elementary symmetric polynomial e_l of the listed variables (repetitions
// allowed and meaningful): 1 for l = 0, the usual sum of square-free products
// for 1 <= l <= m, and 0 for l > m.
inline polynomial elementary_symmetric(int l, const std::vector<int>& vars) {
    if (l < 0) throw std::invalid_argument("negative symmetric degree");
    if (l == 0) return polynomial::constant(1);
    if (l > static_cast<int>(vars.size())) return polynomial();
    std::vector<polynomial> e(static_cast<std::size_t>(l) + 1);
    e[0] = polynomial::constant(1);
    for (int v : vars) {
        polynomial x = polynomial::variable(v);
        for (int j = l; j >= 1; --j) e[j] += e[j - 1] * x;
    }
    return e[l];
}

// Complete homogeneous symmetric polynomial h_l of the listed variables.
inline polynomial complete_homogeneous(int l, const std::vector<int>& vars) {
    if (l < 0) throw std::invalid_argument("negative symmetric degree");
    if (l == 0) return polynomial::constant(1);
    if (vars.empty()) return polynomial();
    // h_l over (v_1..v_k) = sum_j h_{l-j}(v_1..v_{k-1}) * v_k^j.
    std::vector<polynomial> h(static_cast<std::size_t>(l) + 1);
    h[0] = polynomial::constant(1);
    for (int v : vars) {
        polynomial x = polynomial::variable(v);
        for (int j = 1; j <= l; ++j) h[j] += h[j - 1] * x;
    }
    return h[l];
}

// All monomials of exact total degree d in the given variables, ascending in
// the structural order.
inline std::vector<monomial> monomials_of_degree(const std::vector<int>& vars, int d) {
    std::vector<monomial> out;
    std::vector<std::pair<int, int>> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (left == 0) {
            out.push_back(monomial(cur));
            return;
        }
        if (i == vars.size()) return;
        for (int e = left; e >= 1; --e) {
            cur.push_back({vars[i], e});
            rec(i + 1, left - e);
            cur.pop_back();
        }
        rec(i + 1, left);
    };
    rec(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclepack
