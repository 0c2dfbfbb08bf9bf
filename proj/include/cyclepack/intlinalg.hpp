#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "cyclepack/guards.hpp"

namespace cyclepack {

// Dense matrix over Z with exact arithmetic.
class int_matrix {
  public:
    int_matrix() = default;
    int_matrix(std::size_t rows, std::size_t cols)
        : r_(rows), c_(cols), a_(rows, std::vector<mpz_class>(cols, 0)) {}

    static int_matrix identity(std::size_t n) {
        int_matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static int_matrix from_rows(const std::vector<std::vector<long>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows[0].size();
        int_matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static int_matrix from_int_rows(const std::vector<std::vector<int>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows[0].size();
        int_matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    mpz_class& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const std::vector<mpz_class>& row(std::size_t i) const { return a_[i]; }

    bool operator==(const int_matrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }
    bool operator!=(const int_matrix& o) const { return !(*this == o); }

    int_matrix operator*(const int_matrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
        int_matrix out(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                if (a_[i][k] == 0) continue;
                for (std::size_t j = 0; j < o.c_; ++j)
                    out.at(i, j) += a_[i][k] * o.at(k, j);
            }
        return out;
    }

    int_matrix transpose() const {
        int_matrix out(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out.at(j, i) = a_[i][j];
        return out;
    }

    int_matrix submatrix_columns(const std::vector<std::size_t>& cols) const {
        int_matrix out(r_, cols.size());
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (cols[j] >= c_) throw std::invalid_argument("column index out of range");
                out.at(i, j) = a_[i][cols[j]];
            }
        return out;
    }

    int_matrix submatrix_rows(const std::vector<std::size_t>& rows) const {
        int_matrix out(rows.size(), c_);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] >= r_) throw std::invalid_argument("row index out of range");
            for (std::size_t j = 0; j < c_; ++j) out.at(i, j) = a_[rows[i]][j];
        }
        return out;
    }

    int_matrix stacked_on(const int_matrix& below) const {
        if (c_ != below.c_ && r_ != 0 && below.r_ != 0)
            throw std::invalid_argument("stack width mismatch");
        int_matrix out(r_ + below.r_, r_ == 0 ? below.c_ : c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out.at(i, j) = a_[i][j];
        for (std::size_t i = 0; i < below.r_; ++i)
            for (std::size_t j = 0; j < below.c_; ++j) out.at(r_ + i, j) = below.at(i, j);
        return out;
    }

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<std::vector<mpz_class>> a_;
};

// Exact determinant by Bareiss fraction-free elimination.
inline mpz_class determinant(const int_matrix& m0) {
    if (m0.rows() != m0.cols()) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m0.rows();
    if (n == 0) return 1;
    int_matrix m = m0;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = q;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

// Smith normal form U*A*V = D with unimodular U, V and a positive diagonal
// divisibility chain d1 | d2 | ... | dr.
struct smith_result {
    int_matrix u, d, v;
    std::size_t rank = 0;
    std::vector<mpz_class> invariants;  // the nonzero diagonal, ascending chain
};

inline smith_result smith_normal_form(const int_matrix& a0) {
    std::size_t m = a0.rows(), n = a0.cols();
    int_matrix a = a0;
    int_matrix u = int_matrix::identity(m), v = int_matrix::identity(n);

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
        for (std::size_t c = 0; c < n; ++c) a.at(dst, c) += k * a.at(src, c);
        for (std::size_t c = 0; c < m; ++c) u.at(dst, c) += k * u.at(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
        for (std::size_t r = 0; r < m; ++r) a.at(r, dst) += k * a.at(r, src);
        for (std::size_t r = 0; r < n; ++r) v.at(r, dst) += k * v.at(r, src);
    };
    auto negate_row = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
    };

    std::size_t t = 0;
    while (t < m && t < n) {
        // Pick the nonzero entry of smallest magnitude in the working block.
        bool found = false;
        std::size_t pi = t, pj = t;
        mpz_class best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                mpz_class mag = abs(a.at(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        // Clear column t and row t; restart on any nonzero remainder, which
        // strictly shrinks the pivot magnitude.
        bool clean = true;
        for (std::size_t i = t + 1; i < m && clean; ++i) {
            if (a.at(i, t) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
            add_row(i, t, -q);
            if (a.at(i, t) != 0) clean = false;
        }
        if (!clean) continue;
        for (std::size_t j = t + 1; j < n && clean; ++j) {
            if (a.at(t, j) == 0) continue;
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
            add_col(j, t, -q);
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // The pivot must divide every remaining entry; otherwise pull the
        // offending row up and restart with a smaller eventual pivot.
        bool divides_all = true;
        for (std::size_t i = t + 1; i < m && divides_all; ++i)
            for (std::size_t j = t + 1; j < n && divides_all; ++j) {
                if (a.at(i, j) % a.at(t, t) != 0) {
                    add_row(t, i, 1);
                    divides_all = false;
                }
            }
        if (!divides_all) continue;

        if (a.at(t, t) < 0) negate_row(t);
        ++t;
    }

    smith_result res;
    res.rank = t;
    res.u = std::move(u);
    res.v = std::move(v);
    res.d = std::move(a);
    for (std::size_t i = 0; i < t; ++i) res.invariants.push_back(res.d.at(i, i));

    // Internal certificate: re-multiply and re-check the chain.
    if (res.u * a0 * res.v != res.d)
        throw internal_error("Smith form certificate failed: U*A*V != D");
    for (std::size_t i = 0; i + 1 < res.invariants.size(); ++i)
        if (res.invariants[i] <= 0 || res.invariants[i + 1] % res.invariants[i] != 0)
            throw internal_error("Smith form diagonal is not a positive divisor chain");
    return res;
}

// Basis (as matrix rows) of the left kernel lattice {x : x*A = 0}; the rows
// of U opposite the zero rows of D span it saturatedly.
inline int_matrix left_kernel(const int_matrix& a) {
    smith_result s = smith_normal_form(a);
    std::vector<std::size_t> idx;
    for (std::size_t i = s.rank; i < a.rows(); ++i) idx.push_back(i);
    return s.u.submatrix_rows(idx);
}

// Shape of the abelian group Z^cols / (row lattice of A).
struct lattice_quotient {
    std::size_t free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1, ascending
};

inline lattice_quotient quotient_by_row_lattice(const int_matrix& a) {
    smith_result s = smith_normal_form(a);
    lattice_quotient q;
    q.free_rank = a.cols() - s.rank;
    for (const auto& d : s.invariants)
        if (d > 1) q.torsion.push_back(d);
    return q;
}

}  // namespace cyclepack
