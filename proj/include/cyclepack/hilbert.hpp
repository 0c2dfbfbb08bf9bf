#pragma once

#include <algorithm>
#include <vector>

#include <gmpxx.h>

#include "cyclepack/bitvec.hpp"
#include "cyclepack/cycles.hpp"  // detail::min_hitting_set
#include "cyclepack/groebner.hpp"
#include "cyclepack/guards.hpp"

namespace cyclepack {

namespace detail {

// Dense integer polynomial in one variable t, ascending coefficients.
using tpoly = std::vector<mpz_class>;

inline tpoly tp_trim(tpoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline tpoly tp_add(const tpoly& a, const tpoly& b) {
    tpoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return tp_trim(out);
}

inline tpoly tp_mul(const tpoly& a, const tpoly& b) {
    if (a.empty() || b.empty()) return {};
    tpoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return tp_trim(out);
}

inline tpoly tp_shift(const tpoly& a, int k) {  // multiply by t^k
    if (a.empty()) return {};
    tpoly out(a.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + static_cast<std::size_t>(k)] = a[i];
    return out;
}

inline mpz_class tp_at_one(const tpoly& a) {
    mpz_class s = 0;
    for (const auto& c : a) s += c;
    return s;
}

// Exact division by (1 - t); requires p(1) == 0.
inline tpoly tp_divide_one_minus_t(const tpoly& p) {
    if (p.empty()) return {};
    tpoly q(p.size() - 1, 0);
    mpz_class acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc += p[i];
        q[i] = acc;
    }
    return tp_trim(q);
}

// Remove generators divisible by another generator (keeps minimal ones).
inline std::vector<monomial> minimalize(std::vector<monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const monomial& a, const monomial& b) {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        return a < b;
    });
    std::vector<monomial> out;
    for (const auto& m : gens) {
        bool dominated = false;
        for (const auto& k : out)
            if (k.divides(m)) dominated = true;
        if (!dominated) out.push_back(m);
    }
    return out;
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of R/M for the monomial
// ideal M.  Pivot recursion on a most-shared variable:
//   N(M) = N(M + (x)) + t * N(M : x).
inline tpoly hilbert_numerator_of_monomials(std::vector<monomial> gens) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    if (gens.size() == 1 && gens[0].is_one()) return {};
    // All pure powers of distinct variables: product of (1 - t^deg).
    bool pure = true;
    std::set<int> seen;
    for (const auto& m : gens) {
        if (m.factors().size() != 1) pure = false;
        else if (!seen.insert(m.factors()[0].first).second) pure = false;
    }
    if (pure) {
        tpoly acc{1};
        for (const auto& m : gens) {
            tpoly f(static_cast<std::size_t>(m.total_degree()) + 1, 0);
            f[0] = 1;
            f[static_cast<std::size_t>(m.total_degree())] = -1;
            acc = tp_mul(acc, f);
        }
        return acc;
    }
    // Pivot: the variable occurring in the most mixed generators (ties:
    // smallest).  Restricting to generators with at least two distinct
    // variables guarantees progress: the plus-branch loses a mixed generator.
    std::map<int, int> freq;
    for (const auto& m : gens) {
        if (m.factors().size() < 2) continue;
        for (const auto& [v, e] : m.factors()) ++freq[v];
    }
    int pivot = -1, best = -1;
    for (const auto& [v, c] : freq) {
        if (c > best) {
            best = c;
            pivot = v;
        }
    }
    // M + (x): generators not divisible by x, plus x itself.
    std::vector<monomial> plus{monomial::var(pivot)};
    for (const auto& m : gens)
        if (m.exponent(pivot) == 0) plus.push_back(m);
    // M : x: divide each generator containing x by x once.
    std::vector<monomial> colon;
    for (const auto& m : gens)
        colon.push_back(m.exponent(pivot) > 0 ? monomial::var(pivot).quotient_of(m) : m);
    return tp_add(hilbert_numerator_of_monomials(plus),
                  tp_shift(hilbert_numerator_of_monomials(colon), 1));
}

}  // namespace detail

// Dimension-and-degree summary of Q[vars]/I from a reduced Groebner basis.
struct dimension_report {
    bool zero_ring = false;  // 1 lies in the ideal: the quotient is 0
    int dimension = -1;      // Krull dimension (combinatorial route)
    std::vector<int> independent_set;        // witness: maximal independent variables
    std::vector<mpz_class> hilbert_numerator;  // N(t) with H = N/(1-t)^#vars
    mpz_class hilbert_degree = 0;            // Q(1) where H = Q/(1-t)^dimension
};

// Krull dimension via independent sets modulo the leading-term ideal: the
// largest variable set S containing no full leading-term support; computed as
// #vars minus a minimum hitting set of the supports.  Cross-checked against
// the pole order of the Hilbert series; disagreement is an internal error.
inline dimension_report dimension_of(const groebner_basis& b) {
    dimension_report rep;
    if (b.zero_ring()) {
        rep.zero_ring = true;
        rep.dimension = -1;
        rep.hilbert_numerator = {};
        rep.hilbert_degree = 0;
        return rep;
    }
    std::vector<monomial> lts;
    for (const auto& g : b.gens) lts.push_back(detail::leading_monomial(g, b.order));

    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < b.vars.size(); ++i) pos[b.vars[i]] = i;
    std::vector<bitvec> supports;
    for (const auto& m : lts) {
        bitvec s(b.vars.size());
        for (int v : m.support()) s.set(pos.at(v));
        supports.push_back(s);
    }
    bitvec ground(b.vars.size());
    for (std::size_t i = 0; i < b.vars.size(); ++i) ground.set(i);
    auto hit = detail::min_hitting_set(b.vars.size(), supports, ground);
    std::set<int> hitset(hit.begin(), hit.end());
    for (std::size_t i = 0; i < b.vars.size(); ++i)
        if (!hitset.count(static_cast<int>(i))) rep.independent_set.push_back(b.vars[i]);
    rep.dimension = static_cast<int>(b.vars.size() - hit.size());

    rep.hilbert_numerator = detail::hilbert_numerator_of_monomials(lts);
    // Pole order: dimension = #vars - multiplicity of (1 - t) in N.
    detail::tpoly q = rep.hilbert_numerator;
    int mult = 0;
    while (!q.empty() && detail::tp_at_one(q) == 0) {
        q = detail::tp_divide_one_minus_t(q);
        ++mult;
    }
    int series_dim = static_cast<int>(b.vars.size()) - mult;
    if (series_dim != rep.dimension)
        throw internal_error("Krull dimension mismatch: independent sets say " +
                             std::to_string(rep.dimension) + ", Hilbert series says " +
                             std::to_string(series_dim));
    rep.hilbert_degree = detail::tp_at_one(q);
    return rep;
}

}  // namespace cyclepack
