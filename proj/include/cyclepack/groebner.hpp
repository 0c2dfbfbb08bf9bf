#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclepack/guards.hpp"
#include "cyclepack/polynomial.hpp"

namespace cyclepack {

// Term orders over a fixed ascending variable universe.  Within a block the
// variable with the smaller index is the larger one (x0 > x1 > ...).
class monomial_order {
  public:
    enum class kind { grevlex, lex, elimination };

    static monomial_order grevlex(std::vector<int> vars) {
        return monomial_order(kind::grevlex, std::move(vars), {});
    }
    static monomial_order lex(std::vector<int> vars) {
        return monomial_order(kind::lex, std::move(vars), {});
    }
    // Block order eliminating `elim`: compare grevlex on the eliminated block
    // first, then grevlex on the kept block.  Any monomial touching an
    // eliminated variable beats every monomial free of them.
    static monomial_order elimination(std::vector<int> elim, std::vector<int> keep) {
        std::vector<int> all = keep;
        all.insert(all.end(), elim.begin(), elim.end());
        std::sort(all.begin(), all.end());
        std::sort(elim.begin(), elim.end());
        return monomial_order(kind::elimination, std::move(all), std::move(elim));
    }

    const std::vector<int>& vars() const { return vars_; }
    const std::vector<int>& eliminated() const { return elim_; }
    kind type() const { return kind_; }

    bool less(const monomial& a, const monomial& b) const { return compare(a, b) < 0; }

    // -1: a < b, 0: equal, +1: a > b.
    int compare(const monomial& a, const monomial& b) const {
        switch (kind_) {
            case kind::grevlex:
                return grevlex_cmp(a, b, nullptr);
            case kind::lex:
                return lex_cmp(a, b);
            case kind::elimination: {
                int c = grevlex_cmp(a, b, &elim_);
                if (c != 0) return c;
                return grevlex_cmp(a, b, &keep_);
            }
        }
        return 0;
    }

    std::string name() const {
        switch (kind_) {
            case kind::grevlex:
                return "grevlex";
            case kind::lex:
                return "lex";
            case kind::elimination:
                return "elimination";
        }
        return "?";
    }

  private:
    monomial_order(kind k, std::vector<int> vars, std::vector<int> elim)
        : kind_(k), vars_(std::move(vars)), elim_(std::move(elim)) {
        std::sort(vars_.begin(), vars_.end());
        std::set_difference(vars_.begin(), vars_.end(), elim_.begin(), elim_.end(),
                            std::back_inserter(keep_));
    }

    // Graded reverse lexicographic over the variables in `block` (all when
    // null): higher total degree wins; on ties the monomial with the larger
    // exponent at the least significant (largest id) differing variable is
    // the smaller one.
    static int grevlex_cmp(const monomial& a, const monomial& b, const std::vector<int>* block) {
        auto in = [&](int v) {
            return !block || std::binary_search(block->begin(), block->end(), v);
        };
        int da = 0, db = 0;
        for (const auto& [v, e] : a.factors())
            if (in(v)) da += e;
        for (const auto& [v, e] : b.factors())
            if (in(v)) db += e;
        if (da != db) return da < db ? -1 : 1;
        // Walk both factor lists from the back (largest ids first).
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        auto ia = fa.rbegin(), ib = fb.rbegin();
        while (true) {
            while (ia != fa.rend() && !in(ia->first)) ++ia;
            while (ib != fb.rend() && !in(ib->first)) ++ib;
            if (ia == fa.rend() && ib == fb.rend()) return 0;
            int va = ia == fa.rend() ? -1 : ia->first;
            int vb = ib == fb.rend() ? -1 : ib->first;
            if (va > vb) {
                // a has extra weight at the biggest remaining id: a is smaller.
                return -1;
            }
            if (vb > va) return 1;
            if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
            ++ia;
            ++ib;
        }
    }

    // Lexicographic with x0 > x1 > ...: first differing variable decides.
    static int lex_cmp(const monomial& a, const monomial& b) {
        const auto& fa = a.factors();
        const auto& fb = b.factors();
        auto ia = fa.begin(), ib = fb.begin();
        while (ia != fa.end() || ib != fb.end()) {
            int va = ia == fa.end() ? -1 : ia->first;
            int vb = ib == fb.end() ? -1 : ib->first;
            if (va == -1 && vb == -1) return 0;
            if (va == -1) return -1;  // a ran out: b owns an extra variable
            if (vb == -1) return 1;
            if (va < vb) return 1;   // a owns the more significant variable
            if (vb < va) return -1;
            if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
            ++ia;
            ++ib;
        }
        return 0;
    }

    kind kind_;
    std::vector<int> vars_;
    std::vector<int> elim_;
    std::vector<int> keep_;
};

// Reduced Groebner basis over an explicit variable universe (the universe
// matters: it fixes the ring even for variables absent from every generator).
struct groebner_basis {
    std::vector<int> vars;  // ascending
    monomial_order order = monomial_order::grevlex({});
    std::vector<polynomial> gens;  // monic, reduced, ascending by leading monomial

    bool zero_ring() const {
        return gens.size() == 1 && gens[0] == polynomial::constant(1);
    }
};

namespace detail {

inline monomial leading_monomial(const polynomial& p, const monomial_order& ord) {
    bool first = true;
    monomial best;
    for (const auto& [m, c] : p.terms()) {
        if (first || ord.less(best, m)) best = m;
        first = false;
    }
    return best;
}

inline mpq_class leading_coefficient(const polynomial& p, const monomial& lm) {
    return p.coefficient(lm);
}

inline polynomial make_monic(const polynomial& p, const monomial_order& ord) {
    if (p.is_zero()) return p;
    mpq_class lc = p.coefficient(leading_monomial(p, ord));
    return mpq_class(1 / lc) * p;
}

}  // namespace detail

// Full normal form of f modulo the basis: every term of the remainder is
// divisible by no basis leading monomial.  Deterministic: the reducer with
// the smallest leading monomial is always chosen first.
inline polynomial normal_form(const polynomial& f, const groebner_basis& b) {
    if (b.gens.empty()) return f;
    std::vector<monomial> lms;
    lms.reserve(b.gens.size());
    for (const auto& g : b.gens) lms.push_back(detail::leading_monomial(g, b.order));
    polynomial p = f, r;
    while (!p.is_zero()) {
        monomial m = detail::leading_monomial(p, b.order);
        mpq_class c = p.coefficient(m);
        bool reduced = false;
        for (std::size_t i = 0; i < b.gens.size(); ++i) {
            if (!lms[i].divides(m)) continue;
            // gens are monic: subtract c * (m / lm_i) * g_i.
            p -= polynomial::term(c, lms[i].quotient_of(m)) * b.gens[i];
            reduced = true;
            break;
        }
        if (!reduced) {
            r += polynomial::term(c, m);
            p -= polynomial::term(c, m);
        }
    }
    return r;
}

// Buchberger with the normal selection strategy (S-pairs by ascending lcm
// degree, then by generator indices) and both classical skip criteria,
// followed by inter-reduction to THE reduced basis.  The result is therefore
// independent of generator order; `lim.max_spairs` bounds processed pairs.
inline groebner_basis buchberger(const std::vector<polynomial>& generators,
                                 const std::vector<int>& vars, const monomial_order& order,
                                 const limits& lim = {}) {
    groebner_basis basis;
    basis.vars = vars;
    std::sort(basis.vars.begin(), basis.vars.end());
    basis.order = order;

    std::vector<polynomial> g;
    for (const auto& p : generators) {
        if (p.is_zero()) continue;
        for (int v : p.support_vars())
            if (!std::binary_search(basis.vars.begin(), basis.vars.end(), v))
                throw std::invalid_argument("generator uses variable " + std::to_string(v) +
                                            " outside the ring");
        g.push_back(detail::make_monic(p, order));
    }

    auto lm = [&](std::size_t i) { return detail::leading_monomial(g[i], order); };

    std::set<std::pair<std::size_t, std::size_t>> pending, treated;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});

    std::uint64_t budget = 0;
    while (!pending.empty()) {
        if (++budget > lim.max_spairs) throw guard_error("spair-budget", lim.max_spairs);
        // Normal strategy: minimal lcm degree, ties by index pair.
        auto best = pending.begin();
        int best_deg = monomial::lcm(lm(best->first), lm(best->second)).total_degree();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            int d = monomial::lcm(lm(it->first), lm(it->second)).total_degree();
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);
        treated.insert({i, j});

        monomial li = lm(i), lj = lm(j);
        if (li.coprime_with(lj)) continue;  // product criterion
        monomial l = monomial::lcm(li, lj);
        bool chained = false;
        for (std::size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!lm(k).divides(l)) continue;
            auto key_ik = std::minmax(i, k);
            auto key_jk = std::minmax(j, k);
            if (treated.count({key_ik.first, key_ik.second}) &&
                treated.count({key_jk.first, key_jk.second}))
                chained = true;  // chain criterion
        }
        if (chained) continue;

        polynomial s = polynomial::term(1, li.quotient_of(l)) * g[i] -
                       polynomial::term(1, lj.quotient_of(l)) * g[j];
        groebner_basis cur;
        cur.vars = basis.vars;
        cur.order = order;
        cur.gens = g;
        polynomial r = normal_form(s, cur);
        if (r.is_zero()) continue;
        g.push_back(detail::make_monic(r, order));
        for (std::size_t t = 0; t + 1 < g.size(); ++t) pending.insert({t, g.size() - 1});
    }

    // Minimize: drop generators whose leading monomial another one divides.
    std::vector<std::size_t> ord_idx(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) ord_idx[i] = i;
    std::sort(ord_idx.begin(), ord_idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(lm(a), lm(b));
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<polynomial> minimal;
    std::vector<monomial> kept_lms;
    for (std::size_t idx : ord_idx) {
        monomial m = lm(idx);
        bool dominated = false;
        for (const auto& k : kept_lms)
            if (k.divides(m)) dominated = true;
        if (!dominated) {
            minimal.push_back(g[idx]);
            kept_lms.push_back(m);
        }
    }

    // Reduce every survivor against the others until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            groebner_basis others;
            others.vars = basis.vars;
            others.order = order;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.gens.push_back(minimal[j]);
            polynomial r = normal_form(minimal[i], others);
            r = detail::make_monic(r, order);
            if (r != minimal[i]) {
                changed = true;
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + static_cast<long>(i));
                    --i;
                } else {
                    minimal[i] = r;
                }
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&](const polynomial& a, const polynomial& b) {
        return order.less(detail::leading_monomial(a, order), detail::leading_monomial(b, order));
    });
    basis.gens = std::move(minimal);
    return basis;
}

inline groebner_basis buchberger(const std::vector<polynomial>& generators,
                                 const std::vector<int>& vars, const limits& lim = {}) {
    std::vector<int> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    return buchberger(generators, sorted, monomial_order::grevlex(sorted), lim);
}

// f lies in the ideal iff its normal form vanishes.
inline bool ideal_member(const polynomial& f, const groebner_basis& b) {
    return normal_form(f, b).is_zero();
}

// Basis of the elimination ideal I ∩ Q[keep], as a reduced grevlex basis
// over exactly the kept variables.
inline groebner_basis eliminate(const std::vector<polynomial>& generators,
                                const std::vector<int>& vars, const std::vector<int>& keep,
                                const limits& lim = {}) {
    std::vector<int> all = vars, kept = keep;
    std::sort(all.begin(), all.end());
    std::sort(kept.begin(), kept.end());
    std::vector<int> elim;
    std::set_difference(all.begin(), all.end(), kept.begin(), kept.end(),
                        std::back_inserter(elim));
    auto block = monomial_order::elimination(elim, kept);
    groebner_basis full = buchberger(generators, all, block, lim);
    std::vector<polynomial> survivors;
    for (const auto& p : full.gens) {
        bool pure = true;
        for (int v : p.support_vars())
            if (!std::binary_search(kept.begin(), kept.end(), v)) pure = false;
        if (pure) survivors.push_back(p);
    }
    return buchberger(survivors, kept, monomial_order::grevlex(kept), lim);
}

// Is x in the radical of the ideal?  Rabinowitsch: adjoin a fresh variable t
// after every ring variable and test whether 1 - t*x lands the extended
// ideal at the unit ideal.
inline bool radical_membership(int x, const std::vector<polynomial>& generators,
                               const std::vector<int>& vars, const limits& lim = {}) {
    std::vector<int> all = vars;
    std::sort(all.begin(), all.end());
    int t = all.empty() ? 0 : all.back() + 1;
    std::vector<polynomial> gens = generators;
    gens.push_back(polynomial::constant(1) -
                   polynomial::variable(t) * polynomial::variable(x));
    std::vector<int> ext = all;
    ext.push_back(t);
    auto order = monomial_order::elimination({t}, all);
    return buchberger(gens, ext, order, lim).zero_ring();
}

// Do two generating sets span the same ideal?  Mutual normal-form vanishing.
inline bool ideal_equal(const std::vector<polynomial>& a, const std::vector<polynomial>& b,
                        const std::vector<int>& vars, const limits& lim = {}) {
    groebner_basis ba = buchberger(a, vars, lim), bb = buchberger(b, vars, lim);
    for (const auto& p : a)
        if (!ideal_member(p, bb)) return false;
    for (const auto& p : b)
        if (!ideal_member(p, ba)) return false;
    return true;
}

}  // namespace cyclepack
