#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include "cyclepack/bitvec.hpp"

namespace cyclepack {

// Row space over GF(2) kept in reduced row echelon form: one pivot per row,
// pivots strictly ascending, each pivot the only set bit in its column.
class gf2_space {
  public:
    explicit gf2_space(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<bitvec>& basis() const { return rows_; }

    // Reduce v by the current basis; the residue is zero iff v is spanned.
    bitvec reduce(bitvec v) const {
        if (v.size() != width_) throw std::invalid_argument("gf2 width mismatch");
        for (const auto& r : rows_) {
            int p = r.find_first();
            if (p >= 0 && v.test(static_cast<std::size_t>(p))) v ^= r;
        }
        return v;
    }

    bool contains(const bitvec& v) const { return reduce(v).none(); }

    // Insert a vector; returns true when it enlarged the space.
    bool add(const bitvec& v) {
        bitvec res = reduce(v);
        int p = res.find_first();
        if (p < 0) return false;
        // Clear the new pivot from existing rows, then insert in pivot order.
        for (auto& r : rows_)
            if (r.test(static_cast<std::size_t>(p))) r ^= res;
        auto it = rows_.begin();
        while (it != rows_.end() && it->find_first() < p) ++it;
        rows_.insert(it, res);
        return true;
    }

    bool operator==(const gf2_space& o) const {
        return width_ == o.width_ && rows_ == o.rows_;
    }

  private:
    std::size_t width_;
    std::vector<bitvec> rows_;  // reduced echelon basis, pivots ascending
};

inline gf2_space gf2_span(std::size_t width, const std::vector<bitvec>& rows) {
    gf2_space s(width);
    for (const auto& r : rows) s.add(r);
    return s;
}

inline std::size_t gf2_rank(std::size_t width, const std::vector<bitvec>& rows) {
    return gf2_span(width, rows).rank();
}

// dim(A ∩ S) where A is spanned by the unit vectors at `positions`:
// dim A + dim S - dim(A + S).
inline std::size_t gf2_intersection_dim_with_units(const gf2_space& s,
                                                   const std::vector<std::size_t>& positions) {
    std::set<std::size_t> distinct(positions.begin(), positions.end());
    gf2_space sum = s;
    for (std::size_t p : distinct) {
        bitvec unit(s.width());
        unit.set(p);
        sum.add(unit);
    }
    return distinct.size() + s.rank() - sum.rank();
}

}  // namespace cyclepack
