#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cyclepack {

// Fixed-width dynamic bit set used for edge/vertex subsets and GF(2) rows.
class bitvec {
  public:
    bitvec() = default;
    explicit bitvec(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool intersects(const bitvec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const bitvec& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bitvec& operator|=(const bitvec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    bitvec& operator&=(const bitvec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    bitvec& operator^=(const bitvec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend bitvec operator|(bitvec a, const bitvec& b) { return a |= b; }
    friend bitvec operator&(bitvec a, const bitvec& b) { return a &= b; }
    friend bitvec operator^(bitvec a, const bitvec& b) { return a ^= b; }

    bool operator==(const bitvec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const bitvec& o) const { return !(*this == o); }
    // Lexicographic on the ascending lists of set indices: at the lowest
    // differing index, the set owning that bit compares smaller.
    bool operator<(const bitvec& o) const {
        for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) {
            if (w_[i] != o.w_[i]) {
                std::uint64_t diff = w_[i] ^ o.w_[i];
                std::uint64_t low = diff & (~diff + 1);
                return (w_[i] & low) != 0;
            }
        }
        return w_.size() < o.w_.size();
    }

    // Index of the lowest set bit, or -1 when empty.
    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
        return -1;
    }

    // Indices of all set bits, ascending.
    std::vector<int> bits() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace cyclepack
