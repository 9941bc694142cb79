#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ramsey {

// Fixed-size bitset sized at construction. Vertex sets everywhere.
class Bitset {
public:
    Bitset() : n_(0) {}
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    // Lowest set bit >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        std::size_t blk = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = w_[blk] & (~0ull << (from & 63));
        while (true) {
            if (w) {
                int b = static_cast<int>(blk * 64) + std::countr_zero(w);
                return b < n_ ? b : -1;
            }
            if (++blk >= w_.size()) return -1;
            w = w_[blk];
        }
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_;
    std::vector<std::uint64_t> w_;
};

} // namespace ramsey
