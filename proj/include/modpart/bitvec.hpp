#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace modpart {

// Fixed-length bit vector packed into 64-bit words. Bits past size() are kept
// zero, so whole-word XOR/AND/popcount never need a final mask.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    int size() const { return n_; }

    bool get(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u; }

    void set(int i, bool v = true) {
        std::uint64_t m = 1ull << (i & 63);
        if (v)
            w_[static_cast<std::size_t>(i) >> 6] |= m;
        else
            w_[static_cast<std::size_t>(i) >> 6] &= ~m;
    }

    void flip(int i) { w_[static_cast<std::size_t>(i) >> 6] ^= 1ull << (i & 63); }

    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void xor_with(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }

    void and_with(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    }

    void or_with(const BitVec& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    }

    int popcount() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    // popcount(*this & o) without materialising the intersection.
    int and_popcount(const BitVec& o) const {
        int c = 0;
        for (std::size_t k = 0; k < w_.size(); ++k) c += std::popcount(w_[k] & o.w_[k]);
        return c;
    }

    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    // Index of the lowest set bit at or after `from`, or -1.
    int find_first(int from = 0) const {
        if (from >= n_) return -1;
        std::size_t k = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = w_[k] & (~0ull << (from & 63));
        while (true) {
            if (w) return static_cast<int>(k * 64) + std::countr_zero(w);
            if (++k == w_.size()) return -1;
            w = w_[k];
        }
    }

    // Even/odd of the GF(2) dot product with o.
    bool dot(const BitVec& o) const { return and_popcount(o) & 1; }

    bool operator==(const BitVec& o) const = default;

    const std::vector<std::uint64_t>& words() const { return w_; }

    // Raw words appended to a byte string; used as a canonical hash key.
    void append_key(std::string& out) const {
        out.append(reinterpret_cast<const char*>(w_.data()), w_.size() * sizeof(std::uint64_t));
    }

    static BitVec ones(int n) {
        BitVec v(n);
        for (std::size_t k = 0; k < v.w_.size(); ++k) v.w_[k] = ~0ull;
        int extra = static_cast<int>(v.w_.size()) * 64 - n;
        if (extra > 0 && !v.w_.empty()) v.w_.back() >>= extra;
        return v;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace modpart
