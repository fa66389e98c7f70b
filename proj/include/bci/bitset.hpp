#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace bci {

// Fixed-capacity dynamic bitset used by the branch-and-bound solvers.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_(static_cast<std::size_t>((n + 63) / 64), 0) {}

    int capacity() const { return n_; }

    void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w_[static_cast<std::size_t>(i) >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ULL; }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    int first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>((i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i])));
        return -1;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    Bitset and_not(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < r.w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    int count_and(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t x = w_[i];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<int>((i << 6) + static_cast<std::size_t>(b)));
                x &= x - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace bci
