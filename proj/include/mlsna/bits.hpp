#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace mlsna {

/// Fixed-capacity bitset sized at runtime; node sets for the divisive
/// extraction loop, where intersections and unions dominate the cost.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= (1ULL << (i & 63)); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto word : w_) c += static_cast<std::size_t>(std::popcount(word));
        return c;
    }

    bool any() const {
        for (auto word : w_)
            if (word) return true;
        return false;
    }

    static std::size_t intersection_count(const Bits& a, const Bits& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.w_[i] & b.w_[i]));
        return c;
    }

    static std::size_t union_count(const Bits& a, const Bits& b) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.w_[i] | b.w_[i]));
        return c;
    }

    /// Indices of set bits, ascending.
    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t word = w_[wi];
            while (word) {
                int b = std::countr_zero(word);
                out.push_back(static_cast<int>(wi * 64 + static_cast<std::size_t>(b)));
                word &= word - 1;
            }
        }
        return out;
    }

    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace mlsna
