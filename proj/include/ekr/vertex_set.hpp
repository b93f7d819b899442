// Fixed-capacity vertex bitset; the unit every family computation works in.
#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace ekr {

class VertexSet {
public:
    static constexpr int capacity = 192;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> bits) {
        for (int b : bits) set(b);
    }

    template <typename It>
    VertexSet(It first, It last) {
        for (; first != last; ++first) set(*first);
    }

    // Bits [0, count).
    static VertexSet range(int count) {
        VertexSet s;
        for (int i = 0; i < count; ++i) s.set(i);
        return s;
    }

    void set(int i) {
        check(i);
        w_[i >> 6] |= bit(i);
    }

    void reset(int i) {
        check(i);
        w_[i >> 6] &= ~bit(i);
    }

    bool test(int i) const {
        check(i);
        return (w_[i >> 6] & bit(i)) != 0;
    }

    int count() const {
        int c = 0;
        for (auto word : w_) c += std::popcount(word);
        return c;
    }

    bool empty() const {
        for (auto word : w_)
            if (word) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < words; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < words; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < words; ++i) w_[i] &= o.w_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < words; ++i) w_[i] |= o.w_[i];
        return *this;
    }

    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < words; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    // Canonical order: numeric value of the bit string (high words first).
    std::strong_ordering operator<=>(const VertexSet& o) const {
        for (int i = words - 1; i >= 0; --i)
            if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
        return std::strong_ordering::equal;
    }

    // Visits members in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < words; ++i) {
            std::uint64_t word = w_[i];
            while (word) {
                int b = std::countr_zero(word);
                f(i * 64 + b);
                word &= word - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    static constexpr int words = capacity / 64;

    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

    static void check(int i) {
        if (i < 0 || i >= capacity) throw std::out_of_range("VertexSet: index out of range");
    }

    std::array<std::uint64_t, words> w_{};
};

}  // namespace ekr
