#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace mimpaths {

/// Dense bitset over vertex ids [0, capacity).
///
/// Sets with different capacities compare by content; missing words are
/// treated as zero. All binary operations return a set sized to the larger
/// operand.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : words_((capacity + 63) / 64, 0) {}
    VertexSet(std::size_t capacity, std::initializer_list<int> vertices) : VertexSet(capacity) {
        for (int v : vertices) insert(v);
    }

    static VertexSet from_range(std::size_t capacity, const std::vector<int>& vertices) {
        VertexSet s(capacity);
        for (int v : vertices) s.insert(v);
        return s;
    }

    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (std::size_t v = 0; v < capacity; ++v) s.insert(static_cast<int>(v));
        return s;
    }

    std::size_t capacity() const { return words_.size() * 64; }

    bool contains(int v) const {
        auto w = static_cast<std::size_t>(v) >> 6;
        return w < words_.size() && ((words_[w] >> (v & 63)) & 1U);
    }

    void insert(int v) {
        auto w = static_cast<std::size_t>(v) >> 6;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        auto w = static_cast<std::size_t>(v) >> 6;
        if (w < words_.size()) words_[w] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t size() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        auto m = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < m; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto other = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~other) return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        auto m = std::min(words_.size(), o.words_.size());
        for (std::size_t i = 0; i < m; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        auto m = std::max(a.words_.size(), b.words_.size());
        for (std::size_t i = 0; i < m; ++i) {
            auto x = i < a.words_.size() ? a.words_[i] : 0;
            auto y = i < b.words_.size() ? b.words_[i] : 0;
            if (x != y) return false;
        }
        return true;
    }

    /// Lexicographic order on the sorted element lists.
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.to_vector() < b.to_vector(); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(i * 64 + static_cast<std::size_t>(bit)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    /// Smallest element, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return -1;
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        std::size_t last = words_.size();
        while (last > 0 && words_[last - 1] == 0) --last;
        for (std::size_t i = 0; i < last; ++i) h ^= std::hash<std::uint64_t>{}(words_[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace mimpaths

template <>
struct std::hash<mimpaths::VertexSet> {
    std::size_t operator()(const mimpaths::VertexSet& s) const { return s.hash(); }
};
