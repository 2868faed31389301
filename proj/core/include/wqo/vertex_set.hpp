#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wqo {

using Vertex = int; ///< 1-based vertex id

/// Fixed-capacity bitset over the vertex ids 1..n.
///
/// Bit `v` stands for vertex `v`; bit 0 is never set. All binary operations
/// require both operands to have the same capacity.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), words_(static_cast<std::size_t>(n / 64 + 1), 0) {}

    static VertexSet all(int n)
    {
        VertexSet s(n);
        for (Vertex v = 1; v <= n; ++v) s.insert(v);
        return s;
    }

    template <typename Range>
    static VertexSet of(int n, const Range& vertices)
    {
        VertexSet s(n);
        for (Vertex v : vertices) s.insert(v);
        return s;
    }

    int capacity() const noexcept { return n_; }

    bool contains(Vertex v) const noexcept
    {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
    }
    void insert(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] |= bit(v); }
    void erase(Vertex v) noexcept { words_[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }

    int size() const noexcept
    {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const noexcept
    {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }

    /// Smallest member, or 0 when empty.
    Vertex first() const noexcept { return next_from(0); }
    /// Smallest member greater than `v`, or 0 when none.
    Vertex next(Vertex v) const noexcept { return next_from(v + 1); }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Vertex v = first(); v != 0; v = next(v)) out.push_back(v);
        return out;
    }

    VertexSet& operator&=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Members of 1..n not in this set.
    VertexSet complement() const { return all(n_) - *this; }

    bool is_subset_of(const VertexSet& o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }
    static int intersection_size(const VertexSet& a, const VertexSet& b) noexcept
    {
        int c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) c += std::popcount(a.words_[i] & b.words_[i]);
        return c;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    static std::uint64_t bit(Vertex v) noexcept { return std::uint64_t{1} << (v & 63); }

    Vertex next_from(Vertex start) const noexcept
    {
        if (start > n_) return 0;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (start & 63));
        while (true) {
            if (w != 0) return static_cast<Vertex>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi == words_.size()) return 0;
            w = words_[wi];
        }
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

} // namespace wqo
