#ifndef EDGEREG_VERTEX_SET_HPP
#define EDGEREG_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgereg {

inline constexpr int kMaxVertices = 64;

/// A subset of {1, ..., 64} packed into one machine word. Vertex v lives in
/// bit v-1, so the numeric mask order is the canonical order used everywhere.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    static constexpr VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.mask_ = mask;
        return s;
    }
    static VertexSet of(std::initializer_list<int> vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }
    static VertexSet of(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }
    /// {first, ..., last}; empty when last < first.
    static constexpr VertexSet range(int first, int last) {
        VertexSet s;
        for (int v = first; v <= last; ++v) s.mask_ |= bit(v);
        return s;
    }
    /// {1, ..., n}.
    static constexpr VertexSet prefix(int n) {
        return from_mask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool contains(int v) const { return v >= 1 && v <= kMaxVertices && (mask_ & bit(v)) != 0; }
    constexpr bool subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (mask_ & other.mask_) != 0; }
    /// Largest vertex, or 0 when empty.
    constexpr int max() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
    constexpr int min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

    void insert(int v) {
        check(v);
        mask_ |= bit(v);
    }
    void erase(int v) {
        check(v);
        mask_ &= ~bit(v);
    }

    constexpr VertexSet operator|(VertexSet o) const { return from_mask(mask_ | o.mask_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_mask(mask_ & o.mask_); }
    constexpr VertexSet operator-(VertexSet o) const { return from_mask(mask_ & ~o.mask_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        mask_ |= o.mask_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        mask_ &= o.mask_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        mask_ &= ~o.mask_;
        return *this;
    }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr auto operator<=>(const VertexSet& o) const { return mask_ <=> o.mask_; }

    constexpr iterator begin() const { return iterator(mask_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const { return {begin(), end()}; }
    /// "{1,2,4}"
    std::string to_string() const;

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }
    static void check(int v) {
        if (v < 1 || v > kMaxVertices) throw std::out_of_range("vertex index out of range: " + std::to_string(v));
    }

    std::uint64_t mask_ = 0;
};

inline std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace edgereg

#endif
