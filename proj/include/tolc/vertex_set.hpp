#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tolc {

// A subset of the vertex ids 0..63, packed into one machine word.
// Doubles as a face: dim(s) = s.size() - 1, so dim of the empty set is -1.
class VertexSet {
public:
    static constexpr int max_vertices = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> ids) {
        for (int v : ids) insert(v);
    }

    // {0, 1, ..., n-1}
    static VertexSet first_n(int n) {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("vertex count out of range (0..64)");
        return n == max_vertices ? VertexSet(~std::uint64_t{0})
                                 : VertexSet((std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }

    constexpr bool contains(int v) const {
        return v >= 0 && v < max_vertices && ((bits_ >> v) & 1u);
    }

    void insert(int v) {
        if (v < 0 || v >= max_vertices)
            throw std::invalid_argument("vertex id out of range (0..63)");
        bits_ |= std::uint64_t{1} << v;
    }

    // Lowest vertex id, or -1 when empty.
    constexpr int lowest() const {
        return bits_ == 0 ? -1 : std::countr_zero(bits_);
    }

    constexpr bool subset_of(VertexSet other) const {
        return (bits_ & ~other.bits_) == 0;
    }

    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : ids()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
    friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
    // Numeric order on the bitmask; the canonical tie-break everywhere a witness is returned.
    friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

using Face = VertexSet;

// Invokes f on every subset of s, including the empty set and s itself,
// in ascending bitmask order.
template <typename F>
void for_each_subset(VertexSet s, F&& f) {
    const std::uint64_t m = s.bits();
    std::uint64_t sub = 0;
    while (true) {
        f(VertexSet(sub));
        if (sub == m) break;
        sub = (sub - m) & m;  // next subset of m above sub
    }
}

// All subsets of s with exactly k elements, ascending bitmask order.
std::vector<VertexSet> subsets_of_size(VertexSet s, int k);

}  // namespace tolc
