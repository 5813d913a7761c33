#ifndef LEAKY_VERTEX_SET_HPP
#define LEAKY_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace leaky {

// Fixed-capacity bitset over vertex ids 0..n-1, words stored inline.
//
// Capacity 256 covers everything this library targets: the exact solver is
// capped near n = 30, fort enumeration near n = 24, and the largest
// generalized Petersen instances verified adversarially have 2n = 192
// vertices.
class VertexSet {
public:
    static constexpr int max_vertices = 256;
    static constexpr int words = max_vertices / 64;

    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe) {
        if (universe < 0 || universe > max_vertices)
            throw std::invalid_argument("VertexSet: universe size " + std::to_string(universe) +
                                        " out of range 0.." + std::to_string(max_vertices));
    }

    VertexSet(int universe, std::initializer_list<int> items) : VertexSet(universe) {
        for (int v : items) insert(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w * 64 < universe; ++w) {
            int remaining = universe - w * 64;
            s.bits_[w] = remaining >= 64 ? ~uint64_t{0} : ((uint64_t{1} << remaining) - 1);
        }
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (bits_[v >> 6] >> (v & 63)) & 1;
    }

    void insert(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && v < n_);
        bits_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() { bits_ = {}; }

    int size() const {
        int c = 0;
        for (int w = 0; w < active_words(); ++w) c += std::popcount(bits_[w]);
        return c;
    }

    bool empty() const {
        for (int w = 0; w < active_words(); ++w)
            if (bits_[w]) return false;
        return true;
    }

    bool is_subset_of(const VertexSet& other) const {
        for (int w = 0; w < active_words(); ++w)
            if (bits_[w] & ~other.bits_[w]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (int w = 0; w < active_words(); ++w)
            if (bits_[w] & other.bits_[w]) return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other) {
        for (int w = 0; w < active_words(); ++w) bits_[w] |= other.bits_[w];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        for (int w = 0; w < active_words(); ++w) bits_[w] &= other.bits_[w];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& other) {
        for (int w = 0; w < active_words(); ++w) bits_[w] &= ~other.bits_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const { return full(n_) - *this; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return false;
        for (int w = 0; w < a.active_words(); ++w)
            if (a.bits_[w] != b.bits_[w]) return false;
        return true;
    }
    friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }

    // First member, or -1 if empty.
    int first() const { return next(-1); }

    // Smallest member greater than v, or -1.
    int next(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        int w = start >> 6;
        uint64_t word = bits_[w] & (~uint64_t{0} << (start & 63));
        while (true) {
            if (word) {
                int r = (w << 6) + std::countr_zero(word);
                return r < n_ ? r : -1;
            }
            if (++w >= active_words()) return -1;
            word = bits_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    // Count of members intersecting another set.
    int intersection_size(const VertexSet& other) const {
        int c = 0;
        for (int w = 0; w < active_words(); ++w) c += std::popcount(bits_[w] & other.bits_[w]);
        return c;
    }

    // Lexicographic order on the sorted member lists: the set owning the
    // smallest element of the symmetric difference is the smaller one.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        assert(a.n_ == b.n_);
        for (int w = 0; w < a.active_words(); ++w) {
            uint64_t diff = a.bits_[w] ^ b.bits_[w];
            if (diff) {
                uint64_t low = diff & -diff;
                return a.bits_[w] & low;
            }
        }
        return false;
    }

    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (int v = first(); v >= 0; v = next(v)) {
            if (sep) out += ",";
            out += std::to_string(v);
            sep = true;
        }
        return out + "}";
    }

private:
    int active_words() const { return (n_ + 63) >> 6; }

    int n_ = 0;
    std::array<uint64_t, words> bits_{};
};

}  // namespace leaky

#endif
