#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdom {

using Vertex = int;

// Fixed-universe vertex set backed by 64-bit words. All binary operations
// require both operands to share the same universe size.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : universe_(check_universe(universe)), words_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<Vertex> vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.add(v);
        return s;
    }

    static VertexSet of(int universe, const std::vector<Vertex>& vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.add(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < (int)s.words_.size(); ++w) s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    int size() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    bool contains(Vertex v) const {
        check_vertex(v);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }

    void add(Vertex v) {
        check_vertex(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }

    void remove(Vertex v) {
        check_vertex(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_same(other);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    VertexSet operator&(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator|(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator-(const VertexSet& o) const { return apply(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    VertexSet complement() const {
        VertexSet r(universe_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const { return universe_ == o.universe_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Smallest element, or -1 when empty.
    Vertex first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return (Vertex)(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                f((Vertex)(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    // Order used for every tie-break and enumeration: compare the sorted
    // vertex sequences lexicographically. Equivalently, the set containing
    // the smallest vertex where the two differ is the smaller one.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        a.check_same(b);
        for (size_t i = 0; i < a.words_.size(); ++i) {
            uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                uint64_t low = diff & (~diff + 1);
                return a.words_[i] & low;
            }
        }
        return false;  // equal
    }

    std::string to_string() const {
        std::string out = "{";
        bool first_el = true;
        for_each([&](Vertex v) {
            if (!first_el) out += ",";
            out += std::to_string(v);
            first_el = false;
        });
        out += "}";
        return out;
    }

    // Low word; only meaningful when universe() <= 64 (solver fast paths).
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

private:
    int universe_ = 0;
    std::vector<uint64_t> words_;

    static int check_universe(int u) {
        if (u < 0) throw std::invalid_argument("vertex set universe must be non-negative");
        return u;
    }

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
    }

    void check_same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::logic_error("vertex sets over different universes");
    }

    template <typename Op>
    VertexSet apply(const VertexSet& o, Op op) const {
        check_same(o);
        VertexSet r(universe_);
        for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = op(words_[i], o.words_[i]);
        return r;
    }

    void trim() {
        if (universe_ % 64 && !words_.empty())
            words_.back() &= (1ULL << (universe_ % 64)) - 1;
    }
};

}  // namespace superdom
