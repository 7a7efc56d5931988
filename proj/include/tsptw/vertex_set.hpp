#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tsptw {

// Fixed-width bitset over vertex ids 0..universe-1.  The width covers the
// classical benchmark sizes (up to 446 customers) and keeps sets inline and
// trivially copyable, which the search's label arena depends on.
class VertexSet {
public:
    static constexpr int kMaxUniverse = 448;
    static constexpr std::size_t kWords = kMaxUniverse / 64;

    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe) {}

    int universe() const { return universe_; }

    void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const {
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1;
    }

    // True when other is a subset of this set.
    bool contains_all(const VertexSet& other) const {
        std::uint64_t stray = 0;
        for (std::size_t i = 0; i < kWords; ++i) stray |= other.words_[i] & ~words_[i];
        return stray == 0;
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (int v = 0; v < universe_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ULL;
        for (std::uint64_t w : words_) {
            h ^= w;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }

private:
    int universe_ = 0;
    std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace tsptw
