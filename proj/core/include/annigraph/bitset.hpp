#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace annigraph {

// Runtime-sized bitset. Adjacency rows live in these; the hot paths are
// test/set, popcount of intersections, and whole-row comparison.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    std::size_t and_count(const DynBitset& o) const {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
        return c;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    void or_with(const DynBitset& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    }

    // Equality after clearing bits i and j on both sides.
    bool equal_except(const DynBitset& o, std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t mask = ~std::uint64_t{0};
            if ((i >> 6) == k) mask &= ~(std::uint64_t{1} << (i & 63));
            if ((j >> 6) == k) mask &= ~(std::uint64_t{1} << (j & 63));
            if ((words_[k] & mask) != (o.words_[k] & mask)) return false;
        }
        return true;
    }

    bool operator==(const DynBitset&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace annigraph
