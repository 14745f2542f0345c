#pragma once

#include <cstdint>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spslab {

/// Fixed-width dynamic bitset used for point subsets and lattice-element sets.
/// Unused high bits of the last word are kept zero, so equality and ordering
/// reduce to word comparisons.
class Bitset {
public:
    Bitset() : nbits_(0) {}

    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative width");
    }

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~std::uint64_t{0};
        b.trim();
        return b;
    }

    int width() const { return nbits_; }

    bool test(int i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    Bitset& set(int i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        return *this;
    }

    Bitset& reset(int i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
        return *this;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        for (auto w : words_) if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    bool is_subset_of(const Bitset& other) const {
        check_width(other);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        check_width(other);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    Bitset operator&(const Bitset& other) const {
        check_width(other);
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & other.words_[k];
        return r;
    }

    Bitset operator|(const Bitset& other) const {
        check_width(other);
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] | other.words_[k];
        return r;
    }

    /// Set difference: elements of *this not in other.
    Bitset minus(const Bitset& other) const {
        check_width(other);
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & ~other.words_[k];
        return r;
    }

    /// Complement within the universe of `width()` points.
    Bitset complement() const {
        Bitset r(nbits_);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }
    bool operator!=(const Bitset& other) const { return !(*this == other); }

    /// Canonical order on subsets of one universe: by cardinality, then
    /// lexicographically on the ascending sequence of member indices.
    /// For equal cardinality the lowest index in the symmetric difference
    /// decides, and the set that contains it comes first.
    static bool canonical_less(const Bitset& a, const Bitset& b) {
        a.check_width(b);
        int ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (size_t k = 0; k < a.words_.size(); ++k) {
            std::uint64_t diff = a.words_[k] ^ b.words_[k];
            if (diff) {
                std::uint64_t low = diff & (~diff + 1);
                return a.words_[k] & low;
            }
        }
        return false;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(int(k) * 64 + b);
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                int b = std::countr_zero(w);
                fn(int(k) * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(nbits_);
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() {
        int tail = nbits_ & 63;
        if (tail && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
        if (nbits_ == 0) words_.clear();
    }

    void check_index(int i) const {
        if (i < 0 || i >= nbits_) throw std::invalid_argument("Bitset: index out of range");
    }

    void check_width(const Bitset& other) const {
        if (nbits_ != other.nbits_) throw std::invalid_argument("Bitset: width mismatch");
    }

    int nbits_;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace spslab
