#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace afkit {

inline constexpr int kMaxArgs = 256;

// Fixed-capacity set of argument indices.
class ArgSet {
public:
    static constexpr int kWords = kMaxArgs / 64;

    constexpr ArgSet() = default;

    static ArgSet range(int n) {
        ArgSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.w_[w] = n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
        return s;
    }
    static ArgSet single(int i) {
        ArgSet s;
        s.set(i);
        return s;
    }

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    bool any() const { return !empty(); }
    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    int first() const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w]) return w * 64 + std::countr_zero(w_[w]);
        return -1;
    }
    // Next member strictly after i, or -1.
    int next(int i) const {
        ++i;
        if (i >= kMaxArgs) return -1;
        int w = i >> 6;
        uint64_t cur = w_[w] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w == kWords) return -1;
            cur = w_[w];
        }
    }

    bool subset_of(const ArgSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & ~o.w_[w]) return false;
        return true;
    }
    bool intersects(const ArgSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (w_[w] & o.w_[w]) return true;
        return false;
    }

    ArgSet& operator|=(const ArgSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] |= o.w_[w];
        return *this;
    }
    ArgSet& operator&=(const ArgSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= o.w_[w];
        return *this;
    }
    ArgSet& operator-=(const ArgSet& o) {
        for (int w = 0; w < kWords; ++w) w_[w] &= ~o.w_[w];
        return *this;
    }
    friend ArgSet operator|(ArgSet a, const ArgSet& b) { return a |= b; }
    friend ArgSet operator&(ArgSet a, const ArgSet& b) { return a &= b; }
    friend ArgSet operator-(ArgSet a, const ArgSet& b) { return a -= b; }
    friend ArgSet operator^(ArgSet a, const ArgSet& b) {
        for (int w = 0; w < kWords; ++w) a.w_[w] ^= b.w_[w];
        return a;
    }

    bool operator==(const ArgSet&) const = default;

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
        return out;
    }

    size_t hash() const {
        size_t h = 0;
        for (auto w : w_) h = h * 0x9e3779b97f4a7c15ULL ^ (w + (h >> 7));
        return h;
    }

    const std::array<uint64_t, kWords>& words() const { return w_; }

private:
    std::array<uint64_t, kWords> w_{};
};

// Canonical order: by size, then lexicographically by ascending member sequence.
inline bool canonical_less(const ArgSet& a, const ArgSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    int i = a.first(), j = b.first();
    while (i >= 0 && j >= 0) {
        if (i != j) return i < j;
        i = a.next(i);
        j = b.next(j);
    }
    return false;
}

struct ArgSetHash {
    size_t operator()(const ArgSet& s) const { return s.hash(); }
};

using ExtensionList = std::vector<ArgSet>;

// Sorts canonically and removes duplicates.
void canonicalize(ExtensionList& list);

}  // namespace afkit
