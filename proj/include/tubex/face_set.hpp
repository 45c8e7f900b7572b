#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tubex {

// subset of a ground set with <= 64 elements; one machine word
struct FaceSet {
    std::uint64_t bits = 0;

    constexpr FaceSet() = default;
    constexpr explicit FaceSet(std::uint64_t b) : bits(b) {}

    static constexpr FaceSet single(int i) { return FaceSet(1ull << i); }
    static constexpr FaceSet first_n(int n) {
        return FaceSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr bool contains(int i) const { return bits >> i & 1; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool subset_of(FaceSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(FaceSet o) const { return (bits & o.bits) != 0; }

    constexpr FaceSet operator|(FaceSet o) const { return FaceSet(bits | o.bits); }
    constexpr FaceSet operator&(FaceSet o) const { return FaceSet(bits & o.bits); }
    constexpr FaceSet operator-(FaceSet o) const { return FaceSet(bits & ~o.bits); }
    FaceSet& operator|=(FaceSet o) { bits |= o.bits; return *this; }
    FaceSet& operator&=(FaceSet o) { bits &= o.bits; return *this; }
    FaceSet& operator-=(FaceSet o) { bits &= ~o.bits; return *this; }
    constexpr bool operator==(const FaceSet&) const = default;

    int min_element() const { return std::countr_zero(bits); }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }
};

// canonical order used everywhere tubes or circuits are listed
inline bool canonical_less(FaceSet a, FaceSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits < b.bits;
}

}  // namespace tubex
