#pragma once

#include <bit>
#include <cstdint>

namespace taquin {

// Dense set of element indices 0..63 over one machine word.
// Posets in this library are capped at 64 elements so every subset,
// ideal, filter and interval is a single uint64_t.
struct ElemSet {
    uint64_t bits = 0;

    ElemSet() = default;
    explicit constexpr ElemSet(uint64_t b) : bits(b) {}

    static constexpr ElemSet none() { return ElemSet(0); }
    static constexpr ElemSet full(int n) {
        return ElemSet(n >= 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1);
    }
    static constexpr ElemSet single(int e) { return ElemSet(uint64_t(1) << e); }

    bool has(int e) const { return bits >> e & 1; }
    void add(int e) { bits |= uint64_t(1) << e; }
    void remove(int e) { bits &= ~(uint64_t(1) << e); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    // lowest element, -1 if empty
    int first() const { return bits ? std::countr_zero(bits) : -1; }
    // removes and returns the lowest element; set must be non-empty
    int pop() {
        int e = std::countr_zero(bits);
        bits &= bits - 1;
        return e;
    }

    bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }

    friend ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits | b.bits); }
    friend ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits & b.bits); }
    friend ElemSet operator^(ElemSet a, ElemSet b) { return ElemSet(a.bits ^ b.bits); }
    friend ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits & ~b.bits); }
    ElemSet& operator|=(ElemSet o) { bits |= o.bits; return *this; }
    ElemSet& operator&=(ElemSet o) { bits &= o.bits; return *this; }
    friend bool operator==(ElemSet a, ElemSet b) { return a.bits == b.bits; }
    friend bool operator!=(ElemSet a, ElemSet b) { return a.bits != b.bits; }
    friend bool operator<(ElemSet a, ElemSet b) { return a.bits < b.bits; }
};

}  // namespace taquin
