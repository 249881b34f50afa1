#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace locogen {

// Letters are small non-negative integers below the alphabet size.
using Letter = int;
using Word = std::vector<Letter>;

// Vertex subsets (simplices, position sets) are bitmasks over at most 31 vertices.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline Mask bit(int i) { return Mask{1} << i; }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline bool mask_contains(Mask m, int i) { return (m >> i) & 1u; }

inline std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> v;
    for (Mask t = m; t; t &= t - 1) v.push_back(lowest_bit(t));
    return v;
}

inline Mask vertices_to_mask(const std::vector<int>& v) {
    Mask m = 0;
    for (int i : v) m |= bit(i);
    return m;
}

// Orders subsets by the lexicographic order of their sorted vertex lists,
// e.g. {0,3} before {1,2} and {0} before {0,1}.
inline bool vertex_lex_less(Mask a, Mask b) {
    while (a && b) {
        int x = lowest_bit(a), y = lowest_bit(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;
}

inline std::string mask_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int i : mask_to_vertices(m)) {
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

inline std::string word_to_string(const Word& w) {
    std::string s;
    bool plain = true;
    for (Letter a : w) plain = plain && a >= 0 && a < 10;
    bool first = true;
    for (Letter a : w) {
        if (!plain && !first) s += ".";
        s += std::to_string(a);
        first = false;
    }
    return s;
}

// Checked power used for table and tuple-space sizing.
inline std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (int k = 0; k < exp; ++k) {
        if (base != 0 && r > limit / base)
            throw std::overflow_error("size bound exceeded: " + std::to_string(base) + "^" +
                                      std::to_string(exp));
        r *= base;
    }
    return r;
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace locogen
