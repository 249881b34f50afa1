#pragma once

#include <numeric>

#include "core.hpp"

namespace locogen {

// A permutation of positions {0,...,n-1}, stored as the image list: g[i] is
// where position i is sent. Acting on words uses the left action
// (g.x)_i = x_{g^{-1}(i)}, so the letter at position i moves to position g[i].
struct Permutation {
    std::vector<int> map;

    explicit Permutation(std::vector<int> m) : map(std::move(m)) {
        std::vector<bool> seen(map.size(), false);
        for (int v : map) {
            require(v >= 0 && v < static_cast<int>(map.size()) && !seen[v],
                    "permutation image list is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> m(n);
        std::iota(m.begin(), m.end(), 0);
        return Permutation(std::move(m));
    }

    int n() const { return static_cast<int>(map.size()); }

    int operator()(int i) const { return map[i]; }

    bool operator==(const Permutation& o) const { return map == o.map; }

    bool operator<(const Permutation& o) const { return map < o.map; }

    Permutation inverse() const {
        std::vector<int> m(map.size());
        for (int i = 0; i < n(); ++i) m[map[i]] = i;
        return Permutation(std::move(m));
    }

    // Composition as functions: (g * h)(i) = g(h(i)).
    Permutation operator*(const Permutation& h) const {
        require(n() == h.n(), "composing permutations of different degree");
        std::vector<int> m(map.size());
        for (int i = 0; i < n(); ++i) m[i] = map[h.map[i]];
        return Permutation(std::move(m));
    }

    Word act(const Word& w) const {
        Word r(w.size());
        for (int i = 0; i < n(); ++i) r[map[i]] = w[i];
        return r;
    }

    Mask act(Mask s) const {
        Mask r = 0;
        for (Mask t = s; t; t &= t - 1) r |= bit(map[lowest_bit(t)]);
        return r;
    }
};

inline std::vector<Permutation> symmetric_group(int n) {
    require(n >= 1 && n <= 8, "symmetric group enumeration supports 1 <= n <= 8");
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(m);
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

}  // namespace locogen
