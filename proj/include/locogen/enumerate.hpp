#pragma once

#include "complex.hpp"

namespace locogen {

// All simplicial complexes over n vertices: one per downward-closed family of
// subsets, counting the no-simplex family and the family {empty set}
// separately. Counts for n = 1..5 are 3, 6, 20, 168, 7581. Results come
// sorted by (maximal-simplex count, vertex-lex antichain order).
inline std::vector<SimplicialComplex> enumerate_complexes(int n) {
    require(n >= 1 && n <= 5, "complex enumeration supports 1 <= n <= 5");
    // Non-empty subsets ordered by size then value, so every facet of a set
    // is decided before the set itself.
    std::vector<Mask> order;
    for (Mask m = 1; m <= full_mask(n); ++m) order.push_back(m);
    std::sort(order.begin(), order.end(), [](Mask a, Mask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    std::vector<SimplicialComplex> out;
    out.push_back(SimplicialComplex::empty(n));
    out.push_back(SimplicialComplex::empty_simplex_only(n));
    std::vector<char> in_family(std::size_t{1} << n, 0);
    std::vector<Mask> chosen;
    // DFS over in/out decisions; a set may be in only if all its facets are.
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == order.size()) {
            if (!chosen.empty()) out.push_back(SimplicialComplex::from_maximal(n, chosen));
            return;
        }
        Mask s = order[k];
        self(self, k + 1);
        bool ok = true;
        for (Mask t = s; t; t &= t - 1) {
            Mask facet = s & ~(t & (~t + 1));
            if (facet != 0 && !in_family[facet]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            in_family[s] = 1;
            chosen.push_back(s);
            self(self, k + 1);
            chosen.pop_back();
            in_family[s] = 0;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), complex_order_less);
    return out;
}

// Orbit representatives under a permutation group, in enumeration order; each
// representative is the canonical form of its orbit.
inline std::vector<SimplicialComplex> enumerate_complexes_up_to(
    int n, const std::vector<Permutation>& group) {
    std::vector<SimplicialComplex> out;
    for (const SimplicialComplex& K : enumerate_complexes(n))
        if (K == canonical_form(K, group)) out.push_back(K);
    return out;
}

// Expands an orbit representative back to its full orbit, deduplicated.
inline std::vector<SimplicialComplex> expand_orbit(const SimplicialComplex& K,
                                                   const std::vector<Permutation>& group) {
    std::vector<SimplicialComplex> out;
    for (const Permutation& g : group) {
        SimplicialComplex r = relabel(K, g);
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), complex_order_less);
    return out;
}

}  // namespace locogen
