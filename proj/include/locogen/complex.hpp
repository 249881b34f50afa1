#pragma once

#include "permutation.hpp"

namespace locogen {

// An abstract simplicial complex over vertices {0,...,n-1}, stored as the
// antichain of maximal simplices in vertex-lex order. Two distinct degenerate
// complexes exist: the empty complex (no simplices at all, no maximal list)
// and the complex whose only simplex is the empty set (maximal list {{}}).
class SimplicialComplex {
  public:
    SimplicialComplex(int n, std::vector<Mask> maximal_antichain, bool checked)
        : n_(n), maximal_(std::move(maximal_antichain)) {
        require(n_ >= 0 && n_ <= 20, "complex supports 0 <= n <= 20 vertices");
        if (!checked) normalize();
        for (Mask m : maximal_) require((m & ~full_mask(n_)) == 0, "simplex vertex out of range");
    }

    static SimplicialComplex empty(int n) { return SimplicialComplex(n, {}, true); }

    static SimplicialComplex empty_simplex_only(int n) { return SimplicialComplex(n, {0}, true); }

    static SimplicialComplex from_maximal(int n, const std::vector<Mask>& sets) {
        return SimplicialComplex(n, sets, false);
    }

    static SimplicialComplex from_maximal(int n, const std::vector<std::vector<int>>& sets) {
        std::vector<Mask> masks;
        masks.reserve(sets.size());
        for (const auto& s : sets) masks.push_back(vertices_to_mask(s));
        return from_maximal(n, masks);
    }

    int n() const { return n_; }
    const std::vector<Mask>& maximal() const { return maximal_; }
    bool is_empty_complex() const { return maximal_.empty(); }

    bool contains(Mask s) const {
        for (Mask m : maximal_)
            if ((s & ~m) == 0) return true;
        return false;
    }

    bool operator==(const SimplicialComplex& o) const {
        return n_ == o.n_ && maximal_ == o.maximal_;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

    // Subcomplex test: every simplex of this lies in o.
    bool subset_of(const SimplicialComplex& o) const {
        require(n_ == o.n_, "comparing complexes over different vertex sets");
        for (Mask m : maximal_)
            if (!o.contains(m)) return false;
        return true;
    }

    bool proper_subset_of(const SimplicialComplex& o) const {
        return subset_of(o) && !(*this == o);
    }

    // All simplices including the empty one when present, vertex-lex order.
    std::vector<Mask> all_simplices() const {
        std::vector<Mask> out;
        for (Mask s = 0; s <= full_mask(n_); ++s) {
            if (contains(s)) out.push_back(s);
            if (s == full_mask(n_)) break;
        }
        std::sort(out.begin(), out.end(), vertex_lex_less);
        return out;
    }

    int count_nonempty_simplices() const {
        int c = 0;
        for (Mask s : all_simplices())
            if (s != 0) ++c;
        return c;
    }

    // Vertices that appear in some simplex.
    Mask support() const {
        Mask s = 0;
        for (Mask m : maximal_) s |= m;
        return s;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (contains(bit(i) | bit(j))) out.emplace_back(i, j);
        return out;
    }

  private:
    void normalize() {
        std::vector<Mask> keep;
        for (Mask a : maximal_) {
            bool absorbed = false;
            for (Mask b : maximal_)
                if (a != b && (a & ~b) == 0) {
                    // a is a proper subset of b, or a duplicate kept once below.
                    absorbed = true;
                    break;
                }
            if (!absorbed) keep.push_back(a);
        }
        std::sort(keep.begin(), keep.end(), vertex_lex_less);
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        maximal_ = std::move(keep);
    }

    int n_;
    std::vector<Mask> maximal_;
};

// Complex induced by a family of sets: all their subsets. Empty sets in the
// family are dropped unless the family consists only of empty sets, in which
// case the empty-simplex complex is returned; an empty family gives the empty
// complex.
inline SimplicialComplex induced_complex(int n, const std::vector<Mask>& sets) {
    if (sets.empty()) return SimplicialComplex::empty(n);
    std::vector<Mask> nonempty;
    for (Mask s : sets)
        if (s != 0) nonempty.push_back(s);
    if (nonempty.empty()) return SimplicialComplex::empty_simplex_only(n);
    return SimplicialComplex::from_maximal(n, nonempty);
}

inline SimplicialComplex full_complex(int n) {
    require(n >= 1, "full complex needs at least one vertex");
    return SimplicialComplex::from_maximal(n, std::vector<Mask>{full_mask(n)});
}

// All (n-1)-subsets of the vertex set; for n = 1 this is the empty-simplex complex.
inline SimplicialComplex boundary_complex(int n) {
    require(n >= 1, "boundary complex needs at least one vertex");
    std::vector<Mask> sets;
    for (int i = 0; i < n; ++i) sets.push_back(full_mask(n) & ~bit(i));
    return induced_complex(n, sets);
}

inline SimplicialComplex singletons_complex(int n) {
    std::vector<Mask> sets;
    for (int i = 0; i < n; ++i) sets.push_back(bit(i));
    return SimplicialComplex::from_maximal(n, sets);
}

inline SimplicialComplex complete_graph_complex(int n) {
    require(n >= 1, "complete graph needs at least one vertex");
    if (n == 1) return singletons_complex(1);
    std::vector<Mask> sets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) sets.push_back(bit(i) | bit(j));
    return SimplicialComplex::from_maximal(n, sets);
}

// Restriction K|_J: simplices contained in J, vertices reindexed ascending.
// The caller keeps J as the record of original vertex names.
inline SimplicialComplex restrict_to(const SimplicialComplex& K, Mask J) {
    std::vector<int> verts = mask_to_vertices(J);
    int nn = static_cast<int>(verts.size());
    if (K.is_empty_complex()) return SimplicialComplex::empty(nn);
    std::vector<int> newindex(K.n(), -1);
    for (int k = 0; k < nn; ++k) newindex[verts[k]] = k;
    // The simplices of K inside J are exactly the subsets of the m & J, so
    // those intersections span the restriction.
    std::vector<Mask> nonempty;
    for (Mask m : K.maximal()) {
        Mask re = 0;
        for (int v : mask_to_vertices(m & J)) re |= bit(newindex[v]);
        if (re) nonempty.push_back(re);
    }
    if (nonempty.empty()) return SimplicialComplex::empty_simplex_only(nn);
    return SimplicialComplex::from_maximal(nn, nonempty);
}

// Join: simplices are unions of one simplex from each side, with the second
// factor's vertices relabelled to come after the first factor's.
inline SimplicialComplex join(const SimplicialComplex& K0, const SimplicialComplex& K1) {
    int n = K0.n() + K1.n();
    if (K0.is_empty_complex() || K1.is_empty_complex()) return SimplicialComplex::empty(n);
    std::vector<Mask> sets;
    for (Mask a : K0.maximal())
        for (Mask b : K1.maximal()) sets.push_back(a | (b << K0.n()));
    if (sets.size() == 1 && sets[0] == 0) return SimplicialComplex::empty_simplex_only(n);
    std::vector<Mask> nonempty;
    for (Mask s : sets)
        if (s) nonempty.push_back(s);
    return SimplicialComplex::from_maximal(n, nonempty);
}

// Cone: join with a fresh apex vertex, placed at index n so existing vertex
// names are preserved.
inline SimplicialComplex cone(const SimplicialComplex& K) {
    int n = K.n() + 1;
    if (K.is_empty_complex())
        return SimplicialComplex::from_maximal(n, std::vector<Mask>{bit(K.n())});
    std::vector<Mask> sets;
    for (Mask m : K.maximal()) sets.push_back(m | bit(K.n()));
    return SimplicialComplex::from_maximal(n, sets);
}

inline SimplicialComplex suspension(const SimplicialComplex& K) {
    int n = K.n() + 2;
    if (K.is_empty_complex())
        return SimplicialComplex::from_maximal(n, std::vector<Mask>{bit(K.n()), bit(K.n() + 1)});
    std::vector<Mask> sets;
    for (Mask m : K.maximal()) {
        sets.push_back(m | bit(K.n()));
        sets.push_back(m | bit(K.n() + 1));
    }
    return SimplicialComplex::from_maximal(n, sets);
}

// The cone over the complete graph on the other vertices, apex a; the minimal
// complexes generating the one-hot languages have this shape.
inline SimplicialComplex apex_cone_complex(int n, int a) {
    require(n >= 3 && a >= 0 && a < n, "apex cone needs n >= 3 and a valid apex");
    std::vector<Mask> sets;
    std::vector<int> others;
    for (int i = 0; i < n; ++i)
        if (i != a) others.push_back(i);
    for (std::size_t p = 0; p < others.size(); ++p)
        for (std::size_t q = p + 1; q < others.size(); ++q)
            sets.push_back(bit(a) | bit(others[p]) | bit(others[q]));
    return SimplicialComplex::from_maximal(n, sets);
}

// Connectivity: no split of the vertex set into two non-empty parts with
// every simplex inside one part. Vertices lying in no simplex are their own
// components, so a complex over n >= 2 vertices with uncovered vertices is
// disconnected; over one vertex every complex is connected.
inline bool is_connected(const SimplicialComplex& K) {
    int n = K.n();
    if (n <= 1) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Mask m : K.maximal()) {
        auto vs = mask_to_vertices(m);
        for (std::size_t k = 1; k < vs.size(); ++k) parent[find(vs[0])] = find(vs[k]);
    }
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0)) return false;
    return true;
}

// Splits of the vertex set witnessing disconnection, reported as the mask of
// the part containing vertex 0.
inline std::vector<Mask> disconnection_splits(const SimplicialComplex& K) {
    std::vector<Mask> out;
    int n = K.n();
    Mask whole = full_mask(n);
    for (Mask part = 1; part < whole; part += 2) {  // vertex 0 stays in part
        bool ok = true;
        for (Mask m : K.maximal())
            if ((m & part) != 0 && (m & ~part) != 0) {
                ok = false;
                break;
            }
        if (ok) out.push_back(part);
    }
    return out;
}

inline SimplicialComplex relabel(const SimplicialComplex& K, const Permutation& g) {
    require(g.n() == K.n(), "permutation degree differs from complex vertex count");
    if (K.is_empty_complex()) return K;
    std::vector<Mask> sets;
    sets.reserve(K.maximal().size());
    for (Mask m : K.maximal()) sets.push_back(g.act(m));
    return SimplicialComplex(K.n(), std::move(sets), false);
}

// Orders complexes by maximal-simplex count, then vertex-lex on the antichains.
inline bool complex_order_less(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.maximal().size() != b.maximal().size()) return a.maximal().size() < b.maximal().size();
    const auto& x = a.maximal();
    const auto& y = b.maximal();
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] != y[k]) return vertex_lex_less(x[k], y[k]);
    }
    return false;
}

// Least relabelling of K under the given group, in complex_order_less order.
inline SimplicialComplex canonical_form(const SimplicialComplex& K,
                                        const std::vector<Permutation>& group) {
    SimplicialComplex best = K;
    for (const Permutation& g : group) {
        SimplicialComplex cand = relabel(K, g);
        if (complex_order_less(cand, best)) best = cand;
    }
    return best;
}

}  // namespace locogen
