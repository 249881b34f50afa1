#pragma once

#include "complex.hpp"
#include "language.hpp"

namespace locogen {

// A simple undirected graph on vertices {0,...,n-1}. Isolated vertices are
// part of the vertex set even though no edge mentions them.
class Graph {
  public:
    Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
        require(n_ >= 1, "graph needs at least one vertex");
        adj_.assign(n_, 0);
        for (auto [a, b] : edge_list) {
            require(a >= 0 && b >= 0 && a < n_ && b < n_ && a != b, "bad edge");
            if (a > b) std::swap(a, b);
            if (mask_contains(adj_[a], b)) continue;
            adj_[a] |= bit(b);
            adj_[b] |= bit(a);
            edges_.emplace_back(a, b);
        }
        std::sort(edges_.begin(), edges_.end());
    }

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    Mask neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return popcount(adj_[v]); }
    bool has_edge(int a, int b) const { return mask_contains(adj_[a], b); }

    // Incident edge indices per vertex, ascending by edge index.
    std::vector<std::vector<int>> incidence() const {
        std::vector<std::vector<int>> inc(n_);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            inc[edges_[e].first].push_back(static_cast<int>(e));
            inc[edges_[e].second].push_back(static_cast<int>(e));
        }
        return inc;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Mask> adj_;
};

// Connectivity of the subgraph induced by the vertices in alive; the empty
// and singleton induced subgraphs count as connected.
inline bool is_connected_within(const Graph& G, Mask alive) {
    if (popcount(alive) <= 1) return true;
    int start = lowest_bit(alive);
    Mask seen = bit(start);
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int v : mask_to_vertices(frontier)) next |= G.neighbors(v) & alive & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

inline bool is_connected(const Graph& G) { return is_connected_within(G, full_mask(G.n())); }

// Removal characterization: removing any k-1 vertices leaves a connected
// graph. Removing all vertices or all but one counts as connected, so every
// graph on k vertices is at least k-connected in this sense.
inline bool vertex_connectivity_at_least(const Graph& G, int k) {
    if (k <= 0) return true;
    int r = k - 1;
    if (r >= G.n()) return true;
    // Enumerate all r-subsets of vertices via masks.
    Mask whole = full_mask(G.n());
    for (Mask rem = 0; rem <= whole; ++rem) {
        if (popcount(rem) == r && !is_connected_within(G, whole & ~rem)) return false;
        if (rem == whole) break;
    }
    return true;
}

// The 1-skeleton of a complex as a graph on the full vertex set.
inline Graph skeleton_graph(const SimplicialComplex& K) { return Graph(K.n(), K.edges()); }

// A graph viewed as a complex: its edges together with every singleton, so
// that each vertex of the graph is a simplex.
inline SimplicialComplex graph_as_complex(const Graph& G) {
    std::vector<Mask> sets;
    for (auto [a, b] : G.edges()) sets.push_back(bit(a) | bit(b));
    for (int v = 0; v < G.n(); ++v) sets.push_back(bit(v));
    return SimplicialComplex::from_maximal(G.n(), sets);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

inline Graph path_graph(const std::vector<int>& order) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) es.emplace_back(order[k], order[k + 1]);
    int n = static_cast<int>(order.size());
    return Graph(n, std::move(es));
}

// All labelled trees on n vertices via Prufer decoding: n^(n-2) trees for
// n >= 2, the single-vertex tree for n = 1.
inline std::vector<Graph> spanning_trees(int n) {
    require(n >= 1 && n <= 7, "tree enumeration supports 1 <= n <= 7");
    std::vector<Graph> out;
    if (n == 1) {
        out.emplace_back(1, std::vector<std::pair<int, int>>{});
        return out;
    }
    if (n == 2) {
        out.emplace_back(2, std::vector<std::pair<int, int>>{{0, 1}});
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        // Decode the Prufer sequence seq.
        std::vector<int> deg(n, 1);
        for (int v : seq) ++deg[v];
        std::vector<std::pair<int, int>> es;
        std::vector<bool> used(n, false);
        std::vector<int> degc = deg;
        for (int v : seq) {
            int leaf = -1;
            for (int u = 0; u < n; ++u)
                if (degc[u] == 1 && !used[u]) {
                    leaf = u;
                    break;
                }
            es.emplace_back(leaf, v);
            used[leaf] = true;
            --degc[v];
        }
        std::vector<int> last;
        for (int u = 0; u < n; ++u)
            if (!used[u] && degc[u] == 1) last.push_back(u);
        es.emplace_back(last[0], last[1]);
        out.emplace_back(n, std::move(es));
        // Next sequence.
        int k = n - 3;
        while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
        if (k < 0) break;
        ++seq[k];
    }
    return out;
}

inline bool is_tree(const Graph& G) {
    return static_cast<int>(G.edges().size()) == G.n() - 1 && is_connected(G);
}

// Maximal non-members of a binary upwards-closed language, as subset masks.
inline std::vector<Mask> maximal_nonmembers(const Language& L) {
    auto masks = detail::binary_word_masks(L);
    std::vector<Mask> non;
    Mask whole = full_mask(L.n());
    for (Mask m = 0; m <= whole; ++m) {
        if (!std::binary_search(masks.begin(), masks.end(), m)) non.push_back(m);
        if (m == whole) break;
    }
    std::vector<Mask> out;
    for (Mask a : non) {
        bool maximal = true;
        for (Mask b : non)
            if (a != b && (a & ~b) == 0) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(a);
    }
    return out;
}

// Minimal non-members of a binary downwards-closed language.
inline std::vector<Mask> minimal_nonmembers(const Language& L) {
    auto masks = detail::binary_word_masks(L);
    std::vector<Mask> non;
    Mask whole = full_mask(L.n());
    for (Mask m = 0; m <= whole; ++m) {
        if (!std::binary_search(masks.begin(), masks.end(), m)) non.push_back(m);
        if (m == whole) break;
    }
    std::vector<Mask> out;
    for (Mask a : non) {
        bool minimal = true;
        for (Mask b : non)
            if (a != b && (b & ~a) == 0) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(a);
    }
    return out;
}

// G is L-connected when removing any maximal non-member of L leaves a
// connected induced subgraph. L must be binary and upwards closed.
inline bool is_L_connected(const Graph& G, const Language& L) {
    require(G.n() == L.n(), "graph and language arity differ");
    require(is_upwards_closed(L), "L-connectivity requires an upwards-closed language");
    for (Mask W : maximal_nonmembers(L))
        if (!is_connected_within(G, full_mask(G.n()) & ~W)) return false;
    return true;
}

// Witness for failure of L-connectivity: a maximal non-member whose removal
// disconnects G, if any.
inline std::optional<Mask> L_connectivity_violation(const Graph& G, const Language& L) {
    for (Mask W : maximal_nonmembers(L))
        if (!is_connected_within(G, full_mask(G.n()) & ~W)) return W;
    return std::nullopt;
}

// Criterion for downwards-closed languages: every minimal non-member induces
// a connected subgraph of G.
inline bool downwards_criterion(const Graph& G, const Language& L) {
    require(G.n() == L.n(), "graph and language arity differ");
    require(is_downwards_closed(L), "criterion requires a downwards-closed language");
    for (Mask W : minimal_nonmembers(L))
        if (!is_connected_within(G, W)) return false;
    return true;
}

inline std::optional<Mask> downwards_criterion_violation(const Graph& G, const Language& L) {
    for (Mask W : minimal_nonmembers(L))
        if (!is_connected_within(G, W)) return W;
    return std::nullopt;
}

}  // namespace locogen
