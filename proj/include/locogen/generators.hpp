#pragma once

#include "families.hpp"
#include "graph.hpp"
#include "procedure.hpp"

namespace locogen {

// Constant procedure with no input cells.
inline Procedure proc_constant(const Word& w, int asize) {
    std::vector<std::vector<int>> windows(w.size());
    std::vector<std::vector<Letter>> rules;
    for (Letter a : w) rules.push_back({a});
    return Procedure({}, static_cast<int>(w.size()), asize, std::move(windows), std::move(rules));
}

// One shared input cell carrying a word index; every output cell reads it.
// Generates L over any complex containing the full simplex.
inline Procedure proc_trivial(const Language& L) {
    std::vector<std::vector<int>> windows(L.n(), std::vector<int>{0});
    std::vector<std::vector<Letter>> rules(L.n());
    for (int i = 0; i < L.n(); ++i) {
        rules[i].resize(L.size());
        for (int b = 0; b < L.size(); ++b) rules[i][b] = L.word(b)[i];
    }
    return Procedure({L.size()}, L.n(), L.alphabet_size(), std::move(windows), std::move(rules));
}

namespace detail {
struct RootedTree {
    int root;
    std::vector<int> parent;               // -1 at the root
    std::vector<std::vector<int>> children;  // ascending
    std::vector<Mask> subtree;             // vertices in the subtree of v

    RootedTree(const Graph& T, int r) : root(r) {
        require(is_tree(T), "a tree is required");
        int n = T.n();
        parent.assign(n, -1);
        children.assign(n, {});
        subtree.assign(n, 0);
        std::vector<int> order;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{r};
        seen[r] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int u : mask_to_vertices(T.neighbors(v)))
                if (!seen[u]) {
                    seen[u] = true;
                    parent[u] = v;
                    children[v].push_back(u);
                    stack.push_back(u);
                }
        }
        for (auto& c : children) std::sort(c.begin(), c.end());
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            subtree[*it] |= bit(*it);
            for (int c : children[*it]) subtree[*it] |= subtree[c];
        }
    }
};

// Tuple digits all equal (edge letters around a vertex carry word indices).
inline bool all_digits_equal(const std::vector<Letter>& t) {
    for (Letter a : t)
        if (a != t[0]) return false;
    return true;
}

// Builds a rule table for output cell i over the given window by calling
// fn(window tuple) for each mixed-radix tuple, first window cell fastest.
template <typename Fn>
inline std::vector<Letter> build_table(const std::vector<int>& window,
                                       const std::vector<int>& input_sizes, Fn&& fn) {
    std::vector<int> sizes;
    for (int j : window) sizes.push_back(input_sizes[j]);
    std::uint64_t total = 1;
    for (int s : sizes) {
        total *= static_cast<std::uint64_t>(s);
        require(total <= (1u << 26), "rule table too large");
    }
    std::vector<Letter> table;
    table.reserve(total);
    for_each_input(sizes, [&](const std::vector<Letter>& t) { table.push_back(fn(t)); });
    return table;
}
}  // namespace detail

// Spanning-tree procedure for the even-weight language: each edge carries a
// bit and each vertex outputs the sum of its incident bits mod 2. With odd
// set, vertex 0 is complemented, giving the odd-weight language.
inline Procedure proc_parity_tree(const Graph& T, bool odd = false) {
    require(is_tree(T), "a spanning tree is required");
    int n = T.n();
    auto inc = T.incidence();
    std::vector<int> in_sizes(T.edges().size(), 2);
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    for (int i = 0; i < n; ++i) {
        windows[i] = inc[i];
        rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
            int s = 0;
            for (Letter a : t) s ^= a;
            if (odd && i == 0) s ^= 1;
            return s;
        });
    }
    return Procedure(in_sizes, n, 2, std::move(windows), std::move(rules));
}

// Spanning-tree procedure for the non-constant language. Edges carry words of
// the language; a vertex whose incident edges agree on w outputs w at its own
// position, and otherwise applies the fixed fixpoint-free map h(a) = a+1 mod
// |A| to the distinguished child's letter. The tree is rooted at 0 and the
// distinguished child is the lowest-index child.
inline Procedure proc_nc_tree(const Graph& T, int asize) {
    require(T.n() >= 2, "non-constant words need at least two positions");
    Language L = nc(T.n(), asize);
    detail::RootedTree R(T, 0);
    auto inc = T.incidence();
    const auto& edges = T.edges();
    int n = T.n();
    std::vector<int> in_sizes(edges.size(), L.size());
    // Edge index towards the distinguished child, -1 for leaves.
    std::vector<int> child_edge(n, -1), child_vertex(n, -1);
    for (int i = 0; i < n; ++i) {
        if (T.degree(i) <= 1) continue;
        int j = R.children[i][0];
        child_vertex[i] = j;
        for (int e : inc[i])
            if (edges[e].first + edges[e].second - i == j) child_edge[i] = e;
    }
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    for (int i = 0; i < n; ++i) {
        windows[i] = inc[i];
        int pos_of_child_edge = -1;
        for (std::size_t k = 0; k < windows[i].size(); ++k)
            if (windows[i][k] == child_edge[i]) pos_of_child_edge = static_cast<int>(k);
        rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
            if (detail::all_digits_equal(t)) return L.word(t[0])[i];
            Letter wj = L.word(t[pos_of_child_edge])[child_vertex[i]];
            return (wj + 1) % asize;
        });
    }
    return Procedure(in_sizes, n, asize, std::move(windows), std::move(rules));
}

// Edge-labelling procedure for an upwards-closed binary language over a graph
// G. Edges carry words of L; a vertex whose incident edges agree on U outputs
// U at its own position and otherwise 1. Isolated vertices with a varying
// position read a private cell over their letters; isolated constant
// positions are constant. Generates L exactly when G is L-connected.
inline Procedure proc_upclosed_edges(const Graph& G, const Language& L) {
    require(G.n() == L.n(), "graph and language arity differ");
    require(is_upwards_closed(L), "an upwards-closed language is required");
    auto inc = G.incidence();
    int n = G.n();
    std::vector<int> in_sizes(G.edges().size(), L.size());
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    std::vector<std::pair<int, std::vector<Letter>>> private_cells;  // vertex, letters
    for (int i = 0; i < n; ++i) {
        if (G.degree(i) > 0) {
            windows[i] = inc[i];
            continue;
        }
        auto letters = L.letters_at(i);
        if (letters.size() > 1) {
            int cell = static_cast<int>(in_sizes.size());
            in_sizes.push_back(static_cast<int>(letters.size()));
            windows[i] = {cell};
            private_cells.emplace_back(i, letters);
        }
    }
    for (int i = 0; i < n; ++i) {
        if (G.degree(i) > 0) {
            rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
                if (detail::all_digits_equal(t)) return L.word(t[0])[i];
                return Letter{1};
            });
        } else {
            auto letters = L.letters_at(i);
            if (letters.size() > 1) {
                rules[i] = std::vector<Letter>(letters.begin(), letters.end());
            } else {
                rules[i] = {letters[0]};
            }
        }
    }
    return Procedure(in_sizes, n, 2, std::move(windows), std::move(rules));
}

// Complement of a binary procedure: flips every output bit. The image is the
// letterwise complement and the communication complex is unchanged.
inline Procedure proc_complement(const Procedure& P) {
    require(P.output_alphabet() == 2, "complement needs binary outputs");
    std::vector<std::vector<int>> windows;
    std::vector<std::vector<Letter>> rules;
    for (int i = 0; i < P.output_n(); ++i) {
        windows.push_back(P.declared_window(i));
        std::vector<Letter> t = P.rule_table(i);
        for (Letter& a : t) a = 1 - a;
        rules.push_back(std::move(t));
    }
    return Procedure(P.input_sizes(), P.output_n(), 2, std::move(windows), std::move(rules));
}

// Complete-graph procedure for the at-most-one-1 language: each edge picks
// one endpoint (0 the lower, 1 the higher) and a vertex outputs 1 exactly
// when all its incident edges pick it. For n <= 2 the shared-cell procedure
// is returned, matching the full complex on two vertices.
inline Procedure proc_card_le1(int n) {
    if (n <= 2) return proc_trivial(card_le(n, 1));
    Graph G = complete_graph(n);
    auto inc = G.incidence();
    const auto& edges = G.edges();
    std::vector<int> in_sizes(edges.size(), 2);
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    for (int i = 0; i < n; ++i) {
        windows[i] = inc[i];
        rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
            for (std::size_t k = 0; k < t.size(); ++k) {
                auto [a, b] = edges[windows[i][k]];
                int picked = t[k] == 0 ? a : b;
                if (picked != i) return Letter{0};
            }
            return Letter{1};
        });
    }
    return Procedure(in_sizes, n, 2, std::move(windows), std::move(rules));
}

// Spanning-tree procedure for the adjacent-equality language over two
// letters. Edges carry words of the language, the tree is rooted at 0, and a
// vertex i with disagreeing incident edges outputs w_j + i + j + 1 mod 2
// where j is its lowest-index child and w the word on the edge towards j.
inline Procedure proc_eq_binary_tree(const Graph& T) {
    int n = T.n();
    Language L = eq(n, 2);
    detail::RootedTree R(T, 0);
    auto inc = T.incidence();
    const auto& edges = T.edges();
    std::vector<int> in_sizes(edges.size(), L.size());
    std::vector<int> child_edge(n, -1), child_vertex(n, -1);
    for (int i = 0; i < n; ++i) {
        if (T.degree(i) <= 1) continue;
        int j = R.children[i][0];
        child_vertex[i] = j;
        for (int e : inc[i])
            if (edges[e].first + edges[e].second - i == j) child_edge[i] = e;
    }
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    for (int i = 0; i < n; ++i) {
        windows[i] = inc[i];
        int pos_of_child_edge = -1;
        for (std::size_t k = 0; k < windows[i].size(); ++k)
            if (windows[i][k] == child_edge[i]) pos_of_child_edge = static_cast<int>(k);
        rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
            if (detail::all_digits_equal(t)) return L.word(t[0])[i];
            int j = child_vertex[i];
            Letter wj = L.word(t[pos_of_child_edge])[j];
            return (wj + i + j + 1) % 2;
        });
    }
    return Procedure(in_sizes, n, 2, std::move(windows), std::move(rules));
}

// True when rooting T at root gives every non-leaf vertex i a descendant at
// position i-1 or i+1.
inline bool descendant_condition_holds(const Graph& T, int root) {
    detail::RootedTree R(T, root);
    for (int i = 0; i < T.n(); ++i) {
        if (T.degree(i) <= 1) continue;
        Mask below = R.subtree[i] & ~bit(i);
        bool ok = (i > 0 && mask_contains(below, i - 1)) ||
                  (i + 1 < T.n() && mask_contains(below, i + 1));
        if (!ok) return false;
    }
    return true;
}

// Lowest root satisfying the descendant condition, if any.
inline std::optional<int> find_descendant_rooting(const Graph& T) {
    for (int r = 0; r < T.n(); ++r)
        if (descendant_condition_holds(T, r)) return r;
    return std::nullopt;
}

// Tree procedure for the adjacent-equality language over any alphabet, for
// rooted trees where every non-leaf i has a descendant j at position i-1 or
// i+1. Such a vertex with disagreeing incident edges outputs w_j, where w is
// the word on the edge towards j; the deepest disagreeing vertex then agrees
// with its neighbour position j, which lies in a subtree of agreeing edges.
inline Procedure proc_eq_descendant_tree(const Graph& T, int root, int asize) {
    int n = T.n();
    require(descendant_condition_holds(T, root), "descendant condition fails for this rooting");
    Language L = eq(n, asize);
    detail::RootedTree R(T, root);
    auto inc = T.incidence();
    const auto& edges = T.edges();
    std::vector<int> in_sizes(edges.size(), L.size());
    // For each non-leaf: the target position j and the edge towards it.
    std::vector<int> target(n, -1), toward_edge(n, -1);
    for (int i = 0; i < n; ++i) {
        if (T.degree(i) <= 1) continue;
        Mask below = R.subtree[i] & ~bit(i);
        int j = -1;
        if (i > 0 && mask_contains(below, i - 1)) j = i - 1;
        else if (i + 1 < n && mask_contains(below, i + 1)) j = i + 1;
        target[i] = j;
        for (int c : R.children[i])
            if (mask_contains(R.subtree[c], j)) {
                for (int e : inc[i])
                    if (edges[e].first + edges[e].second - i == c) toward_edge[i] = e;
            }
    }
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    for (int i = 0; i < n; ++i) {
        windows[i] = inc[i];
        int pos_of_edge = -1;
        for (std::size_t k = 0; k < windows[i].size(); ++k)
            if (windows[i][k] == toward_edge[i]) pos_of_edge = static_cast<int>(k);
        rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
            if (detail::all_digits_equal(t)) return L.word(t[0])[i];
            return L.word(t[pos_of_edge])[target[i]];
        });
    }
    return Procedure(in_sizes, n, asize, std::move(windows), std::move(rules));
}

// The three-edge tree procedure for adjacent-equality words on four
// positions over any alphabet: edges {0,2} and {1,3} carry letters x and z,
// edge {1,2} carries a triple (u,v,s) with s in {1,2}, encoded as
// u + |A|v + |A|^2(s-1). Case s=1: cell 1 outputs u when v = z and v
// otherwise, cell 2 outputs v. Case s=2: cell 1 outputs u, cell 2 outputs v
// when u = x and u otherwise. Outputs are xuzz/xvvz or xxvz/xuuz, always
// with an equal adjacent pair, and every such word is reached.
inline Procedure proc_eq_fig4(int asize) {
    require(asize >= 2, "two letters at least are required");
    int pair = asize * asize;
    std::vector<int> in_sizes{asize, 2 * pair, asize};  // edges {0,2}, {1,2}, {1,3}
    auto decode_u = [=](Letter y) { return y % asize; };
    auto decode_v = [=](Letter y) { return (y / asize) % asize; };
    auto decode_s = [=](Letter y) { return y / pair + 1; };
    std::vector<std::vector<int>> windows{{0}, {1, 2}, {0, 1}, {2}};
    std::vector<std::vector<Letter>> rules(4);
    rules[0] = detail::build_table(windows[0], in_sizes,
                                   [&](const std::vector<Letter>& t) { return t[0]; });
    rules[1] = detail::build_table(windows[1], in_sizes, [&](const std::vector<Letter>& t) {
        Letter y = t[0], z = t[1];
        int u = decode_u(y), v = decode_v(y);
        if (decode_s(y) == 1) return v == z ? u : v;
        return u;
    });
    rules[2] = detail::build_table(windows[2], in_sizes, [&](const std::vector<Letter>& t) {
        Letter x = t[0], y = t[1];
        int u = decode_u(y), v = decode_v(y);
        if (decode_s(y) == 2) return u == x ? v : u;
        return v;
    });
    rules[3] = detail::build_table(windows[3], in_sizes,
                                   [&](const std::vector<Letter>& t) { return t[0]; });
    return Procedure(in_sizes, 4, asize, std::move(windows), std::move(rules));
}

// Extends a procedure generating the projection of L to J into one generating
// L: positions outside J read everything plus a fresh selector cell and pick
// an extension of the projected output, in lexicographic order, clamped. The
// communication complex stays inside the join of the full simplex on the
// complement of J with the original complex.
inline Procedure proc_join_extend(const Procedure& P, const Language& L, Mask J) {
    std::vector<int> Jv = mask_to_vertices(J);
    require(!Jv.empty() && popcount(J) < L.n(), "J must be a proper non-empty position set");
    require(P.output_n() == static_cast<int>(Jv.size()), "P must produce the projection to J");
    Language proj = project(L, J);
    require(image(P).same_words(proj), "P must generate the projection of L to J");
    // Extensions of each projected word, in language order.
    std::vector<std::vector<int>> ext(proj.size());
    for (int k = 0; k < L.size(); ++k) {
        Word r(Jv.size());
        for (std::size_t t = 0; t < Jv.size(); ++t) r[t] = L.word(k)[Jv[t]];
        int idx = proj.index_of(r);
        ext[idx].push_back(k);
    }
    std::size_t cap = 1;
    for (const auto& e : ext) cap = std::max(cap, e.size());
    std::vector<int> in_sizes = P.input_sizes();
    int selector = static_cast<int>(in_sizes.size());
    in_sizes.push_back(static_cast<int>(cap));
    std::vector<std::vector<int>> windows(L.n());
    std::vector<std::vector<Letter>> rules(L.n());
    std::vector<int> pos_in_J(L.n(), -1);
    for (std::size_t t = 0; t < Jv.size(); ++t) pos_in_J[Jv[t]] = static_cast<int>(t);
    std::vector<int> all_cells;
    for (int c = 0; c <= selector; ++c) all_cells.push_back(c);
    for (int i = 0; i < L.n(); ++i) {
        if (pos_in_J[i] >= 0) {
            windows[i] = P.declared_window(pos_in_J[i]);
            rules[i] = P.rule_table(pos_in_J[i]);
        } else {
            windows[i] = all_cells;
            rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
                std::vector<Letter> x(t.begin(), t.end() - 1);
                Word r = P.eval(x);
                int idx = proj.index_of(r);
                const auto& cand = ext[idx];
                int c = std::min<int>(t.back(), static_cast<int>(cand.size()) - 1);
                return L.word(cand[c])[i];
            });
        }
    }
    return Procedure(in_sizes, L.n(), L.alphabet_size(), std::move(windows), std::move(rules));
}

// Canonical procedure generating the realizer of K over K itself: one input
// cell per maximal simplex, holding a word of the realizer. Cell i
// reconstructs, for each simplex S containing i, the bit of S read from the
// first maximal simplex containing S, and outputs the resulting letter. The
// mixed bits still define a single function h, so outputs stay in the
// realizer and diagonal inputs reach every word.
inline Procedure proc_realizer(const SimplicialComplex& K) {
    Language L = realizer(K);
    int n = K.n();
    std::vector<Mask> simplices;
    for (Mask s : K.all_simplices())
        if (s != 0) simplices.push_back(s);
    int m = static_cast<int>(simplices.size());
    const auto& maxl = K.maximal();
    int cells = static_cast<int>(maxl.size());
    // first_max[s] = index of the first maximal simplex containing simplex s.
    std::vector<int> first_max(m, -1);
    for (int s = 0; s < m; ++s)
        for (int c = 0; c < cells; ++c)
            if ((simplices[s] & ~maxl[c]) == 0) {
                first_max[s] = c;
                break;
            }
    std::vector<int> in_sizes(cells, L.size());
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < cells; ++c)
            if (mask_contains(maxl[c], i)) windows[i].push_back(c);
        std::vector<int> pos_of_cell(cells, -1);
        for (std::size_t k = 0; k < windows[i].size(); ++k)
            pos_of_cell[windows[i][k]] = static_cast<int>(k);
        rules[i] = detail::build_table(windows[i], in_sizes, [&](const std::vector<Letter>& t) {
            Letter out = 0;
            for (int s = 0; s < m; ++s) {
                if (!mask_contains(simplices[s], i)) continue;
                int c = first_max[s];
                Letter u = L.word(t[pos_of_cell[c]])[i];
                out |= u & static_cast<Letter>(bit(s));
            }
            return out;
        });
    }
    return Procedure(in_sizes, n, L.alphabet_size(), std::move(windows), std::move(rules));
}

// The three-cell reduction sending one-hot words on n positions to one-hot
// words on three: cell 0 reads position a, cell 1 reads position b, cell 2
// takes the maximum of the rest.
inline Procedure proc_one_hot_reduction(int n, int a, int b) {
    require(n >= 3 && a != b && a >= 0 && b >= 0 && a < n && b < n, "bad reduction positions");
    std::vector<int> rest;
    for (int j = 0; j < n; ++j)
        if (j != a && j != b) rest.push_back(j);
    std::vector<int> in_sizes(n, 2);
    std::vector<std::vector<int>> windows{{a}, {b}, rest};
    std::vector<std::vector<Letter>> rules(3);
    rules[0] = {0, 1};
    rules[1] = {0, 1};
    rules[2] = detail::build_table(windows[2], in_sizes, [&](const std::vector<Letter>& t) {
        return *std::max_element(t.begin(), t.end());
    });
    return Procedure(in_sizes, 3, 2, std::move(windows), std::move(rules));
}

}  // namespace locogen
