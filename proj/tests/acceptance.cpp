#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "locogen/chromatic.hpp"
#include "locogen/decide.hpp"
#include "locogen/io.hpp"

using namespace locogen;

namespace {

// Shared fixtures and small helpers.

Procedure adjacent_ands() {
    std::vector<Letter> and_table = {0, 0, 0, 1};
    return Procedure({2, 2, 2, 2}, 3, 2, {{0, 1}, {1, 2}, {2, 3}},
                     {and_table, and_table, and_table});
}

std::vector<Graph> all_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint32_t s = 0; s < (1u << pairs.size()); ++s) {
        std::vector<std::pair<int, int>> es;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (s >> e & 1) es.push_back(pairs[e]);
        out.emplace_back(n, std::move(es));
    }
    return out;
}

bool same_complex_set(std::vector<SimplicialComplex> a, std::vector<SimplicialComplex> b) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end(), complex_order_less);
    std::sort(b.begin(), b.end(), complex_order_less);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] != b[k]) return false;
    return true;
}

Language masks_language(int n, const std::vector<Mask>& ms) {
    std::vector<Word> words;
    for (Mask m : ms) words.push_back(detail::mask_to_word(m, n));
    return Language(n, 2, std::move(words));
}

// Independent connectivity check used by the oracles below; deliberately a
// fresh breadth-first search rather than a call into the library.
bool oracle_connected(const Graph& G, Mask alive) {
    if (popcount(alive) <= 1) return true;
    std::vector<int> verts = mask_to_vertices(alive);
    std::vector<int> queue{verts[0]};
    Mask seen = bit(verts[0]);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int u : verts)
            if (!mask_contains(seen, u) && G.has_edge(v, u)) {
                seen |= bit(u);
                queue.push_back(u);
            }
    }
    return seen == alive;
}

// All non-empty upwards-closed subsets of the n-cube, as word-mask lists.
std::vector<std::vector<Mask>> upward_families(int n) {
    int W = 1 << n;
    std::vector<std::vector<Mask>> out;
    for (std::uint32_t s = 1; s < (1u << W); ++s) {
        bool up = true;
        for (int w = 0; w < W && up; ++w) {
            if (!(s >> w & 1)) continue;
            for (int i = 0; i < n && up; ++i)
                if (!(s >> (w | (1u << i)) & 1)) up = false;
        }
        if (!up) continue;
        std::vector<Mask> ms;
        for (int w = 0; w < W; ++w)
            if (s >> w & 1) ms.push_back(static_cast<Mask>(w));
        out.push_back(std::move(ms));
    }
    return out;
}

// Straight reading of the removal characterization: deleting any maximal
// non-member set of positions must leave a connected induced graph.
bool oracle_L_connected(const Graph& G, int n, const std::vector<Mask>& words) {
    std::uint32_t memb = 0;
    for (Mask w : words) memb |= 1u << w;
    Mask whole = full_mask(n);
    for (Mask w = 0;; ++w) {
        bool skip = (memb >> w & 1) != 0;
        if (!skip)
            for (int i = 0; i < n && !skip; ++i)
                if (!mask_contains(w, i) && !(memb >> (w | bit(i)) & 1)) skip = true;
        if (!skip && !oracle_connected(G, whole & ~w)) return false;
        if (w == whole) break;
    }
    return true;
}

bool oracle_k_connected(const Graph& G, int k) {
    if (k <= 0) return true;
    int r = k - 1;
    Mask whole = full_mask(G.n());
    for (Mask rem = 0;; ++rem) {
        if (popcount(rem) == r && !oracle_connected(G, whole & ~rem)) return false;
        if (rem == whole) break;
    }
    return true;
}

// Downwards-closed counterpart: every minimal non-member must induce a
// connected subgraph.
bool oracle_induced_criterion(const Graph& G, int n, const std::vector<Mask>& words) {
    std::uint32_t memb = 0;
    for (Mask w : words) memb |= 1u << w;
    Mask whole = full_mask(n);
    for (Mask w = 0;; ++w) {
        bool skip = (memb >> w & 1) != 0;
        if (!skip)
            for (int i = 0; i < n && !skip; ++i)
                if (mask_contains(w, i) && !(memb >> (w & ~bit(i)) & 1)) skip = true;
        if (!skip && !oracle_connected(G, w)) return false;
        if (w == whole) break;
    }
    return true;
}

// Brute-force oracle for v-goodness of a path over the ambient positions V,
// with a binary alphabet. The search runs over canonical rule tables whose
// input alphabet is the set of assignments to the unpinned positions, with
// the diagonal entries of the pinned positions fixed; every completed input
// tuple must evaluate to a sequence repeating some ambient-consecutive pair.
bool oracle_v_good(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& V,
                   int vpos) {
    int m = static_cast<int>(V.size());
    int words = 1 << m;
    std::vector<char> valid(words, 0);
    bool any = false;
    for (int w = 0; w < words; ++w)
        for (int k = 0; k + 1 < m; ++k)
            if (V[k] + 1 == V[k + 1] && ((w >> k & 1) == (w >> (k + 1) & 1))) {
                valid[w] = 1;
                any = true;
                break;
            }
    if (!any) return false;
    int cells = static_cast<int>(edges.size());
    int nb = 1 << (m - 1);
    std::vector<std::vector<int>> window(m);
    for (int e = 0; e < cells; ++e) {
        window[edges[e].first].push_back(e);
        window[edges[e].second].push_back(e);
    }
    // Flat tables per position; -1 marks an entry the search must fill.
    std::vector<std::vector<int>> table(m);
    std::vector<int> offset(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        int size = 1;
        for (std::size_t k = 0; k < window[i].size(); ++k) size *= nb;
        table[i].assign(size, -1);
        offset[i + 1] = offset[i] + size;
    }
    for (int i = 0; i < m; ++i) {
        if (i == vpos) continue;
        int rank = i < vpos ? i : i - 1;
        for (int t = 0; t < nb; ++t) {
            int idx = 0, radix = 1;
            for (std::size_t k = 0; k < window[i].size(); ++k) {
                idx += t * radix;
                radix *= nb;
            }
            table[i][idx] = t >> rank & 1;
        }
    }
    // Input tuples, the entries each one reads, and how many are still open.
    int tuples = 1;
    for (int e = 0; e < cells; ++e) tuples *= nb;
    std::vector<std::vector<int>> reads(tuples, std::vector<int>(m));
    std::vector<int> open(tuples, 0);
    std::vector<std::vector<int>> watchers(offset[m]);
    for (int t = 0; t < tuples; ++t) {
        std::vector<int> x(cells);
        int rest = t;
        for (int e = 0; e < cells; ++e) {
            x[e] = rest % nb;
            rest /= nb;
        }
        for (int i = 0; i < m; ++i) {
            int idx = 0, radix = 1;
            for (int e : window[i]) {
                idx += x[e] * radix;
                radix *= nb;
            }
            reads[t][i] = offset[i] + idx;
            if (table[i][idx] < 0) {
                ++open[t];
                watchers[offset[i] + idx].push_back(t);
            }
        }
    }
    auto entry_value = [&](int flat) {
        int i = 0;
        while (offset[i + 1] <= flat) ++i;
        return table[i][flat - offset[i]];
    };
    auto tuple_ok = [&](int t) {
        int w = 0;
        for (int i = 0; i < m; ++i) w |= entry_value(reads[t][i]) << i;
        return valid[w] != 0;
    };
    for (int t = 0; t < tuples; ++t)
        if (open[t] == 0 && !tuple_ok(t)) return false;
    std::vector<int> free_entries;
    for (int flat = 0; flat < offset[m]; ++flat)
        if (entry_value(flat) < 0) free_entries.push_back(flat);
    auto set_entry = [&](int flat, int val) {
        int i = 0;
        while (offset[i + 1] <= flat) ++i;
        table[i][flat - offset[i]] = val;
    };
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        if (k == free_entries.size()) return true;
        int flat = free_entries[k];
        for (int val = 0; val < 2; ++val) {
            set_entry(flat, val);
            bool ok = true;
            for (int t : watchers[flat]) {
                if (--open[t] == 0 && !tuple_ok(t)) ok = false;
            }
            if (ok && self(self, k + 1)) return true;
            for (int t : watchers[flat]) ++open[t];
        }
        set_entry(flat, -1);
        return false;
    };
    return rec(rec, 0);
}

// Random instance helpers for the property suites.

Procedure random_procedure(std::mt19937_64& rng, int cells, const std::vector<int>& in_sizes,
                           int out_n, int out_asize) {
    std::vector<std::vector<int>> windows(out_n);
    std::vector<std::vector<Letter>> rules(out_n);
    for (int i = 0; i < out_n; ++i) {
        for (int j = 0; j < cells; ++j)
            if (rng() & 1) windows[i].push_back(j);
        std::size_t size = 1;
        for (int j : windows[i]) size *= static_cast<std::size_t>(in_sizes[j]);
        rules[i].resize(size);
        for (auto& a : rules[i]) a = static_cast<Letter>(rng() % out_asize);
    }
    return Procedure(in_sizes, out_n, out_asize, std::move(windows), std::move(rules));
}

Language random_language(std::mt19937_64& rng, int n, int asize, int max_words) {
    int count = 1 + static_cast<int>(rng() % max_words);
    std::vector<Word> words;
    for (int k = 0; k < count; ++k) {
        Word w(n);
        for (int i = 0; i < n; ++i) w[i] = static_cast<Letter>(rng() % asize);
        words.push_back(std::move(w));
    }
    return Language(n, asize, std::move(words));
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
    int cells = static_cast<int>(rng() % 4);
    std::vector<Mask> sets;
    for (int c = 0; c < cells; ++c) sets.push_back(static_cast<Mask>(rng()) & full_mask(n));
    return SimplicialComplex::from_maximal(n, sets);
}

// Criterion bodies; each returns an empty string on success and a short
// description of the first failure otherwise.

std::string criterion_1() {
    Procedure P = adjacent_ands();
    std::vector<std::vector<int>> wins = {{0, 1}, {1, 2}, {2, 3}};
    for (int i = 0; i < 3; ++i)
        if (input_window(P, i) != wins[i]) return "input window mismatch";
    std::vector<std::vector<int>> duals = {{0}, {0, 1}, {1, 2}, {2}};
    for (int j = 0; j < 4; ++j)
        if (dual_window(P, j) != duals[j]) return "dual window mismatch";
    SimplicialComplex path = SimplicialComplex::from_maximal(
        3, std::vector<Mask>{bit(0) | bit(1), bit(1) | bit(2)});
    if (comm_complex(P) != path) return "communication complex is not the path";
    std::string grid =
        "     0 1 2 3\n"
        "   0 # # . .\n"
        "   1 . # # .\n"
        "   2 . . # #\n";
    if (visibility_matrix_text(P) != grid) return "visibility diagram mismatch";
    return "";
}

std::string criterion_2() {
    for (int n = 3; n <= 4; ++n) {
        std::vector<SimplicialComplex> trees;
        for (const Graph& T : spanning_trees(n)) trees.push_back(graph_as_complex(T));
        std::size_t want = n == 3 ? 3 : 16;
        if (trees.size() != want) return "tree enumeration count off";
        for (const Language& L : {ev(n), od(n)}) {
            auto res = minimal_complexes(L);
            if (!res.complete) return "minimal enumeration incomplete";
            if (!same_complex_set(res.minimal, trees))
                return "minimal complexes differ from the spanning trees at n=" +
                       std::to_string(n);
        }
    }
    return "";
}

std::string criterion_3() {
    struct Case { int n; int asize; };
    for (Case c : {Case{3, 2}, Case{4, 2}, Case{3, 3}}) {
        Language L = nd(c.n, c.asize);
        if (decide_generates(L, boundary_complex(c.n)).verdict != Verdict::does_not_generate)
            return "boundary complex not refuted";
        if (decide_generates(L, full_complex(c.n)).verdict != Verdict::generates)
            return "full complex not confirmed";
    }
    return "";
}

std::string criterion_4() {
    for (int n = 3; n <= 4; ++n)
        for (int asize = 2; asize <= 3; ++asize) {
            Language L = nc(n, asize);
            for (const Graph& T : spanning_trees(n))
                if (!verify_generates(proc_nc_tree(T, asize), L, graph_as_complex(T)))
                    return "tree procedure failed verification";
        }
    for (int n = 3; n <= 4; ++n) {
        Language L = nc(n, 2);
        for (const Graph& G : all_graphs(n)) {
            if (is_connected(G)) continue;
            if (decide_generates(L, graph_as_complex(G)).verdict != Verdict::does_not_generate)
                return "disconnected graph not refuted";
        }
    }
    SimplicialComplex split = SimplicialComplex::from_maximal(
        4, std::vector<Mask>{bit(0) | bit(1) | bit(2), bit(3)});
    if (decide_generates(nc(4, 2), split).verdict != Verdict::does_not_generate)
        return "disconnected complex not refuted";
    return "";
}

std::string criterion_5() {
    for (int n = 1; n <= 4; ++n) {
        auto families = upward_families(n);
        std::size_t want = n == 1 ? 2 : n == 2 ? 5 : n == 3 ? 19 : 167;
        if (families.size() != want) return "upward family count off";
        auto graphs = all_graphs(n);
        for (const auto& fam : families) {
            Language L = masks_language(n, fam);
            for (const Graph& G : graphs) {
                bool want_gen = oracle_L_connected(G, n, fam);
                SimplicialComplex K = graph_as_complex(G);
                auto fast = decide_generates(L, K);
                auto raw = decide_generates(L, K, solver_only_options());
                if (fast.verdict == Verdict::undecided || raw.verdict == Verdict::undecided)
                    return "undecided verdict in the upward sweep";
                if ((fast.verdict == Verdict::generates) != want_gen)
                    return "criterion verdict disagrees with the removal oracle";
                if (raw.verdict != fast.verdict)
                    return "solver verdict disagrees with the criterion";
            }
        }
    }
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            Language L = card_ge(n, k);
            for (const Graph& G : all_graphs(n)) {
                bool got =
                    decide_generates(L, graph_as_complex(G)).verdict == Verdict::generates;
                if (got != oracle_k_connected(G, k)) return "cardinality-ge mismatch";
            }
        }
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= n; ++k) {
            Language L = card_le(n, k);
            std::vector<Mask> ms;
            for (const Word& w : L.words()) ms.push_back(detail::word_to_mask(w));
            for (const Graph& G : all_graphs(n)) {
                bool got =
                    decide_generates(L, graph_as_complex(G)).verdict == Verdict::generates;
                if (got != oracle_induced_criterion(G, n, ms))
                    return "cardinality-le mismatch";
            }
        }
    auto tri = minimal_complexes(card_le(3, 1));
    if (!tri.complete ||
        !same_complex_set(tri.minimal, {complete_graph_complex(3)}))
        return "at-most-one minimal complex is not the triangle graph";
    for (const Graph& G : all_graphs(3)) {
        auto res = minimal_complexes(graph_independent(G));
        if (!res.complete || !same_complex_set(res.minimal, {graph_as_complex(G)}))
            return "independent-set language has the wrong minimal complex";
    }
    return "";
}

std::string criterion_6() {
    for (int n = 3; n <= 4; ++n) {
        std::vector<SimplicialComplex> expect;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                expect.push_back(SimplicialComplex::from_maximal(
                    n, std::vector<Mask>{full_mask(n) & ~bit(a), full_mask(n) & ~bit(b)}));
        for (const Language& L : {one_or_all(n), one_or_all_or_zero(n)}) {
            auto res = minimal_complexes(L);
            if (!res.complete) return "minimal enumeration incomplete";
            if (!same_complex_set(res.minimal, expect))
                return "minimal complexes are not the facet pairs at n=" + std::to_string(n);
        }
    }
    return "";
}

std::string criterion_7() {
    Language U3 = one_hot(3);
    int refuted = 0;
    for (const SimplicialComplex& K : enumerate_complexes(3)) {
        bool got = decide_generates(U3, K).verdict == Verdict::generates;
        bool want = K == full_complex(3);
        if (got != want) return "three-position classification off";
        if (!got) ++refuted;
    }
    if (refuted != 19) return "expected 19 refuted complexes";
    std::vector<SimplicialComplex> cones;
    for (int a = 0; a < 4; ++a) cones.push_back(apex_cone_complex(4, a));
    auto res = minimal_complexes(one_hot(4));
    if (!res.complete || !same_complex_set(res.minimal, cones))
        return "minimal complexes are not the four cones";
    for (int n = 3; n <= 4; ++n) {
        Language L = one_hot(n);
        for (const Graph& G : all_graphs(n)) {
            SimplicialComplex K = graph_as_complex(G);
            bool fires = false;
            for (int a = 0; a < n && !fires; ++a)
                for (int b = a + 1; b < n && !fires; ++b) {
                    bool covered = false;
                    for (int c = 0; c < n && !covered; ++c)
                        if (c != a && c != b && K.contains(bit(a) | bit(b) | bit(c)))
                            covered = true;
                    if (!covered) fires = true;
                }
            if (!fires) return "triangle condition silent on a graph complex";
            auto d = decide_generates(L, K);
            if (d.verdict != Verdict::does_not_generate)
                return "graph complex not refuted for the one-hot language";
            if (G.edges().size() == static_cast<std::size_t>(n * (n - 1) / 2) &&
                (!d.certificate || d.certificate->kind != "one-hot-triangle"))
                return "complete graph refutation has the wrong certificate";
        }
    }
    return "";
}

std::string criterion_8() {
    for (int n = 4; n <= 5; ++n) {
        Language L = eq(n, 2);
        for (const Graph& T : spanning_trees(n))
            if (!verify_generates(proc_eq_binary_tree(T), L, graph_as_complex(T)))
                return "parity tree failed at n=" + std::to_string(n);
    }
    Language L3 = eq(4, 3);
    Graph fig2(4, {{0, 3}, {1, 3}, {0, 2}});
    Graph fig3(4, {{0, 1}, {0, 2}, {1, 3}});
    Graph fig4(4, {{0, 2}, {1, 2}, {1, 3}});
    Graph rev3(4, {{2, 3}, {1, 3}, {0, 2}});
    for (const Graph* G : {&fig2, &fig3, &rev3}) {
        auto d = decide_generates(L3, graph_as_complex(*G), solver_only_options());
        if (d.verdict != Verdict::does_not_generate) return "expected a search refutation";
        if (!d.certificate || d.certificate->kind != "search-exhausted")
            return "refutation did not come from the exhausted search";
    }
    if (!verify_generates(proc_eq_fig4(3), L3, graph_as_complex(fig4)))
        return "crossing-tree procedure failed verification";
    for (const Graph* G : {&fig2, &fig3, &fig4})
        if (find_descendant_rooting(*G)) return "named tree unexpectedly admits a rooting";
    int rooted = 0, generating = 1;
    bool oddball = false;
    for (const Graph& T : spanning_trees(4)) {
        if (T == fig2 || T == fig3 || T == fig4) continue;
        if (auto root = find_descendant_rooting(T)) {
            if (!verify_generates(proc_eq_descendant_tree(T, *root, 3), L3,
                                  graph_as_complex(T)))
                return "descendant procedure failed verification";
            ++rooted;
            ++generating;
        } else {
            if (!(T == rev3)) return "unexpected tree without a rooting";
            oddball = true;
        }
    }
    if (rooted != 12 || !oddball) return "descendant rooting count off";
    if (generating != 13) return "expected 13 generating trees";
    return "";
}

std::string criterion_9() {
    std::vector<int> base{0, 1, 2, 3, 4};
    std::vector<std::vector<int>> vsets;
    for (std::uint32_t s = 1; s < 32; ++s) {
        if (popcount(s) > 3) continue;
        vsets.push_back(mask_to_vertices(s));
    }
    int checked = 0;
    for (const auto& V : vsets) {
        int m = static_cast<int>(V.size());
        std::vector<std::vector<std::pair<int, int>>> paths;
        if (m == 1) paths.push_back({});
        if (m == 2) paths.push_back({{0, 1}});
        if (m == 3)
            for (int mid = 0; mid < 3; ++mid) {
                std::vector<int> rest;
                for (int i = 0; i < 3; ++i)
                    if (i != mid) rest.push_back(i);
                paths.push_back({{rest[0], mid}, {mid, rest[1]}});
            }
        for (const auto& edges : paths) {
            SimplicialComplex T =
                edges.empty()
                    ? SimplicialComplex::from_maximal(1, std::vector<Mask>{bit(0)})
                    : graph_as_complex(Graph(m, edges));
            std::vector<char> good(m, 0);
            for (int k = 0; k < m; ++k) {
                auto lib = is_v_good(T, V, V[k], 2);
                if (lib.verdict == Verdict::undecided) return "undecided v-goodness";
                bool got = lib.verdict == Verdict::generates;
                if (got != oracle_v_good(edges, V, k)) return "oracle disagrees on v-goodness";
                good[k] = got ? 1 : 0;
                ++checked;
            }
            std::vector<int> deg(m, 0);
            for (auto [a, b] : edges) {
                ++deg[a];
                ++deg[b];
            }
            for (auto [a, b] : edges) {
                if (deg[a] == 1 && good[a] && !good[b]) return "leaf lemma violated";
                if (deg[b] == 1 && good[b] && !good[a]) return "leaf lemma violated";
            }
        }
    }
    if (checked != 115) return "instance count off";
    return "";
}

std::string criterion_10() {
    auto complexes = enumerate_complexes(3);
    for (const SimplicialComplex& K : complexes) {
        Language L = realizer(K);
        for (const SimplicialComplex& KP : complexes) {
            bool want = true;
            for (Mask m : K.maximal())
                if (m != 0 && !KP.contains(m)) want = false;
            auto d = decide_generates(L, KP);
            if (d.verdict == Verdict::undecided) return "undecided realizer verdict";
            if ((d.verdict == Verdict::generates) != want)
                return "realizer decision differs from containment";
        }
    }
    return "";
}

std::string criterion_11() {
    auto complexes = enumerate_complexes(3);
    for (std::uint32_t pick = 1; pick < 256; ++pick) {
        if (popcount(pick) > 4) continue;
        std::vector<Mask> ms;
        for (int w = 0; w < 8; ++w)
            if (pick >> w & 1) ms.push_back(static_cast<Mask>(w));
        Language L = masks_language(3, ms);
        for (const SimplicialComplex& K : complexes) {
            auto direct = decide_generates(L, K);
            auto chrom = chromatic_decides(L, K);
            if (direct.verdict == Verdict::undecided) return "undecided direct verdict";
            if (chrom.verdict != direct.verdict) return "chromatic verdict differs";
        }
    }
    SimplicialComplex k3 = complete_graph_complex(3);
    SimplicialComplex gpath = SimplicialComplex::from_maximal(
        3, std::vector<Mask>{bit(0) | bit(1), bit(1) | bit(2)});
    if (decide_generates(card_le(3, 1), k3).verdict != Verdict::generates)
        return "table entry differs: triangle with at-most-one";
    if (decide_generates(one_hot(3), k3).verdict != Verdict::does_not_generate)
        return "table entry differs: triangle with exactly-one";
    if (decide_generates(card_le(3, 1), gpath).verdict != Verdict::does_not_generate)
        return "table entry differs: path with at-most-one";
    if (decide_generates(one_hot(3), gpath).verdict != Verdict::does_not_generate)
        return "table entry differs: path with exactly-one";
    for (int n = 1; n <= 3; ++n)
        for (const SimplicialComplex& K : enumerate_complexes(n)) {
            for (int b = 2; b <= 3; ++b)
                if (is_connected(input_complex(K, b)) == K.contains(full_mask(n)))
                    return "input-complex connectivity dichotomy broken";
            if (!is_connected(input_complex(K, 1))) return "unary input complex disconnected";
        }
    return "";
}

std::string criterion_12() {
    // Pushforward bound on composite communication.
    {
        std::mt19937_64 rng(0xace50101);
        for (int it = 0; it < 1000; ++it) {
            int cg = 1 + static_cast<int>(rng() % 4);
            std::vector<int> sizes(cg);
            for (int& s : sizes) s = 1 + static_cast<int>(rng() % 3);
            int ng = 1 + static_cast<int>(rng() % 4);
            int ag = 1 + static_cast<int>(rng() % 3);
            Procedure g = random_procedure(rng, cg, sizes, ng, ag);
            int nf = 1 + static_cast<int>(rng() % 4);
            int af = 1 + static_cast<int>(rng() % 3);
            Procedure f = random_procedure(rng, ng, std::vector<int>(ng, ag), nf, af);
            if (!comm_complex(compose(f, g)).subset_of(pushforward(f, comm_complex(g))))
                return "composite communication escapes the pushforward";
        }
    }
    // Projections of a generator generate the projected language.
    {
        std::mt19937_64 rng(0xace50202);
        for (int it = 0; it < 1000; ++it) {
            int cells = 1 + static_cast<int>(rng() % 3);
            std::vector<int> sizes(cells);
            for (int& s : sizes) s = 1 + static_cast<int>(rng() % 3);
            int n = 2 + static_cast<int>(rng() % 3);
            Procedure P = random_procedure(rng, cells, sizes, n, 2 + static_cast<int>(rng() % 2));
            Mask S = 1 + static_cast<Mask>(rng() % (full_mask(n) - 1));
            std::vector<std::vector<int>> windows;
            std::vector<std::vector<Letter>> rules;
            for (int i : mask_to_vertices(S)) {
                windows.push_back(P.declared_window(i));
                rules.push_back(P.rule_table(i));
            }
            Procedure proj(P.input_sizes(), popcount(S), P.output_alphabet(),
                           std::move(windows), std::move(rules));
            if (!verify_generates(proj, project(image(P), S),
                                  restrict_to(comm_complex(P), S)))
                return "projected procedure fails on the projected language";
        }
    }
    // Extending a projection generator along the cone construction.
    {
        std::mt19937_64 rng(0xace50303);
        for (int it = 0; it < 1000; ++it) {
            int n = 3 + static_cast<int>(rng() % 2);
            Language L = random_language(rng, n, 2, 6);
            Mask J = 1 + static_cast<Mask>(rng() % (full_mask(n) - 1));
            auto sub = decide_generates(project(L, J), full_complex(popcount(J)));
            if (sub.verdict != Verdict::generates || !sub.witness)
                return "projection not generated on the full complex";
            Procedure Q = proc_join_extend(*sub.witness, L, J);
            if (!image(Q).same_words(L)) return "extended procedure misses the language";
            SimplicialComplex KP = comm_complex(*sub.witness);
            Mask comp = full_mask(n) & ~J;
            std::vector<int> Jv = mask_to_vertices(J);
            std::vector<Mask> em;
            if (KP.is_empty_complex()) {
                em.push_back(comp);
            } else {
                for (Mask c : KP.maximal()) {
                    Mask e = comp;
                    for (std::size_t k = 0; k < Jv.size(); ++k)
                        if (mask_contains(c, static_cast<int>(k))) e |= bit(Jv[k]);
                    em.push_back(e);
                }
            }
            if (!comm_complex(Q).subset_of(SimplicialComplex::from_maximal(n, em)))
                return "extended communication escapes the cone";
        }
    }
    // Verdicts are invariant under relabeling positions.
    {
        std::mt19937_64 rng(0xace50404);
        for (int it = 0; it < 1000; ++it) {
            int n = 2 + static_cast<int>(rng() % 3);
            Language L = random_language(rng, n, 2 + static_cast<int>(rng() % 2), 8);
            SimplicialComplex K = random_complex(rng, n);
            std::vector<int> m(n);
            for (int i = 0; i < n; ++i) m[i] = i;
            std::shuffle(m.begin(), m.end(), rng);
            Permutation g(m);
            auto a = decide_generates(L, K);
            auto b = decide_generates(act(g, L), relabel(K, g));
            if (a.verdict == Verdict::undecided || a.verdict != b.verdict)
                return "verdict changed under relabeling";
        }
    }
    // Monotonicity: adding simplices preserves generation.
    {
        std::mt19937_64 rng(0xace50505);
        for (int it = 0; it < 1000; ++it) {
            int n = 2 + static_cast<int>(rng() % 3);
            Language L = random_language(rng, n, 2, 8);
            SimplicialComplex K = random_complex(rng, n);
            std::vector<Mask> bigger = K.maximal();
            int extra = 1 + static_cast<int>(rng() % 2);
            for (int c = 0; c < extra; ++c)
                bigger.push_back(static_cast<Mask>(rng()) & full_mask(n));
            SimplicialComplex K2 = SimplicialComplex::from_maximal(n, bigger);
            auto small = decide_generates(L, K);
            if (small.verdict != Verdict::generates) continue;
            if (decide_generates(L, K2).verdict != Verdict::generates)
                return "generation lost after adding simplices";
        }
    }
    // Every positive verdict carries a procedure that re-verifies.
    {
        std::mt19937_64 rng(0xace50606);
        int positives = 0;
        for (int it = 0; it < 1000; ++it) {
            int n = 2 + static_cast<int>(rng() % 3);
            Language L = random_language(rng, n, 2 + static_cast<int>(rng() % 2), 8);
            SimplicialComplex K = it % 3 == 0 ? full_complex(n) : random_complex(rng, n);
            auto d = decide_generates(L, K);
            if (d.verdict != Verdict::generates) continue;
            ++positives;
            if (!d.witness || !verify_generates(*d.witness, L, K))
                return "positive verdict without a sound procedure";
        }
        if (positives < 100) return "too few positive cases to be meaningful";
    }
    return "";
}

struct Entry {
    int id;
    const char* label;
    std::string (*run)();
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Entry> entries = {
        {1, "worked-example windows", criterion_1},
        {2, "parity minimal complexes", criterion_2},
        {3, "non-decreasing needs full communication", criterion_3},
        {4, "non-constant trees", criterion_4},
        {5, "upwards and downwards criteria", criterion_5},
        {6, "one-or-all facet pairs", criterion_6},
        {7, "one-hot cones and triangles", criterion_7},
        {8, "adjacent-equality trees", criterion_8},
        {9, "v-goodness oracle", criterion_9},
        {10, "realizer containment", criterion_10},
        {11, "chromatic equivalence", criterion_11},
        {12, "structural property suites", criterion_12},
    };
    std::set<int> wanted;
    for (int a = 1; a < argc; ++a) wanted.insert(std::atoi(argv[a]));
    bool all_pass = true;
    for (const Entry& e : entries) {
        if (!wanted.empty() && !wanted.count(e.id)) continue;
        auto start = std::chrono::steady_clock::now();
        std::string note;
        try {
            note = e.run();
        } catch (const std::exception& ex) {
            note = std::string("exception: ") + ex.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (note.empty()) {
            std::printf("criterion %d: pass - %s (%.1fs)\n", e.id, e.label, secs);
        } else {
            std::printf("criterion %d: fail - %s: %s (%.1fs)\n", e.id, e.label, note.c_str(),
                        secs);
            all_pass = false;
        }
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
