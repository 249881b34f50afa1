#pragma once

#include <map>

#include "csp.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "generators.hpp"
#include "graph.hpp"

namespace locogen {

enum class Verdict { generates, does_not_generate, undecided };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::generates: return "generates";
        case Verdict::does_not_generate: return "does-not-generate";
        default: return "undecided";
    }
}

// Refutation evidence. `kind` is a stable identifier; the masks point at the
// output positions that witness the failure, when that is meaningful.
struct Certificate {
    std::string kind;
    Mask positions = 0;
    std::string detail;
};

struct DecideOptions {
    bool fast_paths = true;   // structural shortcuts with constructed witnesses
    bool refuters = true;     // necessary-condition refutations
    bool use_solver = true;   // fall back to the constraint search
    double timeout_seconds = 0;
    std::uint64_t node_limit = 0;
    std::uint64_t probe_threshold = 0;  // greedy-probe gate, see CspOptions
    int projection_size = 3;  // largest projection the refuter examines
    std::vector<Procedure> hints;
};

// Options that force every query through the constraint solver.
inline DecideOptions solver_only_options() {
    DecideOptions o;
    o.fast_paths = false;
    o.refuters = false;
    return o;
}

struct DecisionResult {
    Verdict verdict = Verdict::undecided;
    std::string method;
    std::optional<Procedure> witness;
    std::optional<Certificate> certificate;
    CspStats solver_stats;
};

namespace detail {

inline DecisionResult generated(std::string method, Procedure witness) {
    DecisionResult r;
    r.verdict = Verdict::generates;
    r.method = std::move(method);
    r.witness = std::move(witness);
    return r;
}

inline DecisionResult refuted(std::string method, Certificate cert) {
    DecisionResult r;
    r.verdict = Verdict::does_not_generate;
    r.method = std::move(method);
    r.certificate = std::move(cert);
    return r;
}

inline DecisionResult unresolved(std::string reason) {
    DecisionResult r;
    r.verdict = Verdict::undecided;
    r.method = std::move(reason);
    return r;
}

// Bitwise complement of a binary language.
inline Language flip_binary(const Language& L) {
    require(L.alphabet_size() == 2, "complementation needs a binary language");
    std::vector<Word> out;
    for (const Word& w : L.words()) {
        Word f(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) f[i] = 1 - w[i];
        out.push_back(std::move(f));
    }
    return Language(L.n(), 2, std::move(out));
}

// Interleaves procedures for the blocks of a partition of the output
// positions into one procedure on the whole set.
inline Procedure disjoint_union_procedure(int n, int asize,
                                          const std::vector<std::pair<Mask, Procedure>>& parts) {
    std::vector<int> in_sizes;
    std::vector<std::vector<int>> windows(n);
    std::vector<std::vector<Letter>> rules(n);
    for (const auto& [mask, P] : parts) {
        int base = static_cast<int>(in_sizes.size());
        for (int b : P.input_sizes()) in_sizes.push_back(b);
        auto verts = mask_to_vertices(mask);
        for (std::size_t k = 0; k < verts.size(); ++k) {
            for (int c : P.declared_window(static_cast<int>(k)))
                windows[verts[k]].push_back(base + c);
            rules[verts[k]] = P.rule_table(static_cast<int>(k));
        }
    }
    return Procedure(std::move(in_sizes), n, asize, std::move(windows), std::move(rules));
}

inline DecisionResult checked_positive(std::string method, const Procedure& P, const Language& L,
                                       const SimplicialComplex& K) {
    if (!verify_generates(P, L, K))
        throw std::logic_error("internal error: constructed witness failed verification (" +
                               method + ")");
    return generated(std::move(method), P);
}

}  // namespace detail

inline DecisionResult decide_generates(const Language& L, const SimplicialComplex& K,
                                       const DecideOptions& opts = {});

namespace detail {

inline DecideOptions child_options(const DecideOptions& opts) {
    DecideOptions c = opts;
    c.hints.clear();
    return c;
}

// Runs the structural shortcuts; returns a result when one applies.
inline std::optional<DecisionResult> fast_path(const Language& L, const SimplicialComplex& K,
                                               const DecideOptions& opts) {
    if (L.alphabet_size() == 2) {
        Graph G = skeleton_graph(K);
        if (is_upwards_closed(L)) {
            if (auto W = L_connectivity_violation(G, L))
                return refuted("upwards-criterion",
                               Certificate{"upwards-connectivity", *W,
                                           "removing the maximal non-member " +
                                               mask_to_string(*W) +
                                               " disconnects the skeleton"});
            return checked_positive("upwards-criterion", proc_upclosed_edges(G, L), L, K);
        }
        if (is_downwards_closed(L)) {
            if (auto W = downwards_criterion_violation(G, L))
                return refuted("downwards-criterion",
                               Certificate{"downwards-connectivity", *W,
                                           "the minimal non-member " + mask_to_string(*W) +
                                               " induces a disconnected subgraph"});
            Procedure inner = proc_upclosed_edges(G, flip_binary(L));
            return checked_positive("downwards-criterion", proc_complement(inner), L, K);
        }
    }
    // Factor the language across independent blocks and decide each block on
    // the restricted complex; the answers combine exactly.
    auto blocks = irreducible_factorization(L);
    if (blocks.size() > 1) {
        std::vector<std::pair<Mask, Procedure>> parts;
        for (Mask b : blocks) {
            DecisionResult sub =
                decide_generates(project(L, b), restrict_to(K, b), child_options(opts));
            if (sub.verdict == Verdict::does_not_generate) {
                std::string inner = sub.certificate ? sub.certificate->kind : sub.method;
                return refuted("factorization",
                               Certificate{"factor", b,
                                           "the factor on " + mask_to_string(b) +
                                               " is not generated (" + inner + ")"});
            }
            if (sub.verdict == Verdict::undecided)
                return unresolved("factor on " + mask_to_string(b) + " undecided: " +
                                  sub.method);
            parts.emplace_back(b, *sub.witness);
        }
        Procedure joint =
            disjoint_union_procedure(L.n(), L.alphabet_size(), parts);
        return checked_positive("factorization", joint, L, K);
    }
    return std::nullopt;
}

// Necessary-condition refuters for an irreducible language.
inline std::optional<DecisionResult> refute(const Language& L, const SimplicialComplex& K,
                                            const DecideOptions& opts) {
    int n = L.n();
    // A disconnected complex only generates products across each split.
    if (!is_connected(K)) {
        for (Mask S : disconnection_splits(K)) {
            Mask T = full_mask(n) & ~S;
            std::uint64_t prod = static_cast<std::uint64_t>(project(L, S).size()) *
                                 static_cast<std::uint64_t>(project(L, T).size());
            if (prod != static_cast<std::uint64_t>(L.size()))
                return refuted("disconnection",
                               Certificate{"disconnected-not-product", S,
                                           "the split " + mask_to_string(S) + " | " +
                                               mask_to_string(T) +
                                               " separates the complex but not the language"});
        }
    }
    // Dependent pairs need an edge.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!K.contains(bit(i) | bit(j)) && !independent_pair(L, i, j))
                return refuted("pair-dependence",
                               Certificate{"dependent-pair-uncovered", bit(i) | bit(j),
                                           "positions " + std::to_string(i) + " and " +
                                               std::to_string(j) +
                                               " are dependent but share no simplex"});
    // The one-hot language needs a triangle through every pair.
    if (n >= 3 && L.same_words(one_hot(n))) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                bool found = false;
                for (int c = 0; c < n && !found; ++c)
                    if (c != a && c != b && K.contains(bit(a) | bit(b) | bit(c))) found = true;
                if (!found)
                    return refuted("one-hot-triangle",
                                   Certificate{"one-hot-triangle", bit(a) | bit(b),
                                               "no face joins positions " + std::to_string(a) +
                                                   ", " + std::to_string(b) +
                                                   " with a third position"});
            }
    }
    // Projections to small proper subsets must stay generable.
    for (int s = 2; s <= std::min(opts.projection_size, n - 1); ++s) {
        for (Mask J = 0; J <= full_mask(n); ++J) {
            if (popcount(J) != s) continue;
            DecisionResult sub =
                decide_generates(project(L, J), restrict_to(K, J), child_options(opts));
            if (sub.verdict == Verdict::does_not_generate)
                return refuted("projection",
                               Certificate{"projection", J,
                                           "the projection to " + mask_to_string(J) +
                                               " is not generated"});
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Decides whether the complex K can generate the finite language L, with a
// verified witness procedure on success and a refutation certificate on
// failure. Undecided results only arise from resource limits.
inline DecisionResult decide_generates(const Language& L, const SimplicialComplex& K,
                                       const DecideOptions& opts) {
    require(K.n() == L.n(), "complex and language arity differ");
    for (const Procedure& h : opts.hints) {
        if (h.output_n() != L.n()) continue;
        try {
            if (verify_generates(h, L, K)) return detail::generated("hint", h);
        } catch (const std::invalid_argument&) {
            // a hint too large to check is simply ignored
        }
    }
    if (L.size() == 1)
        return detail::checked_positive("constant",
                                        proc_constant(L.word(0), L.alphabet_size()), L, K);
    if (opts.fast_paths || opts.refuters) {
        for (int i = 0; i < L.n(); ++i)
            if (L.letters_at(i).size() >= 2 && !K.contains(bit(i)))
                return detail::refuted(
                    "uncovered-position",
                    Certificate{"uncovered-position", bit(i),
                                "position " + std::to_string(i) +
                                    " varies but is not a vertex of the complex"});
    }
    if (opts.fast_paths) {
        if (auto r = detail::fast_path(L, K, opts)) return *r;
    }
    if (opts.refuters) {
        if (auto r = detail::refute(L, K, opts)) return *r;
    }
    if (!opts.use_solver) return detail::unresolved("solver disabled");
    CspOptions copts;
    copts.timeout_seconds = opts.timeout_seconds;
    copts.node_limit = opts.node_limit;
    copts.probe_threshold = opts.probe_threshold;
    std::optional<CanonicalCsp> csp;
    try {
        csp.emplace(build_canonical_csp(L, K));
    } catch (const std::invalid_argument& e) {
        return detail::unresolved(std::string("instance too large: ") + e.what());
    }
    CspResult res = csp->solve(copts);
    DecisionResult out;
    out.solver_stats = res.stats;
    if (res.status == CspStatus::satisfiable) {
        if (!verify_generates(*res.witness, L, K))
            throw std::logic_error("internal error: solver witness failed verification");
        out.verdict = Verdict::generates;
        out.method = "search";
        out.witness = res.witness;
    } else if (res.status == CspStatus::unsatisfiable) {
        out.verdict = Verdict::does_not_generate;
        out.method = "search";
        out.certificate = Certificate{"search-exhausted", 0, res.note};
    } else {
        out.verdict = Verdict::undecided;
        out.method = "search: " + res.note;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generalized decision: base words over a pinned subset of the positions.

// Decides whether K can generate a function whose image stays inside U and
// which, on the constant tuple of each base word d, reproduces d on the
// pinned positions W. Base words are indexed by the positions of W ascending.
inline DecisionResult decide_generalized(const Language& U, const std::vector<Word>& base,
                                         Mask W, const SimplicialComplex& K,
                                         const DecideOptions& opts = {}) {
    require(K.n() == U.n(), "complex and language arity differ");
    require((W & ~full_mask(U.n())) == 0, "pinned set out of range");
    int wsize = popcount(W);
    for (const Word& d : base) {
        require(static_cast<int>(d.size()) == wsize, "base word arity mismatch");
        for (Letter a : d) require(a >= 0 && a < U.alphabet_size(), "base letter out of range");
    }
    if (base.empty())
        return detail::generated("constant", proc_constant(U.word(0), U.alphabet_size()));
    auto pins = mask_to_vertices(W);
    for (const Word& d : base) {
        bool extendable = false;
        for (const Word& u : U.words()) {
            bool match = true;
            for (int k = 0; k < wsize && match; ++k) match = u[pins[k]] == d[k];
            if (match) {
                extendable = true;
                break;
            }
        }
        if (!extendable)
            return detail::refuted("base-extension",
                                   Certificate{"base-word-not-extendable", W,
                                               "the base word " + word_to_string(d) +
                                                   " extends to no member of the language"});
    }
    CspOptions copts;
    copts.timeout_seconds = opts.timeout_seconds;
    copts.node_limit = opts.node_limit;
    copts.probe_threshold = opts.probe_threshold;
    std::optional<CanonicalCsp> csp;
    try {
        csp.emplace(U, base, W, K);
    } catch (const std::invalid_argument& e) {
        return detail::unresolved(std::string("instance too large: ") + e.what());
    }
    CspResult res = csp->solve(copts);
    DecisionResult out;
    out.solver_stats = res.stats;
    if (res.status == CspStatus::satisfiable) {
        const Procedure& P = *res.witness;
        // Verify directly: communication fits, image stays inside U, and the
        // diagonal tuples reproduce their base words on the pinned positions.
        bool ok = comm_complex(P).subset_of(K);
        if (ok) {
            Language img = image(P);
            for (const Word& w : img.words())
                if (!U.contains(w)) {
                    ok = false;
                    break;
                }
        }
        for (std::size_t d = 0; ok && d < base.size(); ++d) {
            std::vector<Letter> x(P.num_inputs(), static_cast<Letter>(d));
            Word w = P.eval(x);
            for (int k = 0; k < wsize; ++k)
                if (w[pins[k]] != base[d][k]) {
                    ok = false;
                    break;
                }
        }
        if (!ok) throw std::logic_error("internal error: generalized witness failed verification");
        out.verdict = Verdict::generates;
        out.method = "search";
        out.witness = res.witness;
    } else if (res.status == CspStatus::unsatisfiable) {
        out.verdict = Verdict::does_not_generate;
        out.method = "search";
        out.certificate = Certificate{"search-exhausted", 0, res.note};
    } else {
        out.verdict = Verdict::undecided;
        out.method = "search: " + res.note;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Valid sequences and v-goodness.

// The language of valid sequences over the ambient positions V: words that
// repeat a letter on at least one ambient-consecutive pair. Empty (nullopt)
// when V has no consecutive pair.
inline std::optional<Language> valid_sequence_language(const std::vector<int>& V, int asize) {
    int m = static_cast<int>(V.size());
    require(m >= 1, "need at least one position");
    for (int k = 0; k + 1 < m; ++k) require(V[k] < V[k + 1], "positions must increase");
    std::vector<int> pairs;
    for (int k = 0; k + 1 < m; ++k)
        if (V[k] + 1 == V[k + 1]) pairs.push_back(k);
    if (pairs.empty()) return std::nullopt;
    checked_pow(asize, m, std::uint64_t{1} << 20);
    std::vector<Word> words;
    for (const Word& w : detail::all_words(m, asize)) {
        for (int k : pairs)
            if (w[k] == w[k + 1]) {
                words.push_back(w);
                break;
            }
    }
    return Language(m, asize, std::move(words));
}

// Whether the complex T over the positions V can pick out a valid sequence
// while every cell except v is pinned to an arbitrary base assignment.
inline DecisionResult is_v_good(const SimplicialComplex& T, const std::vector<int>& V, int v,
                                int asize, const DecideOptions& opts = {}) {
    int m = static_cast<int>(V.size());
    require(T.n() == m, "complex must live on the positions of V");
    int vpos = -1;
    for (int k = 0; k < m; ++k)
        if (V[k] == v) vpos = k;
    require(vpos >= 0, "v must be one of the positions");
    auto U = valid_sequence_language(V, asize);
    if (!U)
        return detail::refuted("no-adjacent-pair",
                               Certificate{"no-adjacent-pair", 0,
                                           "the position set has no consecutive pair, so no "
                                           "valid sequence exists"});
    Mask W = full_mask(m) & ~bit(vpos);
    return decide_generalized(*U, detail::all_words(m - 1, asize), W, T, opts);
}

// ---------------------------------------------------------------------------
// Minimal generating complexes.

struct MinimalComplexesResult {
    std::vector<SimplicialComplex> minimal;  // every minimal generating complex
    bool complete = true;                    // false when some verdict hit a limit
    int solver_decisions = 0;                // full decisions not served by shortcuts
};

// Enumerates the minimal complexes generating L, deciding one representative
// per symmetry orbit and reusing monotonicity: a complex above a generator
// generates, one below a refuted complex does not.
inline MinimalComplexesResult minimal_complexes(const Language& L, const DecideOptions& opts = {},
                                                bool use_symmetry = true) {
    int n = L.n();
    require(n <= 5, "enumeration supports at most five positions");
    auto all = enumerate_complexes(n);
    std::vector<Permutation> group;
    if (use_symmetry)
        group = automorphisms(L);
    else
        group = {Permutation::identity(n)};
    std::map<std::vector<Mask>, Verdict> memo;
    std::vector<Verdict> verdict(all.size(), Verdict::undecided);
    std::vector<std::size_t> known_true, known_false;
    MinimalComplexesResult out;
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        const SimplicialComplex& K = all[idx];
        auto key = canonical_form(K, group).maximal();
        auto it = memo.find(key);
        Verdict v;
        bool have = false;
        if (it != memo.end()) {
            v = it->second;
            have = true;
        }
        if (!have)
            for (std::size_t t : known_true)
                if (all[t].subset_of(K)) {
                    v = Verdict::generates;
                    have = true;
                    break;
                }
        if (!have)
            for (std::size_t f : known_false)
                if (K.subset_of(all[f])) {
                    v = Verdict::does_not_generate;
                    have = true;
                    break;
                }
        if (!have) {
            v = decide_generates(L, K, opts).verdict;
            ++out.solver_decisions;
        }
        memo[key] = v;
        verdict[idx] = v;
        if (v == Verdict::generates)
            known_true.push_back(idx);
        else if (v == Verdict::does_not_generate)
            known_false.push_back(idx);
        else
            out.complete = false;
    }
    for (std::size_t idx = 0; idx < all.size(); ++idx) {
        if (verdict[idx] != Verdict::generates) continue;
        bool minimal = true;
        for (std::size_t j : known_true)
            if (j != idx && all[j].proper_subset_of(all[idx])) {
                minimal = false;
                break;
            }
        if (minimal) out.minimal.push_back(all[idx]);
    }
    return out;
}

}  // namespace locogen
