#pragma once

#include "complex.hpp"
#include "graph.hpp"
#include "language.hpp"

namespace locogen {

namespace detail {
inline std::vector<Word> all_words(int n, int asize) {
    std::vector<Word> out;
    Word w(n, 0);
    while (true) {
        out.push_back(w);
        int k = n - 1;
        while (k >= 0 && w[k] == asize - 1) w[k--] = 0;
        if (k < 0) break;
        ++w[k];
    }
    return out;
}

inline std::vector<std::string> digit_names(int asize) {
    std::vector<std::string> names;
    for (int a = 0; a < asize; ++a) names.push_back(std::to_string(a));
    return names;
}
}  // namespace detail

inline Language full_language(int n, int asize) {
    return Language(n, asize, detail::all_words(n, asize), detail::digit_names(asize));
}

// Binary words with an even number of ones.
inline Language ev(int n) {
    std::vector<Word> words;
    for (Mask m = 0; m <= full_mask(n); ++m) {
        if (popcount(m) % 2 == 0) words.push_back(detail::mask_to_word(m, n));
        if (m == full_mask(n)) break;
    }
    return Language(n, 2, std::move(words), detail::digit_names(2));
}

// Binary words with an odd number of ones.
inline Language od(int n) {
    std::vector<Word> words;
    for (Mask m = 0; m <= full_mask(n); ++m) {
        if (popcount(m) % 2 == 1) words.push_back(detail::mask_to_word(m, n));
        if (m == full_mask(n)) break;
    }
    return Language(n, 2, std::move(words), detail::digit_names(2));
}

// Non-decreasing words over the ordered alphabet {0,...,asize-1}.
inline Language nd(int n, int asize = 2) {
    std::vector<Word> words;
    for (const Word& w : detail::all_words(n, asize))
        if (std::is_sorted(w.begin(), w.end())) words.push_back(w);
    return Language(n, asize, std::move(words), detail::digit_names(asize));
}

// Non-constant words; requires at least two letters.
inline Language nc(int n, int asize = 2) {
    require(n >= 2 && asize >= 2, "non-constant words need n >= 2 and two letters");
    std::vector<Word> words;
    for (const Word& w : detail::all_words(n, asize))
        if (!std::all_of(w.begin(), w.end(), [&](Letter a) { return a == w[0]; }))
            words.push_back(w);
    return Language(n, asize, std::move(words), detail::digit_names(asize));
}

inline Language constants(int n, int asize) {
    std::vector<Word> words;
    for (Letter a = 0; a < asize; ++a) words.emplace_back(n, a);
    return Language(n, asize, std::move(words), detail::digit_names(asize));
}

inline Language card_ge(int n, int k) {
    std::vector<Word> words;
    for (Mask m = 0; m <= full_mask(n); ++m) {
        if (popcount(m) >= k) words.push_back(detail::mask_to_word(m, n));
        if (m == full_mask(n)) break;
    }
    require(!words.empty(), "no word meets the cardinality bound");
    return Language(n, 2, std::move(words), detail::digit_names(2));
}

inline Language card_le(int n, int k) {
    std::vector<Word> words;
    for (Mask m = 0; m <= full_mask(n); ++m) {
        if (popcount(m) <= k) words.push_back(detail::mask_to_word(m, n));
        if (m == full_mask(n)) break;
    }
    return Language(n, 2, std::move(words), detail::digit_names(2));
}

// One-hot words: exactly one 1.
inline Language one_hot(int n) {
    std::vector<Word> words;
    for (int i = 0; i < n; ++i) words.push_back(detail::mask_to_word(bit(i), n));
    return Language(n, 2, std::move(words), detail::digit_names(2));
}

// Words with exactly one 1, or all ones.
inline Language one_or_all(int n) {
    std::vector<Word> words;
    for (int i = 0; i < n; ++i) words.push_back(detail::mask_to_word(bit(i), n));
    words.push_back(Word(n, 1));
    return Language(n, 2, std::move(words), detail::digit_names(2));
}

inline Language one_or_all_or_zero(int n) {
    std::vector<Word> words;
    for (int i = 0; i < n; ++i) words.push_back(detail::mask_to_word(bit(i), n));
    words.push_back(Word(n, 1));
    words.push_back(Word(n, 0));
    return Language(n, 2, std::move(words), detail::digit_names(2));
}

// Words with an equal adjacent pair: some i with w_i = w_{i+1}.
inline Language eq(int n, int asize = 2) {
    require(n >= 2, "adjacent-equality words need n >= 2");
    std::vector<Word> words;
    for (const Word& w : detail::all_words(n, asize)) {
        for (int i = 0; i + 1 < n; ++i)
            if (w[i] == w[i + 1]) {
                words.push_back(w);
                break;
            }
    }
    return Language(n, asize, std::move(words), detail::digit_names(asize));
}

// Characteristic words of independent sets of G.
inline Language graph_independent(const Graph& G) {
    std::vector<Word> words;
    for (Mask m = 0; m <= full_mask(G.n()); ++m) {
        bool ok = true;
        for (auto [a, b] : G.edges())
            if (mask_contains(m, a) && mask_contains(m, b)) {
                ok = false;
                break;
            }
        if (ok) words.push_back(detail::mask_to_word(m, G.n()));
        if (m == full_mask(G.n())) break;
    }
    return Language(G.n(), 2, std::move(words), detail::digit_names(2));
}

// The realizer of a complex K: one word per function h from the non-empty
// simplices of K to {0,1}. Position i carries h restricted to the simplices
// containing i, encoded as the bits of h at those simplices; positions in no
// simplex always read 0. The complexes generating this language are exactly
// the complexes containing K.
inline Language realizer(const SimplicialComplex& K) {
    std::vector<Mask> simplices;
    for (Mask s : K.all_simplices())
        if (s != 0) simplices.push_back(s);
    int m = static_cast<int>(simplices.size());
    require(m <= 20, "realizer supports at most 20 non-empty simplices");
    // visible[i] = bitmask over simplex indices of the simplices containing i.
    std::vector<std::uint32_t> visible(K.n(), 0);
    for (int s = 0; s < m; ++s)
        for (int v : mask_to_vertices(simplices[s])) visible[v] |= bit(s);
    std::vector<Word> words;
    std::uint32_t hmax = full_mask(m);
    for (std::uint32_t h = 0;; ++h) {
        Word w(K.n());
        for (int i = 0; i < K.n(); ++i) w[i] = static_cast<Letter>(h & visible[i]);
        words.push_back(std::move(w));
        if (h == hmax) break;
    }
    int asize = static_cast<int>(std::uint64_t{1} << m);
    return Language(K.n(), asize, std::move(words));
}

}  // namespace locogen
