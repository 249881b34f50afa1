#pragma once

#include <optional>

#include "permutation.hpp"

namespace locogen {

// A finite non-empty language over positions {0,...,n-1} and alphabet
// {0,...,alphabet_size-1}. Words are kept sorted and deduplicated, so equal
// languages compare equal structurally.
class Language {
  public:
    Language(int n, int alphabet_size, std::vector<Word> words,
             std::vector<std::string> letter_names = {})
        : n_(n), asize_(alphabet_size), words_(std::move(words)), names_(std::move(letter_names)) {
        require(n_ >= 1, "language needs at least one position");
        require(asize_ >= 1, "language needs at least one letter");
        require(!words_.empty(), "language must be non-empty");
        for (const Word& w : words_) {
            require(static_cast<int>(w.size()) == n_, "word length differs from n");
            for (Letter a : w) require(a >= 0 && a < asize_, "letter out of range");
        }
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
        if (!names_.empty())
            require(static_cast<int>(names_.size()) == asize_, "one name per letter required");
    }

    int n() const { return n_; }
    int alphabet_size() const { return asize_; }
    int size() const { return static_cast<int>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }
    const Word& word(int k) const { return words_[k]; }
    const std::vector<std::string>& letter_names() const { return names_; }

    bool contains(const Word& w) const {
        return std::binary_search(words_.begin(), words_.end(), w);
    }

    // Index of w in the sorted word list, or -1.
    int index_of(const Word& w) const {
        auto it = std::lower_bound(words_.begin(), words_.end(), w);
        if (it == words_.end() || *it != w) return -1;
        return static_cast<int>(it - words_.begin());
    }

    // Distinct letters occurring at position i, ascending.
    std::vector<Letter> letters_at(int i) const {
        std::vector<Letter> out;
        for (const Word& w : words_) out.push_back(w[i]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    bool operator==(const Language& o) const {
        return n_ == o.n_ && asize_ == o.asize_ && words_ == o.words_;
    }
    bool operator!=(const Language& o) const { return !(*this == o); }

    // Same word set, ignoring alphabet padding and names.
    bool same_words(const Language& o) const { return n_ == o.n_ && words_ == o.words_; }

  private:
    int n_;
    int asize_;
    std::vector<Word> words_;
    std::vector<std::string> names_;
};

inline Language make_language(int n, int alphabet_size, std::vector<Word> words,
                              std::vector<std::string> letter_names = {}) {
    return Language(n, alphabet_size, std::move(words), std::move(letter_names));
}

// Restriction of every word to the positions in J (ascending), deduplicated.
// The caller keeps the position list as the record of original indices.
inline Language project(const Language& L, const std::vector<int>& positions) {
    require(!positions.empty(), "projection needs at least one position");
    std::vector<int> J = positions;
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    for (int j : J) require(j >= 0 && j < L.n(), "projection position out of range");
    std::vector<Word> out;
    out.reserve(L.size());
    for (const Word& w : L.words()) {
        Word r(J.size());
        for (std::size_t k = 0; k < J.size(); ++k) r[k] = w[J[k]];
        out.push_back(std::move(r));
    }
    return Language(static_cast<int>(J.size()), L.alphabet_size(), std::move(out),
                    L.letter_names());
}

inline Language project(const Language& L, Mask positions) {
    return project(L, mask_to_vertices(positions));
}

// Left action on languages: g.L = {g.w : w in L}.
inline Language act(const Permutation& g, const Language& L) {
    require(g.n() == L.n(), "permutation degree differs from language arity");
    std::vector<Word> out;
    out.reserve(L.size());
    for (const Word& w : L.words()) out.push_back(g.act(w));
    return Language(L.n(), L.alphabet_size(), std::move(out), L.letter_names());
}

// All position permutations g with g.L = L, by brute force over S_n.
inline std::vector<Permutation> automorphisms(const Language& L) {
    std::vector<Permutation> out;
    for (const Permutation& g : symmetric_group(L.n()))
        if (act(g, L) == L) out.push_back(g);
    return out;
}

namespace detail {
inline Mask word_to_mask(const Word& w) {
    Mask m = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) m |= bit(static_cast<int>(i));
    return m;
}

inline Word mask_to_word(Mask m, int n) {
    Word w(n, 0);
    for (int i = 0; i < n; ++i)
        if (mask_contains(m, i)) w[i] = 1;
    return w;
}

inline std::vector<Mask> binary_word_masks(const Language& L) {
    require(L.alphabet_size() == 2, "operation requires a binary alphabet");
    std::vector<Mask> masks;
    masks.reserve(L.size());
    for (const Word& w : L.words()) masks.push_back(word_to_mask(w));
    std::sort(masks.begin(), masks.end());
    return masks;
}
}  // namespace detail

inline bool is_upwards_closed(const Language& L) {
    auto masks = detail::binary_word_masks(L);
    for (Mask m : masks)
        for (int i = 0; i < L.n(); ++i)
            if (!mask_contains(m, i) && !std::binary_search(masks.begin(), masks.end(), m | bit(i)))
                return false;
    return true;
}

inline bool is_downwards_closed(const Language& L) {
    auto masks = detail::binary_word_masks(L);
    for (Mask m : masks)
        for (int i = 0; i < L.n(); ++i)
            if (mask_contains(m, i) && !std::binary_search(masks.begin(), masks.end(), m & ~bit(i)))
                return false;
    return true;
}

// Positions i and j are independent when the pair projection is a product.
inline bool independent_pair(const Language& L, int i, int j) {
    require(i != j && i >= 0 && j >= 0 && i < L.n() && j < L.n(), "bad position pair");
    Language pij = project(L, std::vector<int>{std::min(i, j), std::max(i, j)});
    auto pi = L.letters_at(i), pj = L.letters_at(j);
    return pij.size() == static_cast<int>(pi.size() * pj.size());
}

namespace detail {
// L splits over S exactly when the word count matches the product of the two
// projection counts; finiteness then forces L = proj_S(L) x proj_Sc(L).
inline bool splits_over(const Language& L, Mask S, Mask whole) {
    Mask Sc = whole & ~S;
    long long a = project(L, S).size();
    long long b = project(L, Sc).size();
    long long c = whole == full_mask(L.n()) ? L.size() : project(L, whole).size();
    return a * b == c;
}

inline void factor_blocks(const Language& L, Mask cur, std::vector<Mask>& out) {
    int lo = lowest_bit(cur);
    Mask rest = cur & ~bit(lo);
    // Enumerate proper submasks containing the lowest vertex, ascending.
    for (Mask sub = rest; sub; sub = (sub - 1) & rest) {
        Mask S = cur & ~sub;  // contains lo, proper since sub is non-empty
        if (splits_over(L, S, cur)) {
            factor_blocks(L, S, out);
            factor_blocks(L, cur & ~S, out);
            return;
        }
    }
    out.push_back(cur);
}
}  // namespace detail

// Finest partition of the positions such that L is the product of its
// projections to the blocks. Blocks are reported in vertex-lex order; a
// single block means L is irreducible.
inline std::vector<Mask> irreducible_factorization(const Language& L) {
    std::vector<Mask> out;
    detail::factor_blocks(L, full_mask(L.n()), out);
    std::sort(out.begin(), out.end(), vertex_lex_less);
    return out;
}

inline bool is_irreducible(const Language& L) {
    return irreducible_factorization(L).size() == 1;
}

}  // namespace locogen
