#pragma once

#include "complex.hpp"
#include "language.hpp"

namespace locogen {

// A local procedure f: B_0 x ... x B_{m-1} -> A^n. Each output cell i reads a
// declared window of input cells and owns a dense rule table over the window
// tuples, indexed mixed-radix with the first window cell as the least
// significant digit. Declared windows may be larger than the true input
// windows; input_window computes the essential cells.
class Procedure {
  public:
    Procedure(std::vector<int> input_sizes, int output_n, int output_alphabet,
              std::vector<std::vector<int>> windows, std::vector<std::vector<Letter>> rules)
        : in_sizes_(std::move(input_sizes)),
          out_n_(output_n),
          out_asize_(output_alphabet),
          win_(std::move(windows)),
          rules_(std::move(rules)) {
        require(out_n_ >= 1, "procedure needs at least one output cell");
        require(out_asize_ >= 1, "procedure needs at least one output letter");
        for (int b : in_sizes_) require(b >= 1, "input alphabets need at least one letter");
        require(static_cast<int>(win_.size()) == out_n_, "one window per output cell");
        require(static_cast<int>(rules_.size()) == out_n_, "one rule table per output cell");
        for (int i = 0; i < out_n_; ++i) {
            std::uint64_t size = 1;
            int prev = -1;
            for (int j : win_[i]) {
                require(j >= 0 && j < num_inputs(), "window cell out of range");
                require(j > prev, "window cells must be strictly increasing");
                prev = j;
                size *= static_cast<std::uint64_t>(in_sizes_[j]);
                require(size <= (std::uint64_t{1} << 26), "rule table too large");
            }
            require(rules_[i].size() == size, "rule table size must match the window");
            for (Letter a : rules_[i])
                require(a >= 0 && a < out_asize_, "rule table letter out of range");
        }
    }

    int num_inputs() const { return static_cast<int>(in_sizes_.size()); }
    int output_n() const { return out_n_; }
    int output_alphabet() const { return out_asize_; }
    const std::vector<int>& input_sizes() const { return in_sizes_; }
    const std::vector<int>& declared_window(int i) const { return win_[i]; }
    const std::vector<Letter>& rule_table(int i) const { return rules_[i]; }

    std::uint64_t input_space_size() const {
        std::uint64_t s = 1;
        for (int b : in_sizes_) {
            s *= static_cast<std::uint64_t>(b);
            require(s <= (std::uint64_t{1} << 24), "input space too large to enumerate");
        }
        return s;
    }

    Letter eval_cell(int i, const std::vector<Letter>& input) const {
        std::uint64_t idx = 0, radix = 1;
        for (int j : win_[i]) {
            idx += radix * static_cast<std::uint64_t>(input[j]);
            radix *= static_cast<std::uint64_t>(in_sizes_[j]);
        }
        return rules_[i][idx];
    }

    Word eval(const std::vector<Letter>& input) const {
        require(static_cast<int>(input.size()) == num_inputs(), "input arity mismatch");
        for (int j = 0; j < num_inputs(); ++j)
            require(input[j] >= 0 && input[j] < in_sizes_[j], "input letter out of range");
        Word w(out_n_);
        for (int i = 0; i < out_n_; ++i) w[i] = eval_cell(i, input);
        return w;
    }

  private:
    std::vector<int> in_sizes_;
    int out_n_;
    int out_asize_;
    std::vector<std::vector<int>> win_;
    std::vector<std::vector<Letter>> rules_;
};

namespace detail {
// Calls fn(input) for every input tuple, in odometer order with cell 0 as the
// fastest digit.
template <typename Fn>
inline void for_each_input(const std::vector<int>& sizes, Fn&& fn) {
    std::vector<Letter> x(sizes.size(), 0);
    while (true) {
        fn(const_cast<const std::vector<Letter>&>(x));
        std::size_t k = 0;
        while (k < sizes.size() && x[k] == sizes[k] - 1) x[k++] = 0;
        if (k == sizes.size()) break;
        ++x[k];
    }
}
}  // namespace detail

// Image of the procedure as a language over its output alphabet. Words are
// packed into 64-bit keys when the output space is small enough, which keeps
// the enumeration cheap for large input spaces with small images.
inline Language image(const Procedure& P) {
    P.input_space_size();  // bound check
    int n = P.output_n();
    int bits = 1;
    while ((1 << bits) < P.output_alphabet() && bits < 63) ++bits;
    if (static_cast<std::uint64_t>(bits) * n <= 62) {
        std::vector<std::uint64_t> keys;
        detail::for_each_input(P.input_sizes(), [&](const std::vector<Letter>& x) {
            std::uint64_t key = 0;
            for (int i = 0; i < n; ++i)
                key |= static_cast<std::uint64_t>(P.eval_cell(i, x)) << (bits * i);
            keys.push_back(key);
            if (keys.size() >= (1u << 22)) {
                std::sort(keys.begin(), keys.end());
                keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
                require(keys.size() < (1u << 21), "image has too many distinct words");
            }
        });
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<Word> words;
        words.reserve(keys.size());
        for (std::uint64_t key : keys) {
            Word w(n);
            for (int i = 0; i < n; ++i)
                w[i] = static_cast<Letter>((key >> (bits * i)) & ((1u << bits) - 1));
            words.push_back(std::move(w));
        }
        return Language(n, P.output_alphabet(), std::move(words));
    }
    std::vector<Word> words;
    detail::for_each_input(P.input_sizes(), [&](const std::vector<Letter>& x) {
        Word w(n);
        for (int i = 0; i < n; ++i) w[i] = P.eval_cell(i, x);
        words.push_back(std::move(w));
        if (words.size() >= (1u << 20)) {
            std::sort(words.begin(), words.end());
            words.erase(std::unique(words.begin(), words.end()), words.end());
            require(words.size() < (1u << 19), "image has too many distinct words");
        }
    });
    return Language(n, P.output_alphabet(), std::move(words));
}

// True input window of cell i: the cells j whose value can change f_i with
// all other window cells fixed. This is the least window for which agreement
// forces equal outputs.
inline std::vector<int> input_window(const Procedure& P, int i) {
    const auto& win = P.declared_window(i);
    const auto& table = P.rule_table(i);
    std::vector<int> radices(win.size());
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < win.size(); ++k) {
        radices[k] = P.input_sizes()[win[k]];
        total *= static_cast<std::uint64_t>(radices[k]);
    }
    std::vector<int> essential;
    for (std::size_t k = 0; k < win.size(); ++k) {
        std::uint64_t below = 1;
        for (std::size_t t = 0; t < k; ++t) below *= static_cast<std::uint64_t>(radices[t]);
        std::uint64_t stride = below * static_cast<std::uint64_t>(radices[k]);
        bool ess = false;
        for (std::uint64_t base = 0; base < total && !ess; base += stride) {
            for (std::uint64_t low = 0; low < below && !ess; ++low) {
                Letter first = table[base + low];
                for (int v = 1; v < radices[k]; ++v)
                    if (table[base + low + below * static_cast<std::uint64_t>(v)] != first) {
                        ess = true;
                        break;
                    }
            }
        }
        if (ess) essential.push_back(win[k]);
    }
    return essential;
}

inline std::vector<std::vector<int>> all_input_windows(const Procedure& P) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < P.output_n(); ++i) out.push_back(input_window(P, i));
    return out;
}

// Dual window of input cell j: the output cells whose true window contains j.
inline std::vector<int> dual_window(const Procedure& P, int j) {
    std::vector<int> out;
    for (int i = 0; i < P.output_n(); ++i) {
        auto w = input_window(P, i);
        if (std::binary_search(w.begin(), w.end(), j)) out.push_back(i);
    }
    return out;
}

// Visibility diagram: the pairs (i, j) with input cell j in the true window
// of output cell i.
inline std::vector<std::pair<int, int>> visibility(const Procedure& P) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < P.output_n(); ++i)
        for (int j : input_window(P, i)) out.emplace_back(i, j);
    return out;
}

// Up-set of a set of output cells: the input cells seen by all of them. The
// empty set's up-set is all input cells.
inline std::vector<int> up_set(const Procedure& P, Mask cells) {
    std::vector<int> out;
    auto wins = all_input_windows(P);
    for (int j = 0; j < P.num_inputs(); ++j) {
        bool in_all = true;
        for (int i : mask_to_vertices(cells)) {
            const auto& w = wins[i];
            if (!std::binary_search(w.begin(), w.end(), j)) {
                in_all = false;
                break;
            }
        }
        if (in_all) out.push_back(j);
    }
    return out;
}

// Communication complex of f over the output cells: the complex induced by
// the dual windows, equivalently the sets of cells with a common seen input.
// A procedure with all windows empty has the empty complex.
inline SimplicialComplex comm_complex(const Procedure& P) {
    auto wins = all_input_windows(P);
    std::vector<Mask> duals;
    for (int j = 0; j < P.num_inputs(); ++j) {
        Mask d = 0;
        for (int i = 0; i < P.output_n(); ++i)
            if (std::binary_search(wins[i].begin(), wins[i].end(), j)) d |= bit(i);
        if (d) duals.push_back(d);
    }
    if (duals.empty()) return SimplicialComplex::empty(P.output_n());
    return SimplicialComplex::from_maximal(P.output_n(), duals);
}

// f generates L over K when its image is exactly L and its communication
// complex lies inside K.
inline bool verify_generates(const Procedure& P, const Language& L, const SimplicialComplex& K) {
    require(P.output_n() == L.n() && K.n() == L.n(), "arity mismatch");
    if (!comm_complex(P).subset_of(K)) return false;
    return image(P).same_words(L);
}

// Composition f after g, as a procedure from g's inputs. Declared windows are
// the unions of g's declared windows over f's declared window.
inline Procedure compose(const Procedure& f, const Procedure& g) {
    require(f.num_inputs() == g.output_n(), "composition arity mismatch");
    for (int j = 0; j < f.num_inputs(); ++j)
        require(g.output_alphabet() <= f.input_sizes()[j],
                "inner output alphabet exceeds outer input alphabet");
    std::vector<std::vector<int>> windows(f.output_n());
    std::vector<std::vector<Letter>> rules(f.output_n());
    for (int i = 0; i < f.output_n(); ++i) {
        Mask wm = 0;
        for (int j : f.declared_window(i))
            for (int h : g.declared_window(j)) wm |= bit(h);
        windows[i] = mask_to_vertices(wm);
        std::vector<int> sizes;
        for (int h : windows[i]) sizes.push_back(g.input_sizes()[h]);
        std::uint64_t total = 1;
        for (int s : sizes) total *= static_cast<std::uint64_t>(s);
        require(total <= (1u << 24), "composite rule table too large");
        std::vector<Letter> table(total);
        std::vector<Letter> full(g.num_inputs(), 0);
        std::uint64_t idx = 0;
        detail::for_each_input(sizes, [&](const std::vector<Letter>& part) {
            for (std::size_t k = 0; k < windows[i].size(); ++k) full[windows[i][k]] = part[k];
            // Cells outside f's declared window are never read; leave them 0.
            Word mid(g.output_n(), 0);
            for (int j : f.declared_window(i)) mid[j] = g.eval_cell(j, full);
            table[idx++] = f.eval_cell(i, mid);
        });
        rules[i] = std::move(table);
    }
    return Procedure(g.input_sizes(), f.output_n(), f.output_alphabet(), std::move(windows),
                     std::move(rules));
}

// Pushforward of a complex over g's input cells along g: the complex induced
// by the unions of dual windows over each simplex.
inline SimplicialComplex pushforward(const Procedure& P, const SimplicialComplex& K_inputs) {
    require(K_inputs.n() == P.num_inputs(), "pushforward needs a complex over the input cells");
    std::vector<Mask> dual(P.num_inputs(), 0);
    auto wins = all_input_windows(P);
    for (int i = 0; i < P.output_n(); ++i)
        for (int j : wins[i]) dual[j] |= bit(i);
    std::vector<Mask> images;
    for (Mask m : K_inputs.maximal()) {
        Mask u = 0;
        for (int j : mask_to_vertices(m)) u |= dual[j];
        if (u) images.push_back(u);
    }
    if (images.empty()) return SimplicialComplex::empty(P.output_n());
    return SimplicialComplex::from_maximal(P.output_n(), images);
}

// Image of a language under a letterwise map given as a procedure whose input
// cells match L's positions.
inline Language image_under_map(const Language& L, const Procedure& P) {
    require(P.num_inputs() == L.n(), "map arity differs from language arity");
    for (int j = 0; j < P.num_inputs(); ++j)
        require(P.input_sizes()[j] >= L.alphabet_size(), "map input alphabet too small");
    std::vector<Word> words;
    for (const Word& w : L.words()) words.push_back(P.eval(w));
    return Language(P.output_n(), P.output_alphabet(), std::move(words));
}

}  // namespace locogen
