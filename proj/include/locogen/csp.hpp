#pragma once

#include <chrono>
#include <deque>
#include <ostream>
#include <queue>

#include "complex.hpp"
#include "language.hpp"
#include "procedure.hpp"

namespace locogen {

// Domain of a constraint variable: a set of letters, up to 128.
struct LetterSet {
    std::uint64_t lo = 0, hi = 0;

    static LetterSet single(int a) {
        LetterSet s;
        s.set(a);
        return s;
    }
    void set(int a) {
        if (a < 64)
            lo |= std::uint64_t{1} << a;
        else
            hi |= std::uint64_t{1} << (a - 64);
    }
    bool test(int a) const {
        return a < 64 ? (lo >> a) & 1 : (hi >> (a - 64)) & 1;
    }
    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const { return (lo | hi) == 0; }
    int first() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }
    LetterSet operator&(const LetterSet& o) const { return {lo & o.lo, hi & o.hi}; }
    bool operator==(const LetterSet& o) const { return lo == o.lo && hi == o.hi; }
    bool operator!=(const LetterSet& o) const { return !(*this == o); }
};

enum class CspStatus { satisfiable, unsatisfiable, undecided };

struct CspStats {
    std::uint64_t nodes = 0;
    std::uint64_t tuple_visits = 0;
    std::uint64_t max_depth = 0;
    bool probe_succeeded = false;
    bool vacuous = false;
    double seconds = 0;
};

struct CspOptions {
    double timeout_seconds = 0;         // 0 = no limit
    std::uint64_t node_limit = 0;       // 0 = no limit
    std::uint64_t probe_threshold = 0;  // probe when the tuple space is at least this
};

struct CspResult {
    CspStatus status = CspStatus::undecided;
    std::optional<Procedure> witness;
    std::string note;
    CspStats stats;
};

// The canonical constraint program for generation queries. Base letters are
// the words of D, input cells are the maximal non-empty simplices of K, and
// there is one variable per (output cell, restriction class of a base tuple
// to the simplices containing the cell). Diagonal pins force the all-d tuple
// to output d on the pinned positions; one membership constraint per base
// tuple keeps every output inside U. The standard generation query is
// D = U = L with every position pinned.
class CanonicalCsp {
  public:
    CanonicalCsp(const Language& U, std::vector<Word> base, Mask pinned_positions,
                 const SimplicialComplex& K)
        : U_(U), D_(std::move(base)), W_(pinned_positions) {
        require(K.n() == U_.n(), "complex and language arity differ");
        require(U_.alphabet_size() <= 128, "constraint solver supports at most 128 letters");
        require(!D_.empty(), "base word list must be non-empty");
        n_ = U_.n();
        asize_ = U_.alphabet_size();
        for (Mask m : K.maximal())
            if (m != 0) J_.push_back(m);
        nbase_ = static_cast<int>(D_.size());
        // Tuple space and per-cell layout.
        tuple_count_ = 1;
        for (std::size_t j = 0; j < J_.size(); ++j) {
            tuple_count_ *= static_cast<std::uint64_t>(nbase_);
            require(tuple_count_ <= (std::uint64_t{1} << 24), "base tuple space too large");
        }
        Ji_.assign(n_, {});
        for (int i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < J_.size(); ++j)
                if (mask_contains(J_[j], i)) Ji_[i].push_back(static_cast<int>(j));
        offset_.assign(n_, 0);
        classes_.assign(n_, 1);
        nvars_ = 0;
        for (int i = 0; i < n_; ++i) {
            std::uint64_t c = 1;
            for (std::size_t k = 0; k < Ji_[i].size(); ++k) {
                c *= static_cast<std::uint64_t>(nbase_);
                require(c <= (std::uint64_t{1} << 22), "cell class space too large");
            }
            classes_[i] = c;
            offset_[i] = nvars_;
            nvars_ += c;
            require(nvars_ <= (std::uint64_t{1} << 23), "too many constraint variables");
        }
        cell_of_.assign(nvars_, 0);
        for (int i = 0; i < n_; ++i)
            for (std::uint64_t c = 0; c < classes_[i]; ++c)
                cell_of_[offset_[i] + c] = static_cast<std::uint8_t>(i);
        // Flat copy of U's words for the support sweeps.
        uflat_.resize(static_cast<std::size_t>(U_.size()) * n_);
        for (int w = 0; w < U_.size(); ++w)
            for (int p = 0; p < n_; ++p)
                uflat_[static_cast<std::size_t>(w) * n_ + p] =
                    static_cast<std::int16_t>(U_.word(w)[p]);
        col_support_.assign(n_, std::vector<int>(asize_, 0));
        for (int w = 0; w < U_.size(); ++w)
            for (int p = 0; p < n_; ++p) ++col_support_[p][U_.word(w)[p]];
    }

    std::uint64_t num_variables() const { return nvars_; }
    std::uint64_t tuple_count() const { return tuple_count_; }
    int num_input_cells() const { return static_cast<int>(J_.size()); }
    const std::vector<Mask>& input_cells() const { return J_; }
    std::uint64_t cell_classes(int i) const { return classes_[i]; }
    const std::vector<Word>& base_words() const { return D_; }

    // Membership is vacuous when U is the full language over its alphabet.
    bool membership_vacuous() const {
        std::uint64_t need = 1;
        for (int p = 0; p < n_; ++p) {
            need *= static_cast<std::uint64_t>(asize_);
            if (need > static_cast<std::uint64_t>(U_.size())) return false;
        }
        return need == static_cast<std::uint64_t>(U_.size());
    }

    CspResult solve(const CspOptions& opts = {}) const {
        Solver s(*this, opts);
        return s.run();
    }

    // DIMACS export of the raw encoding: one-hot letter variables per
    // constraint variable, pin units, and per-tuple selectors over U's words
    // with channeling clauses. Solutions correspond exactly to solutions of
    // the constraint program.
    void export_dimacs(std::ostream& os) const {
        require(tuple_count_ * static_cast<std::uint64_t>(U_.size()) <= (std::uint64_t{1} << 22),
                "instance too large for CNF export");
        std::uint64_t pvars = nvars_ * static_cast<std::uint64_t>(asize_);
        std::uint64_t svars = tuple_count_ * static_cast<std::uint64_t>(U_.size());
        auto pvar = [&](std::uint64_t v, int a) { return v * asize_ + a + 1; };
        auto svar = [&](std::uint64_t t, int w) {
            return pvars + t * static_cast<std::uint64_t>(U_.size()) + w + 1;
        };
        std::vector<std::string> clauses;
        auto emit = [&](std::initializer_list<long long> lits) {
            std::string line;
            for (long long l : lits) line += std::to_string(l) + " ";
            line += "0";
            clauses.push_back(std::move(line));
        };
        for (std::uint64_t v = 0; v < nvars_; ++v) {
            std::string line;
            for (int a = 0; a < asize_; ++a) line += std::to_string(pvar(v, a)) + " ";
            line += "0";
            clauses.push_back(std::move(line));
            for (int a = 0; a < asize_; ++a)
                for (int b = a + 1; b < asize_; ++b)
                    emit({-static_cast<long long>(pvar(v, a)), -static_cast<long long>(pvar(v, b))});
        }
        // Diagonal pins.
        for (int d = 0; d < nbase_; ++d) {
            for (int i = 0; i < n_; ++i) {
                if (!mask_contains(W_, i)) continue;
                std::uint64_t rep = 0, pw = 1;
                for (std::size_t k = 0; k < Ji_[i].size(); ++k) {
                    rep += pw * static_cast<std::uint64_t>(d);
                    pw *= static_cast<std::uint64_t>(nbase_);
                }
                emit({static_cast<long long>(pvar(offset_[i] + rep, pin_letter(d, i)))});
            }
        }
        // Tuple constraints.
        std::vector<int> digits(J_.size(), 0);
        std::uint64_t t = 0;
        while (true) {
            std::string line;
            for (int w = 0; w < U_.size(); ++w) line += std::to_string(svar(t, w)) + " ";
            line += "0";
            clauses.push_back(std::move(line));
            for (int w = 0; w < U_.size(); ++w)
                for (int p = 0; p < n_; ++p) {
                    std::uint64_t cls = 0, pw = 1;
                    for (std::size_t k = 0; k < Ji_[p].size(); ++k) {
                        cls += pw * static_cast<std::uint64_t>(digits[Ji_[p][k]]);
                        pw *= static_cast<std::uint64_t>(nbase_);
                    }
                    emit({-static_cast<long long>(svar(t, w)),
                          static_cast<long long>(pvar(offset_[p] + cls, U_.word(w)[p]))});
                }
            ++t;
            std::size_t k = 0;
            while (k < digits.size() && digits[k] == nbase_ - 1) digits[k++] = 0;
            if (k == digits.size()) break;
            ++digits[k];
        }
        os << "c canonical generation query encoding v1\n";
        os << "c cells " << n_ << " letters " << asize_ << " base " << nbase_ << " inputs "
           << J_.size() << "\n";
        os << "p cnf " << pvars + svars << " " << clauses.size() << "\n";
        for (const auto& c : clauses) os << c << "\n";
    }

  private:
    // Letter pinned at position i for base word d; base words are indexed by
    // the positions of W ascending when W is proper, and by all positions
    // when W is the full set.
    Letter pin_letter(int d, int i) const {
        if (W_ == full_mask(n_)) return D_[d][i];
        int k = popcount(W_ & (bit(i) - 1));
        return D_[d][k];
    }

    class Solver {
      public:
        Solver(const CanonicalCsp& c, const CspOptions& o) : csp(c), opts(o) {}

        CspResult run() {
            auto start = std::chrono::steady_clock::now();
            CspResult res;
            deadline_valid = opts.timeout_seconds > 0;
            if (deadline_valid)
                deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                       std::chrono::duration<double>(opts.timeout_seconds));
            dom.assign(csp.nvars_, LetterSet{});
            // Initial domains: letters occurring at the cell's position in U.
            for (std::uint64_t v = 0; v < csp.nvars_; ++v) {
                int i = csp.cell_of_[v];
                LetterSet s;
                for (int a = 0; a < csp.asize_; ++a)
                    if (csp.col_support_[i][a] > 0) s.set(a);
                dom[v] = s;
            }
            in_queue.assign(csp.nvars_, 0);
            bool ok = apply_pins();
            if (ok && !csp.membership_vacuous()) {
                ok = initial_sweep();
                if (ok) ok = drain();
            } else if (ok) {
                res.stats.vacuous = true;
            }
            if (!ok) {
                res.status = CspStatus::unsatisfiable;
                res.note = "no assignment survives propagation";
                finish(res, start);
                return res;
            }
            if (!res.stats.vacuous && csp.tuple_count_ >= opts.probe_threshold && probe()) {
                res.stats.probe_succeeded = true;
                res.status = CspStatus::satisfiable;
                res.witness = extract(probe_val);
                finish(res, start);
                return res;
            }
            if (res.stats.vacuous) {
                // Any pin-respecting assignment works; take domain minima.
                std::vector<Letter> val(csp.nvars_);
                for (std::uint64_t v = 0; v < csp.nvars_; ++v) val[v] = dom[v].first();
                res.status = CspStatus::satisfiable;
                res.witness = extract(val);
                finish(res, start);
                return res;
            }
            int r = dfs();
            if (r == 1) {
                std::vector<Letter> val(csp.nvars_);
                for (std::uint64_t v = 0; v < csp.nvars_; ++v) val[v] = dom[v].first();
                res.status = CspStatus::satisfiable;
                res.witness = extract(val);
            } else if (r == 0) {
                res.status = CspStatus::unsatisfiable;
                res.note = "search space exhausted";
            } else {
                res.status = CspStatus::undecided;
                res.note = stopped_reason;
            }
            finish(res, start);
            return res;
        }

      private:
        const CanonicalCsp& csp;
        const CspOptions& opts;
        std::vector<LetterSet> dom;
        std::vector<std::pair<std::uint64_t, LetterSet>> trail;
        std::vector<char> in_queue;
        std::deque<std::uint64_t> queue;
        std::vector<Letter> probe_val;
        CspStats stats;
        std::chrono::steady_clock::time_point deadline;
        bool deadline_valid = false;
        std::string stopped_reason;

        // Branch-variable heap: smallest live domain first, then the cell
        // with the larger incident tuple space, then lowest id. Entries go
        // stale when a domain changes; select discards entries whose count
        // no longer matches, so every variable with two or more letters must
        // always own an entry carrying its current count.
        struct MrvItem {
            int count;
            std::uint64_t deg;
            std::uint64_t var;
        };
        struct MrvOrder {
            bool operator()(const MrvItem& a, const MrvItem& b) const {
                if (a.count != b.count) return a.count > b.count;
                if (a.deg != b.deg) return a.deg < b.deg;
                return a.var > b.var;
            }
        };
        std::priority_queue<MrvItem, std::vector<MrvItem>, MrvOrder> mrv;
        bool mrv_active = false;

        void mrv_push(std::uint64_t v) {
            if (!mrv_active) return;
            int c = dom[v].count();
            if (c < 2) return;
            mrv.push({c, csp.tuple_count_ / csp.classes_[csp.cell_of_[v]], v});
        }

        bool out_of_budget() {
            if (opts.node_limit && stats.nodes >= opts.node_limit) {
                stopped_reason = "node limit reached";
                return true;
            }
            if (deadline_valid && (stats.nodes & 255) == 0 &&
                std::chrono::steady_clock::now() > deadline) {
                stopped_reason = "timeout";
                return true;
            }
            return false;
        }

        bool apply_pins() {
            for (int d = 0; d < csp.nbase_; ++d)
                for (int i = 0; i < csp.n_; ++i) {
                    if (!mask_contains(csp.W_, i)) continue;
                    std::uint64_t rep = 0, pw = 1;
                    for (std::size_t k = 0; k < csp.Ji_[i].size(); ++k) {
                        rep += pw * static_cast<std::uint64_t>(d);
                        pw *= static_cast<std::uint64_t>(csp.nbase_);
                    }
                    std::uint64_t v = csp.offset_[i] + rep;
                    LetterSet nd = dom[v] & LetterSet::single(csp.pin_letter(d, i));
                    if (nd.empty()) return false;
                    if (nd != dom[v]) {
                        dom[v] = nd;
                        mark(v);
                    }
                }
            return true;
        }

        void mark(std::uint64_t v) {
            if (!in_queue[v]) {
                in_queue[v] = 1;
                queue.push_back(v);
            }
        }

        // Support sweep for the tuple with the given digits. Returns false on
        // a domain wipeout.
        bool visit(const std::vector<int>& digits) {
            ++stats.tuple_visits;
            std::uint64_t var[32];
            LetterSet supp[32];
            for (int i = 0; i < csp.n_; ++i) {
                std::uint64_t cls = 0, pw = 1;
                for (std::size_t k = 0; k < csp.Ji_[i].size(); ++k) {
                    cls += pw * static_cast<std::uint64_t>(digits[csp.Ji_[i][k]]);
                    pw *= static_cast<std::uint64_t>(csp.nbase_);
                }
                var[i] = csp.offset_[i] + cls;
                supp[i] = LetterSet{};
            }
            const std::int16_t* uf = csp.uflat_.data();
            int un = csp.U_.size();
            for (int w = 0; w < un; ++w) {
                const std::int16_t* row = uf + static_cast<std::size_t>(w) * csp.n_;
                bool ok = true;
                for (int p = 0; p < csp.n_; ++p)
                    if (!dom[var[p]].test(row[p])) {
                        ok = false;
                        break;
                    }
                if (ok)
                    for (int p = 0; p < csp.n_; ++p) supp[p].set(row[p]);
            }
            for (int p = 0; p < csp.n_; ++p) {
                LetterSet nd = dom[var[p]] & supp[p];
                if (nd.empty()) return false;
                if (nd != dom[var[p]]) {
                    trail.emplace_back(var[p], dom[var[p]]);
                    dom[var[p]] = nd;
                    mark(var[p]);
                    mrv_push(var[p]);
                }
            }
            return true;
        }

        bool initial_sweep() {
            std::vector<int> digits(csp.J_.size(), 0);
            std::uint64_t t = 0;
            while (t < csp.tuple_count_) {
                if (!visit(digits)) return false;
                ++t;
                std::size_t k = 0;
                while (k < digits.size() && digits[k] == csp.nbase_ - 1) digits[k++] = 0;
                if (k < digits.size()) ++digits[k];
            }
            return true;
        }

        // Re-visits the incident tuples of every queued variable until the
        // queue drains or a wipeout occurs.
        bool drain() {
            std::vector<int> digits(csp.J_.size(), 0);
            while (!queue.empty()) {
                std::uint64_t v = queue.front();
                queue.pop_front();
                in_queue[v] = 0;
                int i = csp.cell_of_[v];
                std::uint64_t cls = v - csp.offset_[i];
                for (std::size_t k = 0; k < csp.Ji_[i].size(); ++k) {
                    digits[csp.Ji_[i][k]] = static_cast<int>(cls % csp.nbase_);
                    cls /= csp.nbase_;
                }
                // Odometer over the input cells outside Ji_[i].
                std::vector<int> free;
                for (std::size_t j = 0; j < csp.J_.size(); ++j)
                    if (!std::binary_search(csp.Ji_[i].begin(), csp.Ji_[i].end(),
                                            static_cast<int>(j)))
                        free.push_back(static_cast<int>(j));
                for (int j : free) digits[j] = 0;
                while (true) {
                    if (!visit(digits)) {
                        clear_queue();
                        return false;
                    }
                    std::size_t k = 0;
                    while (k < free.size() && digits[free[k]] == csp.nbase_ - 1)
                        digits[free[k++]] = 0;
                    if (k == free.size()) break;
                    ++digits[free[k]];
                }
            }
            return true;
        }

        void clear_queue() {
            while (!queue.empty()) {
                in_queue[queue.front()] = 0;
                queue.pop_front();
            }
        }

        void undo_to(std::size_t frame) {
            while (trail.size() > frame) {
                dom[trail.back().first] = trail.back().second;
                mrv_push(trail.back().first);
                trail.pop_back();
            }
        }

        // Greedy completion check: pick the most supported letter in every
        // unassigned domain and test every tuple once.
        bool probe() {
            probe_val.assign(csp.nvars_, 0);
            for (std::uint64_t v = 0; v < csp.nvars_; ++v) {
                int i = csp.cell_of_[v];
                int best = -1, bestc = -1;
                for (int a = 0; a < csp.asize_; ++a)
                    if (dom[v].test(a) && csp.col_support_[i][a] > bestc) {
                        bestc = csp.col_support_[i][a];
                        best = a;
                    }
                probe_val[v] = best;
            }
            std::vector<int> digits(csp.J_.size(), 0);
            Word w(csp.n_);
            std::uint64_t t = 0;
            while (t < csp.tuple_count_) {
                for (int i = 0; i < csp.n_; ++i) {
                    std::uint64_t cls = 0, pw = 1;
                    for (std::size_t k = 0; k < csp.Ji_[i].size(); ++k) {
                        cls += pw * static_cast<std::uint64_t>(digits[csp.Ji_[i][k]]);
                        pw *= static_cast<std::uint64_t>(csp.nbase_);
                    }
                    w[i] = probe_val[csp.offset_[i] + cls];
                }
                if (!csp.U_.contains(w)) return false;
                ++t;
                std::size_t k = 0;
                while (k < digits.size() && digits[k] == csp.nbase_ - 1) digits[k++] = 0;
                if (k < digits.size()) ++digits[k];
            }
            return true;
        }

        // The best live heap entry, or nvars_ when every domain is a
        // singleton. Stale entries are discarded on the way; the winning
        // entry stays put and goes stale once the variable is assigned.
        std::uint64_t select_branch_var() {
            while (!mrv.empty()) {
                const MrvItem& top = mrv.top();
                if (dom[top.var].count() == top.count) return top.var;
                mrv.pop();
            }
            return csp.nvars_;
        }

        // Depth-first search with an explicit frame stack; instances can have
        // hundreds of thousands of variables, far past what call recursion
        // tolerates. Returns 1 on solution, 0 on exhaustion, -1 when stopped
        // early. On 1 the domains hold the solution as singletons.
        int dfs() {
            struct Frame {
                std::uint64_t var;
                int next_letter;
                std::size_t mark;  // trail size at frame entry
            };
            mrv_active = true;
            for (std::uint64_t v = 0; v < csp.nvars_; ++v) mrv_push(v);
            std::uint64_t root = select_branch_var();
            if (root == csp.nvars_) return 1;  // all singleton and arc consistent
            std::vector<Frame> stack;
            stack.push_back({root, 0, trail.size()});
            while (!stack.empty()) {
                Frame& f = stack.back();
                // Re-entering the frame: drop the previous trial's effects so
                // the stored domain of f.var is visible again.
                undo_to(f.mark);
                int a = f.next_letter;
                while (a < csp.asize_ && !dom[f.var].test(a)) ++a;
                if (a >= csp.asize_) {
                    stack.pop_back();
                    continue;
                }
                f.next_letter = a + 1;
                ++stats.nodes;
                if (out_of_budget()) return -1;
                trail.emplace_back(f.var, dom[f.var]);
                dom[f.var] = LetterSet::single(a);
                mark(f.var);
                if (!drain()) continue;
                std::uint64_t next = select_branch_var();
                if (next == csp.nvars_) return 1;
                stack.push_back({next, 0, trail.size()});
                stats.max_depth = std::max<std::uint64_t>(stats.max_depth, stack.size());
            }
            return 0;
        }

        Procedure extract(const std::vector<Letter>& val) const {
            int cells = static_cast<int>(csp.J_.size());
            std::vector<int> in_sizes(cells, csp.nbase_);
            std::vector<std::vector<int>> windows(csp.n_);
            std::vector<std::vector<Letter>> rules(csp.n_);
            for (int i = 0; i < csp.n_; ++i) {
                windows[i] = csp.Ji_[i];
                rules[i].resize(csp.classes_[i]);
                for (std::uint64_t c = 0; c < csp.classes_[i]; ++c)
                    rules[i][c] = val[csp.offset_[i] + c];
            }
            return Procedure(in_sizes, csp.n_, csp.asize_, std::move(windows), std::move(rules));
        }

        void finish(CspResult& res, std::chrono::steady_clock::time_point start) {
            res.stats.nodes = stats.nodes;
            res.stats.tuple_visits = stats.tuple_visits;
            res.stats.max_depth = stats.max_depth;
            res.stats.probe_succeeded = res.stats.probe_succeeded || stats.probe_succeeded;
            res.stats.seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };

    Language U_;
    std::vector<Word> D_;
    Mask W_;
    int n_ = 0;
    int asize_ = 0;
    int nbase_ = 0;
    std::vector<Mask> J_;
    std::vector<std::vector<int>> Ji_;
    std::vector<std::uint64_t> offset_;
    std::vector<std::uint64_t> classes_;
    std::uint64_t nvars_ = 0;
    std::uint64_t tuple_count_ = 1;
    std::vector<std::uint8_t> cell_of_;
    std::vector<std::int16_t> uflat_;
    std::vector<std::vector<int>> col_support_;
};

inline CanonicalCsp build_canonical_csp(const Language& L, const SimplicialComplex& K) {
    return CanonicalCsp(L, L.words(), full_mask(L.n()), K);
}

}  // namespace locogen
