#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <locogen/decide.hpp>
#include <locogen/enumerate.hpp>
#include <locogen/families.hpp>
#include <locogen/generators.hpp>
#include <locogen/io.hpp>

using namespace locogen;

namespace {

// ---------------------------------------------------------------------------
// Query sources shared by the subcommands.

struct LanguageSource {
    std::string family;
    std::string file;
    int n = 0;
    int alphabet_size = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family,
                        "language family, e.g. ev, od, nd, nc, eq, constants, full, "
                        "card-ge:k, card-le:k, one-hot, one-or-all, one-or-all-or-zero");
        cmd->add_option("--lang-file", file, "language JSON file");
        cmd->add_option("--n", n, "number of output positions for --family");
        cmd->add_option("--alphabet-size", alphabet_size,
                        "alphabet size for families that take one");
    }

    bool present() const { return !family.empty() || !file.empty(); }

    std::string echo() const {
        if (!file.empty()) return "file=" + file;
        std::string s = "family=" + family + " n=" + std::to_string(n);
        if (alphabet_size > 0) s += " alphabet-size=" + std::to_string(alphabet_size);
        return s;
    }

    Language resolve() const {
        require(family.empty() || file.empty(), "give either --family or --lang-file, not both");
        if (!file.empty()) return read_language_file(file);
        require(!family.empty(), "a language is required: --family or --lang-file");
        require(n >= 1, "--family needs --n");
        std::string name = family, arg;
        if (auto pos = family.find(':'); pos != std::string::npos) {
            name = family.substr(0, pos);
            arg = family.substr(pos + 1);
        }
        int a = alphabet_size > 0 ? alphabet_size : 2;
        if (name == "ev") return ev(n);
        if (name == "od") return od(n);
        if (name == "nd") return nd(n, a);
        if (name == "nc") return nc(n, a);
        if (name == "eq") return eq(n, a);
        if (name == "constants") return constants(n, a);
        if (name == "full") return full_language(n, a);
        if (name == "one-hot" || name == "unique") return one_hot(n);
        if (name == "one-or-all") return one_or_all(n);
        if (name == "one-or-all-or-zero") return one_or_all_or_zero(n);
        if (name == "card-ge" || name == "card-le") {
            require(!arg.empty(), family + " needs a threshold, e.g. " + name + ":2");
            int k = std::stoi(arg);
            return name == "card-ge" ? card_ge(n, k) : card_le(n, k);
        }
        throw std::invalid_argument("unknown family: " + name);
    }
};

struct ComplexSource {
    std::string spec;
    std::string file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--complex", spec,
                        "named complex: full, boundary, complete-graph, singletons, empty, "
                        "empty-simplex, apex:a, path:0-1-2, tree:0-1,1-2, fig2, fig3, fig4");
        cmd->add_option("--complex-file", file, "complex JSON file");
    }

    bool present() const { return !spec.empty() || !file.empty(); }

    std::string echo() const { return file.empty() ? spec : "file=" + file; }

    // n_ctx is the arity implied by the language, or 0 when unknown.
    SimplicialComplex resolve(int n_ctx) const {
        require(spec.empty() || file.empty(),
                "give either --complex or --complex-file, not both");
        if (!file.empty()) return read_complex_file(file);
        require(!spec.empty(), "a complex is required: --complex or --complex-file");
        std::string name = spec, arg;
        if (auto pos = spec.find(':'); pos != std::string::npos) {
            name = spec.substr(0, pos);
            arg = spec.substr(pos + 1);
        }
        auto need_n = [&]() {
            require(n_ctx >= 1, "complex '" + name + "' needs a language or --n for its arity");
            return n_ctx;
        };
        if (name == "full") return full_complex(need_n());
        if (name == "boundary") return boundary_complex(need_n());
        if (name == "complete-graph") return complete_graph_complex(need_n());
        if (name == "singletons") return singletons_complex(need_n());
        if (name == "empty") return SimplicialComplex::empty(need_n());
        if (name == "empty-simplex") return SimplicialComplex::empty_simplex_only(need_n());
        if (name == "apex") {
            require(!arg.empty(), "apex needs a vertex, e.g. apex:0");
            return apex_cone_complex(need_n(), std::stoi(arg));
        }
        if (name == "fig2" || name == "fig3" || name == "fig4") {
            require(n_ctx == 0 || n_ctx == 4, name + " lives on four vertices");
            std::vector<std::pair<int, int>> es;
            if (name == "fig2") es = {{0, 3}, {1, 3}, {0, 2}};
            if (name == "fig3") es = {{0, 1}, {0, 2}, {1, 3}};
            if (name == "fig4") es = {{0, 2}, {1, 2}, {1, 3}};
            return graph_as_complex(Graph(4, es));
        }
        if (name == "path" || name == "tree") {
            require(!arg.empty(), name + " needs vertices, e.g. path:0-1-2 or tree:0-1,1-2");
            std::vector<std::pair<int, int>> es;
            int maxv = -1;
            auto parse_int = [](const std::string& s) {
                require(!s.empty(), "empty vertex in complex spec");
                return std::stoi(s);
            };
            if (name == "path") {
                std::vector<int> order;
                std::istringstream in(arg);
                std::string tok;
                while (std::getline(in, tok, '-')) order.push_back(parse_int(tok));
                for (std::size_t k = 0; k + 1 < order.size(); ++k)
                    es.emplace_back(order[k], order[k + 1]);
                for (int v : order) maxv = std::max(maxv, v);
            } else {
                std::istringstream in(arg);
                std::string edge;
                while (std::getline(in, edge, ',')) {
                    auto dash = edge.find('-');
                    require(dash != std::string::npos, "edges look like 0-1");
                    int u = parse_int(edge.substr(0, dash));
                    int v = parse_int(edge.substr(dash + 1));
                    es.emplace_back(u, v);
                    maxv = std::max(maxv, std::max(u, v));
                }
            }
            int n = n_ctx >= 1 ? n_ctx : maxv + 1;
            return graph_as_complex(Graph(n, es));
        }
        throw std::invalid_argument("unknown complex: " + name);
    }
};

// ---------------------------------------------------------------------------
// Report output. Plain lines are the deterministic payload; '#' lines carry
// timing and cache chatter that may differ between runs.

void head(const std::string& command) {
    std::cout << "locogen-report 1\n";
    std::cout << "command: " << command << "\n";
    std::cout << "engine: " << engine_name << " " << engine_version << "\n";
}

void emit(const std::string& key, const std::string& value) {
    std::cout << key << ": " << value << "\n";
}

void note(const std::string& text) { std::cout << "# " << text << "\n"; }

std::string maximal_text(const SimplicialComplex& K) {
    std::string s;
    bool first = true;
    for (Mask m : K.maximal()) {
        if (!first) s += ",";
        s += mask_to_string(m);
        first = false;
    }
    return s.empty() ? "(none)" : s;
}

std::string cells_text(const std::vector<int>& cells) {
    std::string s = "{";
    for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(cells[k]);
    }
    return s + "}";
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void write_witness(const std::string& path, const Procedure& P) {
    write_text_file(path, procedure_to_json(P).dump(2) + "\n");
    emit("witness-file", path);
}

// ---------------------------------------------------------------------------
// verify: named checks over the library's characterization results, grouped
// in sections selectable from the command line.

struct CheckRun {
    bool all_pass = true;
    void check(const std::string& name, bool ok) {
        emit("check " + name, ok ? "pass" : "fail");
        if (!ok) all_pass = false;
    }
};

Procedure adjacent_ands() {
    std::vector<Letter> and_table = {0, 0, 0, 1};
    return Procedure({2, 2, 2, 2}, 3, 2, {{0, 1}, {1, 2}, {2, 3}},
                     {and_table, and_table, and_table});
}

bool same_complex_set(std::vector<SimplicialComplex> a, std::vector<SimplicialComplex> b) {
    auto key = [](const SimplicialComplex& K) { return K.maximal(); };
    std::vector<std::vector<Mask>> ka, kb;
    for (const auto& K : a) ka.push_back(key(K));
    for (const auto& K : b) kb.push_back(key(K));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

std::vector<SimplicialComplex> tree_complexes(int n) {
    std::vector<SimplicialComplex> out;
    for (const Graph& T : spanning_trees(n)) out.push_back(graph_as_complex(T));
    return out;
}

void section_2(CheckRun& run) {
    Procedure P = adjacent_ands();
    bool windows_ok = input_window(P, 0) == std::vector<int>{0, 1} &&
                      input_window(P, 1) == std::vector<int>{1, 2} &&
                      input_window(P, 2) == std::vector<int>{2, 3};
    run.check("2/windows", windows_ok);
    bool duals_ok = dual_window(P, 0) == std::vector<int>{0} &&
                    dual_window(P, 1) == std::vector<int>{0, 1} &&
                    dual_window(P, 2) == std::vector<int>{1, 2} &&
                    dual_window(P, 3) == std::vector<int>{2};
    run.check("2/dual-windows", duals_ok);
    run.check("2/comm-complex",
              comm_complex(P) == SimplicialComplex::from_maximal(3, {0b011, 0b110}));
    Language img = image(P);
    run.check("2/image", img.size() == 7 && !img.contains({1, 0, 1}));
}

void section_3_1(CheckRun& run) {
    run.check("3.1/ev3-minimal-trees",
              same_complex_set(minimal_complexes(ev(3)).minimal, tree_complexes(3)));
    run.check("3.1/ev4-minimal-trees",
              same_complex_set(minimal_complexes(ev(4)).minimal, tree_complexes(4)));
    run.check("3.1/od3-minimal-trees",
              same_complex_set(minimal_complexes(od(3)).minimal, tree_complexes(3)));
    auto path = SimplicialComplex::from_maximal(3, {0b011, 0b110});
    run.check("3.1/ev3-path-generates",
              decide_generates(ev(3), path).verdict == Verdict::generates);
    run.check("3.1/ev3-disconnected-refuted",
              decide_generates(ev(3), singletons_complex(3)).verdict ==
                  Verdict::does_not_generate);
}

void section_3_2(CheckRun& run) {
    run.check("3.2/nd3-boundary-refuted",
              decide_generates(nd(3, 2), boundary_complex(3)).verdict ==
                  Verdict::does_not_generate);
    run.check("3.2/nd4-boundary-refuted",
              decide_generates(nd(4, 2), boundary_complex(4)).verdict ==
                  Verdict::does_not_generate);
    run.check("3.2/nd3-three-letters-refuted",
              decide_generates(nd(3, 3), boundary_complex(3)).verdict ==
                  Verdict::does_not_generate);
    run.check("3.2/nd3-full-generates",
              decide_generates(nd(3, 2), full_complex(3)).verdict == Verdict::generates);
}

void section_3_3(CheckRun& run) {
    bool trees_ok = true;
    for (int n = 3; n <= 4 && trees_ok; ++n)
        for (const Graph& T : spanning_trees(n)) {
            auto K = graph_as_complex(T);
            if (!verify_generates(proc_nc_tree(T, 2), nc(n, 2), K)) trees_ok = false;
            if (decide_generates(nc(n, 2), K).verdict != Verdict::generates)
                trees_ok = false;
        }
    run.check("3.3/nc-trees-generate", trees_ok);
    run.check("3.3/nc-three-letters",
              verify_generates(proc_nc_tree(path_graph({0, 1, 2}), 3), nc(3, 3),
                               SimplicialComplex::from_maximal(3, {0b011, 0b110})));
    run.check("3.3/nc-disconnected-refuted",
              decide_generates(nc(3, 2), singletons_complex(3)).verdict ==
                  Verdict::does_not_generate);
}

void section_3_4(CheckRun& run) {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    run.check("3.4/card-ge-cycle-generates",
              decide_generates(card_ge(4, 2), graph_as_complex(c4)).verdict ==
                  Verdict::generates);
    run.check("3.4/card-ge-path-refuted",
              decide_generates(card_ge(4, 2), graph_as_complex(path_graph({0, 1, 2, 3})))
                      .verdict == Verdict::does_not_generate);
    run.check("3.4/card-le-minimal-triangle",
              same_complex_set(minimal_complexes(card_le(3, 1)).minimal,
                               {complete_graph_complex(3)}));
    Graph g0(3, {{0, 1}});
    run.check("3.4/independent-sets-minimal",
              same_complex_set(minimal_complexes(graph_independent(g0)).minimal,
                               {graph_as_complex(g0)}));
}

void section_3_5(CheckRun& run) {
    for (const char* name : {"one-or-all", "one-or-all-or-zero"}) {
        Language L = std::string(name) == "one-or-all" ? one_or_all(3) : one_or_all_or_zero(3);
        std::vector<SimplicialComplex> expected;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                expected.push_back(SimplicialComplex::from_maximal(
                    3, {full_mask(3) & ~bit(a), full_mask(3) & ~bit(b)}));
        run.check(std::string("3.5/") + name + "-minimal-pairs",
                  same_complex_set(minimal_complexes(L).minimal, expected));
    }
}

void section_4_1(CheckRun& run) {
    run.check("4.1/one-hot3-needs-full",
              same_complex_set(minimal_complexes(one_hot(3)).minimal, {full_complex(3)}));
    std::vector<SimplicialComplex> cones;
    for (int a = 0; a < 4; ++a) cones.push_back(apex_cone_complex(4, a));
    run.check("4.1/one-hot4-minimal-apex-cones",
              same_complex_set(minimal_complexes(one_hot(4)).minimal, cones));
}

void section_4_2(CheckRun& run) {
    run.check("4.2/eq4-parity-path",
              decide_generates(eq(4, 2), graph_as_complex(path_graph({0, 1, 2, 3})))
                      .verdict == Verdict::generates);
    run.check("4.2/eq5-parity-path",
              decide_generates(eq(5, 2), graph_as_complex(path_graph({0, 1, 2, 3, 4})))
                      .verdict == Verdict::generates);
    Language L = eq(4, 3);
    Graph fig2(4, {{0, 3}, {1, 3}, {0, 2}});
    Graph fig3(4, {{0, 1}, {0, 2}, {1, 3}});
    Graph fig4(4, {{0, 2}, {1, 2}, {1, 3}});
    run.check("4.2/fig2-refuted",
              decide_generates(L, graph_as_complex(fig2)).verdict ==
                  Verdict::does_not_generate);
    run.check("4.2/fig3-refuted",
              decide_generates(L, graph_as_complex(fig3)).verdict ==
                  Verdict::does_not_generate);
    run.check("4.2/fig4-generates",
              decide_generates(L, graph_as_complex(fig4)).verdict == Verdict::generates);
    int descendant = 0, generating = 0;
    bool descendant_ok = true;
    for (const Graph& T : spanning_trees(4)) {
        if (auto root = find_descendant_rooting(T)) {
            ++descendant;
            if (!verify_generates(proc_eq_descendant_tree(T, *root, 3), L,
                                  graph_as_complex(T)))
                descendant_ok = false;
        }
        if (decide_generates(L, graph_as_complex(T)).verdict == Verdict::generates)
            ++generating;
    }
    run.check("4.2/descendant-rootings-verify", descendant_ok && descendant == 12);
    run.check("4.2/thirteen-of-sixteen-trees", generating == 13);
}

void section_5(CheckRun& run) {
    auto path = SimplicialComplex::from_maximal(3, {0b011, 0b110});
    Language R = realizer(path);
    bool upset_ok = true;
    for (const SimplicialComplex& K : enumerate_complexes(3)) {
        bool expect = path.subset_of(K);
        if ((decide_generates(R, K).verdict == Verdict::generates) != expect)
            upset_ok = false;
    }
    run.check("5/realizer-up-set", upset_ok);
    run.check("5/chromatic-card-le",
              chromatic_decides(card_le(3, 1), complete_graph_complex(3)).verdict ==
                  Verdict::generates);
    run.check("5/chromatic-one-hot",
              chromatic_decides(one_hot(3), complete_graph_complex(3)).verdict ==
                  Verdict::does_not_generate);
    bool dichotomy_ok = true;
    for (const SimplicialComplex& K : enumerate_complexes(3))
        if (is_connected(input_complex(K, 2)) != !K.contains(full_mask(3)))
            dichotomy_ok = false;
    run.check("5/input-complex-dichotomy", dichotomy_ok);
}

// ---------------------------------------------------------------------------

int run_decide(const LanguageSource& ls, const ComplexSource& cs, double timeout,
               const std::string& cache_dir, const std::string& cnf_path,
               const std::string& witness_path) {
    Timer t;
    Language L = ls.resolve();
    SimplicialComplex K = cs.resolve(L.n());
    head("decide");
    emit("language", ls.echo());
    emit("complex", cs.echo());
    if (!cnf_path.empty()) {
        std::ofstream out(cnf_path);
        require(out.good(), "cannot write file: " + cnf_path);
        build_canonical_csp(L, K).export_dimacs(out);
        emit("cnf-file", cnf_path);
    }
    DecideOptions opts;
    opts.timeout_seconds = timeout;
    bool want_fresh = !witness_path.empty();
    if (!cache_dir.empty() && !want_fresh) {
        if (auto hit = cache_lookup(cache_dir, L, K)) {
            emit("verdict", to_string(hit->verdict));
            emit("method", hit->method);
            note("cache: hit");
            note("elapsed-ms: " + std::to_string(t.ms()));
            return 0;
        }
    }
    DecisionResult r = decide_generates(L, K, opts);
    emit("verdict", to_string(r.verdict));
    emit("method", r.method);
    if (r.witness) {
        emit("witness-inputs", cells_text(r.witness->input_sizes()));
        if (!witness_path.empty()) write_witness(witness_path, *r.witness);
    }
    if (r.certificate) {
        emit("certificate", r.certificate->kind);
        if (r.certificate->positions)
            emit("certificate-positions", mask_to_string(r.certificate->positions));
    }
    if (!cache_dir.empty() && r.verdict != Verdict::undecided) {
        cache_store(cache_dir, L, K, r.verdict, r.method);
        note("cache: stored");
    }
    note("elapsed-ms: " + std::to_string(t.ms()));
    return r.verdict == Verdict::undecided ? 2 : 0;
}

int run_minimal(const LanguageSource& ls, double timeout, bool no_symmetry) {
    Timer t;
    Language L = ls.resolve();
    head("minimal");
    emit("language", ls.echo());
    DecideOptions opts;
    opts.timeout_seconds = timeout;
    MinimalComplexesResult r = minimal_complexes(L, opts, !no_symmetry);
    emit("count", std::to_string(r.minimal.size()));
    emit("complete", r.complete ? "true" : "false");
    for (const SimplicialComplex& K : r.minimal) emit("minimal", maximal_text(K));
    note("elapsed-ms: " + std::to_string(t.ms()));
    return r.complete ? 0 : 2;
}

int run_windows(const std::string& proc_path) {
    Timer t;
    Procedure P = read_procedure_file(proc_path);
    head("windows");
    emit("procedure", "file=" + proc_path);
    emit("inputs", std::to_string(P.num_inputs()));
    emit("outputs", std::to_string(P.output_n()));
    for (int i = 0; i < P.output_n(); ++i)
        emit("window " + std::to_string(i), cells_text(input_window(P, i)));
    for (int j = 0; j < P.num_inputs(); ++j)
        emit("dual " + std::to_string(j), cells_text(dual_window(P, j)));
    emit("comm", maximal_text(comm_complex(P)));
    std::cout << "matrix:\n";
    std::istringstream rows(visibility_matrix_text(P));
    std::string row;
    while (std::getline(rows, row)) std::cout << "  " << row << "\n";
    note("elapsed-ms: " + std::to_string(t.ms()));
    return 0;
}

int run_chromatic(const LanguageSource& ls, const ComplexSource& cs,
                  const std::string& witness_path) {
    Timer t;
    Language L = ls.resolve();
    SimplicialComplex K = cs.resolve(L.n());
    head("chromatic");
    emit("language", ls.echo());
    emit("complex", cs.echo());
    ChromaticDecision r = chromatic_decides(L, K);
    emit("verdict", to_string(r.verdict));
    emit("method", "chromatic");
    if (r.verdict == Verdict::generates) {
        emit("witness-b", std::to_string(r.witness_b));
        if (r.witness && !witness_path.empty()) write_witness(witness_path, *r.witness);
    }
    note("elapsed-ms: " + std::to_string(t.ms()));
    return r.verdict == Verdict::undecided ? 2 : 0;
}

int run_export(const LanguageSource& ls, const ComplexSource& cs,
               const std::string& proc_path, const std::string& format,
               const std::string& out_path) {
    int sources = (ls.present() ? 1 : 0) + (cs.present() ? 1 : 0) +
                  (proc_path.empty() ? 0 : 1);
    require(sources == 1, "export needs exactly one of a language, a complex or a procedure");
    std::string payload;
    if (ls.present()) {
        Language L = ls.resolve();
        if (format == "json") {
            payload = language_to_json(L).dump(2) + "\n";
        } else if (format == "dot") {
            payload = chromatic_to_dot(output_complex(L), "L");
        } else {
            auto names = detail::effective_letter_names(L.alphabet_size(), L.letter_names());
            bool plain = detail::single_char_names(names);
            for (const Word& w : L.words())
                payload += detail::render_word(w, names, plain) + "\n";
        }
    } else if (cs.present()) {
        SimplicialComplex K = cs.resolve(ls.n);
        if (format == "json")
            payload = complex_to_json(K).dump(2) + "\n";
        else if (format == "dot")
            payload = complex_to_dot(K);
        else
            payload = maximal_text(K) + "\n";
    } else {
        Procedure P = read_procedure_file(proc_path);
        require(format != "dot", "procedures export as json or text");
        payload = format == "json" ? procedure_to_json(P).dump(2) + "\n"
                                   : visibility_matrix_text(P);
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
    } else {
        write_text_file(out_path, payload);
    }
    return 0;
}

int run_verify(const std::string& section) {
    Timer t;
    const std::vector<std::string> known = {"2",   "3.1", "3.2", "3.3", "3.4",
                                            "3.5", "4.1", "4.2", "5",   "all"};
    require(std::find(known.begin(), known.end(), section) != known.end(),
            "unknown section: " + section);
    head("verify-paper");
    emit("section", section);
    CheckRun run;
    auto want = [&](const char* s) { return section == "all" || section == s; };
    if (want("2")) section_2(run);
    if (want("3.1")) section_3_1(run);
    if (want("3.2")) section_3_2(run);
    if (want("3.3")) section_3_3(run);
    if (want("3.4")) section_3_4(run);
    if (want("3.5")) section_3_5(run);
    if (want("4.1")) section_4_1(run);
    if (want("4.2")) section_4_2(run);
    if (want("5")) section_5(run);
    emit("result", run.all_pass ? "pass" : "fail");
    note("elapsed-ms: " + std::to_string(t.ms()));
    return run.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide which communication complexes can generate a finite language"};
    app.require_subcommand(1);

    LanguageSource dec_lang, min_lang, chr_lang, exp_lang;
    ComplexSource dec_cmplx, chr_cmplx, exp_cmplx;
    double dec_timeout = 0, min_timeout = 0;
    bool min_no_symmetry = false;
    std::string cache_dir, cnf_path, dec_witness, chr_witness;
    std::string windows_proc, export_proc, export_format = "json", export_out;
    std::string verify_section = "all";

    CLI::App* dec = app.add_subcommand("decide", "decide one language/complex query");
    dec_lang.attach(dec);
    dec_cmplx.attach(dec);
    dec->add_option("--timeout-secs", dec_timeout, "solver time budget, 0 = unlimited");
    dec->add_option("--cache-dir", cache_dir, "directory for the decision cache")
        ->envname("LOCOGEN_CACHE_DIR");
    dec->add_option("--export-cnf", cnf_path, "also write the query as DIMACS CNF");
    dec->add_option("--witness-out", dec_witness, "write the witness procedure as JSON");

    CLI::App* mini = app.add_subcommand("minimal", "list all minimal generating complexes");
    min_lang.attach(mini);
    mini->add_option("--timeout-secs", min_timeout, "per-query time budget");
    mini->add_flag("--no-symmetry", min_no_symmetry, "do not exploit language symmetry");

    CLI::App* win = app.add_subcommand("windows", "show a procedure's communication structure");
    win->add_option("--procedure-file", windows_proc, "procedure JSON file")->required();

    CLI::App* chr = app.add_subcommand("chromatic", "decide via chromatic map search");
    chr_lang.attach(chr);
    chr_cmplx.attach(chr);
    chr->add_option("--witness-out", chr_witness, "write the witness procedure as JSON");

    CLI::App* exp = app.add_subcommand("export", "serialize an object to json, dot or text");
    exp_lang.attach(exp);
    exp_cmplx.attach(exp);
    exp->add_option("--procedure-file", export_proc, "procedure JSON file");
    exp->add_option("--format", export_format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    exp->add_option("--out", export_out, "output path, '-' or empty for stdout");

    CLI::App* ver = app.add_subcommand("verify-paper", "run the built-in result checks");
    ver->add_option("--section", verify_section,
                    "2, 3.1, 3.2, 3.3, 3.4, 3.5, 4.1, 4.2, 5 or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (dec->parsed())
            return run_decide(dec_lang, dec_cmplx, dec_timeout, cache_dir, cnf_path,
                              dec_witness);
        if (mini->parsed()) return run_minimal(min_lang, min_timeout, min_no_symmetry);
        if (win->parsed()) return run_windows(windows_proc);
        if (chr->parsed()) return run_chromatic(chr_lang, chr_cmplx, chr_witness);
        if (exp->parsed())
            return run_export(exp_lang, exp_cmplx, export_proc, export_format, export_out);
        if (ver->parsed()) return run_verify(verify_section);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
