#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chromatic.hpp"
#include "version.hpp"

namespace locogen {

// Serialization for the three core objects, DOT renderings, the visibility
// matrix, and the on-disk decision cache. All formats are deterministic:
// serializing equal objects yields identical bytes, which the cache relies
// on for its keys.

namespace detail {

inline std::vector<std::string> effective_letter_names(int asize,
                                                       const std::vector<std::string>& names) {
    if (!names.empty()) return names;
    std::vector<std::string> out;
    for (int a = 0; a < asize; ++a) out.push_back(std::to_string(a));
    return out;
}

inline bool single_char_names(const std::vector<std::string>& names) {
    for (const std::string& s : names)
        if (s.size() != 1) return false;
    return true;
}

inline std::string render_word(const Word& w, const std::vector<std::string>& names,
                               bool plain) {
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!plain && k > 0) out += '.';
        out += names[w[k]];
    }
    return out;
}

}  // namespace detail

// Language file: {"n": 3, "alphabet": ["0","1"], "words": ["010","001"]}.
// Words are symbol concatenations when every symbol is a single character,
// and '.'-separated otherwise.
inline nlohmann::ordered_json language_to_json(const Language& L) {
    auto names = detail::effective_letter_names(L.alphabet_size(), L.letter_names());
    bool plain = detail::single_char_names(names);
    nlohmann::ordered_json j;
    j["n"] = L.n();
    j["alphabet"] = names;
    std::vector<std::string> ws;
    for (const Word& w : L.words()) ws.push_back(detail::render_word(w, names, plain));
    j["words"] = ws;
    return j;
}

inline Language language_from_json(const nlohmann::json& j) {
    require(j.contains("n") && j.contains("alphabet") && j.contains("words"),
            "language file needs n, alphabet and words");
    int n = j.at("n").get<int>();
    std::vector<std::string> names =
        j.at("alphabet").get<std::vector<std::string>>();
    require(!names.empty(), "alphabet must not be empty");
    bool plain = detail::single_char_names(names);
    std::vector<Word> words;
    for (const auto& item : j.at("words")) {
        std::string s = item.get<std::string>();
        Word w;
        std::vector<std::string> parts;
        if (plain) {
            for (char c : s) parts.emplace_back(1, c);
        } else {
            std::istringstream in(s);
            std::string tok;
            while (std::getline(in, tok, '.')) parts.push_back(tok);
        }
        for (const std::string& p : parts) {
            auto it = std::find(names.begin(), names.end(), p);
            require(it != names.end(), "word uses a symbol outside the alphabet");
            w.push_back(static_cast<Letter>(it - names.begin()));
        }
        require(static_cast<int>(w.size()) == n, "word length differs from n");
        words.push_back(std::move(w));
    }
    int asize = static_cast<int>(names.size());
    return Language(n, asize, std::move(words), std::move(names));
}

// Complex file: {"n": 4, "maximal": [[0,1],[1,2],[2,3]]}. An empty list means
// the complex with no simplices; [[]] means the one whose only simplex is the
// empty set.
inline nlohmann::ordered_json complex_to_json(const SimplicialComplex& K) {
    nlohmann::ordered_json j;
    j["n"] = K.n();
    std::vector<std::vector<int>> sets;
    for (Mask m : K.maximal()) sets.push_back(mask_to_vertices(m));
    j["maximal"] = sets;
    return j;
}

inline SimplicialComplex complex_from_json(const nlohmann::json& j) {
    require(j.contains("n") && j.contains("maximal"), "complex file needs n and maximal");
    int n = j.at("n").get<int>();
    std::vector<Mask> sets;
    for (const auto& item : j.at("maximal")) {
        Mask m = 0;
        for (const auto& v : item) {
            int i = v.get<int>();
            require(i >= 0 && i < n, "simplex vertex out of range");
            m |= bit(i);
        }
        sets.push_back(m);
    }
    return induced_complex(n, sets);
}

// Procedure file: input cell sizes, output arity and alphabet, one window and
// one flat rule table per output. Rule tables are indexed mixed-radix with
// the first window cell least significant, matching Procedure::eval.
inline nlohmann::ordered_json procedure_to_json(const Procedure& P) {
    nlohmann::ordered_json j;
    j["inputs"] = P.input_sizes();
    j["n"] = P.output_n();
    j["alphabet_size"] = P.output_alphabet();
    std::vector<std::vector<int>> windows;
    std::vector<std::vector<int>> rules;
    for (int i = 0; i < P.output_n(); ++i) {
        windows.push_back(P.declared_window(i));
        std::vector<int> flat;
        for (Letter a : P.rule_table(i)) flat.push_back(static_cast<int>(a));
        rules.push_back(std::move(flat));
    }
    j["windows"] = windows;
    j["rules"] = rules;
    return j;
}

inline Procedure procedure_from_json(const nlohmann::json& j) {
    require(j.contains("inputs") && j.contains("n") && j.contains("alphabet_size") &&
                j.contains("windows") && j.contains("rules"),
            "procedure file needs inputs, n, alphabet_size, windows and rules");
    std::vector<int> inputs = j.at("inputs").get<std::vector<int>>();
    int n = j.at("n").get<int>();
    int asize = j.at("alphabet_size").get<int>();
    std::vector<std::vector<int>> windows =
        j.at("windows").get<std::vector<std::vector<int>>>();
    std::vector<std::vector<Letter>> rules;
    for (const auto& table : j.at("rules")) {
        std::vector<Letter> t;
        for (const auto& v : table) t.push_back(static_cast<Letter>(v.get<int>()));
        rules.push_back(std::move(t));
    }
    return Procedure(std::move(inputs), n, asize, std::move(windows), std::move(rules));
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), "cannot write file: " + path);
    out << text;
}

inline Language read_language_file(const std::string& path) {
    return language_from_json(nlohmann::json::parse(read_text_file(path)));
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    return complex_from_json(nlohmann::json::parse(read_text_file(path)));
}

inline Procedure read_procedure_file(const std::string& path) {
    return procedure_from_json(nlohmann::json::parse(read_text_file(path)));
}

// DOT rendering of a complex: every vertex becomes a node, 1-simplices become
// edges, and each higher-dimensional maximal simplex annotates the edges of
// its clique so the grouping survives in the flat graph format.
inline std::string complex_to_dot(const SimplicialComplex& K,
                                  const std::string& name = "K") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle];\n";
    for (int i = 0; i < K.n(); ++i) out << "  v" << i << ";\n";
    std::vector<std::pair<int, int>> plain = K.edges();
    std::vector<std::pair<std::pair<int, int>, std::string>> annotated;
    for (Mask m : K.maximal()) {
        if (popcount(m) < 3) continue;
        std::vector<int> vs = mask_to_vertices(m);
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                std::pair<int, int> e{vs[a], vs[b]};
                auto it = std::find(plain.begin(), plain.end(), e);
                if (it != plain.end()) plain.erase(it);
                bool seen = false;
                for (auto& [f, ann] : annotated)
                    if (f == e) {
                        ann += " " + mask_to_string(m);
                        seen = true;
                        break;
                    }
                if (!seen) annotated.emplace_back(e, mask_to_string(m));
            }
    }
    for (auto [a, b] : plain) out << "  v" << a << " -- v" << b << ";\n";
    for (const auto& [e, ann] : annotated)
        out << "  v" << e.first << " -- v" << e.second << " [simplex=\"" << ann
            << "\"];\n";
    out << "}\n";
    return out.str();
}

// DOT rendering of a chromatic complex: one node per vertex, filled with a
// per-color palette entry, labeled by the vertex text; edges are the pairs
// sharing a simplex.
inline std::string chromatic_to_dot(const ChromaticComplex& C,
                                    const std::string& name = "X") {
    static const char* palette[] = {"white",     "gray70",    "lightblue",
                                    "palegreen", "lightpink", "khaki",
                                    "orange",    "plum",      "lightcyan",
                                    "tan"};
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [style=filled];\n";
    for (int v = 0; v < C.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << C.vertex_text()[v] << "\", fillcolor="
            << palette[C.vertices()[v].first % 10] << "];\n";
    std::vector<std::pair<int, int>> edges;
    for (const std::vector<int>& s : C.simplices())
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = a + 1; b < s.size(); ++b)
                edges.emplace_back(std::min(s[a], s[b]), std::max(s[a], s[b]));
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [a, b] : edges) out << "  v" << a << " -- v" << b << ";\n";
    out << "}\n";
    return out.str();
}

// The visibility diagram as a text matrix: one column per input cell, one row
// per output cell, a filled square where the output sees the input.
inline std::string visibility_matrix_text(const Procedure& P) {
    int cells = P.num_inputs();
    int n = P.output_n();
    std::vector<Mask> wins(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : input_window(P, i)) wins[i] |= bit(j);
    std::ostringstream out;
    out << "    ";
    for (int j = 0; j < cells; ++j) out << " " << j % 10;
    out << "\n";
    for (int i = 0; i < n; ++i) {
        std::string row = std::to_string(i);
        out << std::string(4 - std::min<std::size_t>(4, row.size()), ' ') << row;
        for (int j = 0; j < cells; ++j)
            out << " " << (mask_contains(wins[i], j) ? '#' : '.');
        out << "\n";
    }
    return out.str();
}

// Decision cache: one JSON file per query, named by a 64-bit FNV-1a hash of
// the canonical key. The key joins the canonical serializations of the
// language and the complex with the engine version, so stale engines never
// serve each other's verdicts. Only decisive verdicts are stored.

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string cache_key(const Language& L, const SimplicialComplex& K) {
    return language_to_json(L).dump() + "|" + complex_to_json(K).dump() + "|" +
           engine_version;
}

inline std::string cache_path(const std::string& dir, const std::string& key) {
    std::ostringstream name;
    name << std::hex << fnv1a64(key);
    return (std::filesystem::path(dir) / (name.str() + ".json")).string();
}

}  // namespace detail

struct CachedDecision {
    Verdict verdict = Verdict::undecided;
    std::string method;
};

inline std::optional<CachedDecision> cache_lookup(const std::string& dir,
                                                  const Language& L,
                                                  const SimplicialComplex& K) {
    std::string key = detail::cache_key(L, K);
    std::string path = detail::cache_path(dir, key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(read_text_file(path), nullptr, false);
    if (j.is_discarded() || !j.contains("key") || j.at("key").get<std::string>() != key)
        return std::nullopt;
    CachedDecision out;
    std::string v = j.at("verdict").get<std::string>();
    out.verdict = v == "generates" ? Verdict::generates : Verdict::does_not_generate;
    out.method = j.value("method", std::string{});
    return out;
}

inline void cache_store(const std::string& dir, const Language& L,
                        const SimplicialComplex& K, Verdict verdict,
                        const std::string& method) {
    if (verdict == Verdict::undecided) return;
    std::string key = detail::cache_key(L, K);
    std::filesystem::create_directories(dir);
    nlohmann::ordered_json j;
    j["key"] = key;
    j["verdict"] = to_string(verdict);
    j["method"] = method;
    write_text_file(detail::cache_path(dir, key), j.dump(2) + "\n");
}

}  // namespace locogen
