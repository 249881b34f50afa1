#include <catch2/catch_amalgamated.hpp>
#include <locogen/families.hpp>
#include <locogen/procedure.hpp>

using namespace locogen;

namespace {

// Three ANDs of adjacent inputs: f(a,b,c,d) = (ab, bc, cd).
Procedure adjacent_ands() {
    std::vector<Letter> and_table = {0, 0, 0, 1};
    return Procedure({2, 2, 2, 2}, 3, 2, {{0, 1}, {1, 2}, {2, 3}},
                     {and_table, and_table, and_table});
}

}  // namespace

TEST_CASE("evaluation uses the first window cell as the fastest digit") {
    Procedure P({2, 3}, 1, 6, {{0, 1}}, {{0, 1, 2, 3, 4, 5}});
    CHECK(P.eval({0, 0}) == Word{0});
    CHECK(P.eval({1, 0}) == Word{1});
    CHECK(P.eval({0, 1}) == Word{2});
    CHECK(P.eval({1, 2}) == Word{5});
}

TEST_CASE("adjacent ands: image") {
    Procedure P = adjacent_ands();
    Language img = image(P);
    CHECK(img.size() == 7);  // everything except 101
    CHECK(img.contains({1, 1, 1}));
    CHECK(img.contains({0, 1, 0}));
    CHECK(!img.contains({1, 0, 1}));
}

TEST_CASE("adjacent ands: windows and duals") {
    Procedure P = adjacent_ands();
    CHECK(input_window(P, 0) == std::vector<int>{0, 1});
    CHECK(input_window(P, 1) == std::vector<int>{1, 2});
    CHECK(input_window(P, 2) == std::vector<int>{2, 3});
    CHECK(dual_window(P, 0) == std::vector<int>{0});
    CHECK(dual_window(P, 1) == std::vector<int>{0, 1});
    CHECK(dual_window(P, 2) == std::vector<int>{1, 2});
    CHECK(dual_window(P, 3) == std::vector<int>{2});
    CHECK(visibility(P).size() == 6);
}

TEST_CASE("adjacent ands: up-sets and communication complex") {
    Procedure P = adjacent_ands();
    CHECK(up_set(P, 0b011) == std::vector<int>{1});
    CHECK(up_set(P, 0b110) == std::vector<int>{2});
    CHECK(up_set(P, 0b101) == std::vector<int>{});
    CHECK(up_set(P, 0) == std::vector<int>{0, 1, 2, 3});
    auto K = comm_complex(P);
    CHECK(K.maximal() == std::vector<Mask>{0b011, 0b110});
}

TEST_CASE("declared windows wider than the true ones shrink") {
    // the table ignores the second declared cell
    Procedure P({2, 2}, 1, 2, {{0, 1}}, {{0, 1, 0, 1}});
    CHECK(input_window(P, 0) == std::vector<int>{0});
    // and a constant cell has an empty window
    Procedure C({2, 2}, 1, 2, {{0, 1}}, {{1, 1, 1, 1}});
    CHECK(input_window(C, 0).empty());
    CHECK(comm_complex(C) == SimplicialComplex::empty(1));
}

TEST_CASE("verify_generates checks image and communication") {
    Procedure P = adjacent_ands();
    Language img = image(P);
    auto K = SimplicialComplex::from_maximal(3, std::vector<Mask>{0b011, 0b110});
    CHECK(verify_generates(P, img, K));
    CHECK(verify_generates(P, img, full_complex(3)));
    auto small = SimplicialComplex::from_maximal(3, std::vector<Mask>{0b011, 0b100});
    CHECK(!verify_generates(P, img, small));
    CHECK(!verify_generates(P, full_language(3, 2), full_complex(3)));
}

TEST_CASE("composition evaluates outer after inner") {
    // inner: two cells, identity and negation
    Procedure g({2, 2}, 2, 2, {{0}, {1}}, {{0, 1}, {1, 0}});
    // outer: single AND of both cells
    Procedure f({2, 2}, 1, 2, {{0, 1}}, {{0, 0, 0, 1}});
    Procedure h = compose(f, g);
    CHECK(h.eval({1, 0}) == Word{1});  // g gives (1, 1)
    CHECK(h.eval({1, 1}) == Word{0});
    CHECK(h.declared_window(0) == std::vector<int>{0, 1});
}

TEST_CASE("pushforward of input complexes") {
    Procedure P = adjacent_ands();
    auto K_in = SimplicialComplex::from_maximal(4, std::vector<Mask>{0b0011, 0b1100});
    auto out = pushforward(P, K_in);
    // {a,b} reaches cells {0,1}; {c,d} reaches cells {1,2}
    CHECK(out.maximal() == std::vector<Mask>{0b011, 0b110});
}

TEST_CASE("image under a letterwise map") {
    // swap letters on the first position, keep the second
    Procedure P({2, 2}, 2, 2, {{0}, {1}}, {{1, 0}, {0, 1}});
    Language L(2, 2, {{0, 0}, {0, 1}});
    Language M = image_under_map(L, P);
    CHECK(M.words() == std::vector<Word>{{1, 0}, {1, 1}});
}

TEST_CASE("constant procedures have the empty communication complex") {
    Procedure P({3}, 2, 2, {{}, {}}, {{1}, {0}});
    CHECK(image(P).size() == 1);
    CHECK(comm_complex(P) == SimplicialComplex::empty(2));
    CHECK(up_set(P, 0b11) == std::vector<int>{});
}
