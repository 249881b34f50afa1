#include <catch2/catch_amalgamated.hpp>
#include <locogen/families.hpp>
#include <locogen/language.hpp>

using namespace locogen;

TEST_CASE("languages store sorted unique words") {
    Language L(2, 3, {{2, 1}, {0, 0}, {2, 1}, {1, 2}});
    CHECK(L.size() == 3);
    CHECK(L.word(0) == Word{0, 0});
    CHECK(L.word(2) == Word{2, 1});
    CHECK(L.contains({1, 2}));
    CHECK(!L.contains({1, 1}));
    CHECK(L.index_of({2, 1}) == 2);
    CHECK(L.letters_at(0) == std::vector<Letter>{0, 1, 2});
    CHECK(L.letters_at(1) == std::vector<Letter>{0, 1, 2});
}

TEST_CASE("family sizes are as expected") {
    CHECK(full_language(3, 2).size() == 8);
    CHECK(ev(3).size() == 4);
    CHECK(od(3).size() == 4);
    CHECK(nd(3, 3).size() == 10);  // weak compositions: C(5,3)
    CHECK(nc(3, 2).size() == 6);
    CHECK(constants(4, 3).size() == 3);
    CHECK(card_ge(4, 2).size() == 11);
    CHECK(card_le(3, 1).size() == 4);
    CHECK(one_hot(4).size() == 4);
    CHECK(one_or_all(3).size() == 4);
    CHECK(one_or_all_or_zero(3).size() == 5);
    CHECK(eq(4, 3).size() == 57);  // 81 - 3*2*2*2 words avoiding repeats
    CHECK(eq(3, 2).size() == 6);
}

TEST_CASE("parity words") {
    Language E = ev(3);
    std::vector<Word> expect = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
    CHECK(E.words() == expect);
    CHECK(is_upwards_closed(card_ge(3, 2)));
    CHECK(is_downwards_closed(card_le(3, 1)));
    CHECK(!is_upwards_closed(E));
    CHECK(!is_downwards_closed(E));
}

TEST_CASE("projection reindexes ascending positions") {
    Language E = ev(3);
    Language P = project(E, std::vector<int>{0, 2});
    CHECK(P.n() == 2);
    CHECK(P.size() == 4);  // both parities survive
    Language Q = project(eq(3, 2), Mask{0b011});
    CHECK(Q.n() == 2);
    CHECK(Q.size() == 4);
    Language R = project(one_hot(3), Mask{0b110});
    CHECK(R.words() == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("independence of position pairs") {
    CHECK(independent_pair(full_language(2, 2), 0, 1));
    CHECK(!independent_pair(ev(2), 0, 1));
    // in ev(3) any pair is free once the third position is forgotten
    CHECK(independent_pair(ev(3), 0, 1));
    CHECK(!independent_pair(one_hot(3), 0, 1));
}

TEST_CASE("irreducible factorization") {
    // words 000,001,110,111: positions {0,1} tied, position {2} free
    Language L(3, 2, {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    auto blocks = irreducible_factorization(L);
    CHECK(blocks == std::vector<Mask>{0b011, 0b100});
    CHECK(is_irreducible(ev(3)));
    CHECK(is_irreducible(one_hot(3)));
    auto full_blocks = irreducible_factorization(full_language(4, 2));
    CHECK(full_blocks.size() == 4);
    CHECK(!is_irreducible(full_language(2, 2)));
}

TEST_CASE("automorphisms") {
    CHECK(automorphisms(one_hot(3)).size() == 6);
    CHECK(automorphisms(ev(4)).size() == 24);
    // adjacent equality on 3 positions only admits the reversal
    CHECK(automorphisms(eq(3, 2)).size() == 2);
    Language L(2, 2, {{0, 1}});
    CHECK(automorphisms(L).size() == 1);
}

TEST_CASE("action on languages") {
    Permutation g{{1, 0, 2}};
    Language L(3, 2, {{0, 1, 1}});
    Language M = act(g, L);
    CHECK(M.word(0) == Word{1, 0, 1});
    CHECK(act(g.inverse(), M) == L);
}

TEST_CASE("realizer language") {
    // a single edge on two vertices has three non-empty simplices
    auto K = SimplicialComplex::from_maximal(2, std::vector<Mask>{0b11});
    Language R = realizer(K);
    CHECK(R.n() == 2);
    CHECK(R.size() == 8);
    CHECK(R.alphabet_size() == 8);
    // boundary of the triangle: 6 non-empty simplices, 64 words
    auto B = boundary_complex(3);
    CHECK(realizer(B).size() == 64);
}
