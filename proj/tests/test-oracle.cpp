#include <random>  // for mt19937

#include "doctest.h"

#include "stephen/oracle.hpp"

#include "support/oracles.hpp"

using namespace stephen;
using stephen::test::make;
using stephen::test::word_of;

TEST_SUITE("oracle") {
  TEST_CASE("munn_tree examples") {
    auto aA = oracle::munn_tree(word_of("aA"));
    CHECK(aA.vertex_count() == 2);
    CHECK(aA.alpha() == aA.beta());

    auto ab = oracle::munn_tree(word_of("ab"));
    CHECK(ab.vertex_count() == 3);
    CHECK(ab.edge_count() == 2);
    CHECK(accepts(ab, word_of("ab")));

    auto star = oracle::munn_tree(word_of("aAbB"));
    CHECK(star.vertex_count() == 3);
    CHECK(star.alpha() == star.beta());
    CHECK(star.arcs(star.alpha()).size() == 2);

    CHECK(oracle::munn_tree(Word()).vertex_count() == 1);
  }

  TEST_CASE("free_reduce") {
    CHECK(oracle::free_reduce(word_of("aAb")) == word_of("b"));
    CHECK(oracle::free_reduce(word_of("abBA")) == Word());
    CHECK(oracle::free_reduce(word_of("aBA")) == word_of("aBA"));
  }

  TEST_CASE("munn trees are trees") {
    std::mt19937 rng(21);
    for (int sample = 0; sample < 300; ++sample) {
      auto w = test::random_word(rng, 3, 0, 14, true);
      auto t = oracle::munn_tree(w);
      CHECK(t.edge_count() + 1 == t.vertex_count());
      CHECK(t.is_deterministic());
      CHECK(accepts(t, w));
      CHECK(read(t, t.alpha(), oracle::free_reduce(w)) == t.beta());
    }
  }

  TEST_CASE("brute_force_equal examples") {
    auto comm = make("X: a b\nR: ab = ba");
    CHECK(oracle::brute_force_equal(word_of("ab"), word_of("ba"), comm, 10) == Answer::yes);
    CHECK(oracle::brute_force_equal(word_of("a"), word_of("aa"), comm, 10) == Answer::no);
    CHECK(oracle::brute_force_equal(word_of("aab"), word_of("aba"), comm, 20)
          == Answer::yes);

    oracle::BruteForce brute(comm, 20);
    CHECK(brute.closed(word_of("ab")));
    CHECK(brute.graph(word_of("ab")).vertices().size() == 4);
    CHECK(brute.member(word_of("abBAba"), word_of("ab")) == Answer::yes);
    CHECK(brute.member(word_of("a"), word_of("ab")) == Answer::no);

    // Depth 0 means no expansions at all: only the folded linear graph.
    oracle::BruteForce shallow(make("X: a b\nR: aba = b"), 0);
    CHECK_FALSE(shallow.closed(word_of("b")));
    CHECK(shallow.equal(word_of("a"), word_of("b")) == Answer::no);
    CHECK(shallow.equal(word_of("b"), word_of("bb")) == Answer::unknown);
  }
}
