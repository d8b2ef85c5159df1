#ifndef STEPHEN_ORACLE_HPP_
#define STEPHEN_ORACLE_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <map>      // for map
#include <set>      // for set
#include <tuple>    // for tuple

#include "decision.hpp"      // for Answer
#include "presentation.hpp"  // for Presentation
#include "word-graph.hpp"    // for BirootedGraph
#include "word.hpp"          // for Word

// Slow reference implementations for testing the engine against. Nothing in
// here calls fold(), expand_round() or close().

namespace stephen::oracle {

  // Munn tree of w, built from the free reductions of the prefixes of w:
  // the vertices are the reduced prefixes, alpha is the empty word and beta
  // is the reduced form of w.
  BirootedGraph munn_tree(Word const& w);

  // Free reduction in the free group on the alphabet.
  Word free_reduce(Word const& w);

  // Inverse word graph as a bare set of (from, label, to) arcs holding both
  // orientations of every edge. Vertex ids are never reused.
  struct ArcSetGraph {
    int                                           alpha       = 0;
    int                                           beta        = 0;
    int                                           next_vertex = 1;
    std::set<std::tuple<int, std::uint32_t, int>> arcs;

    std::set<int> vertices() const;
  };

  // Stephen's procedure one elementary expansion at a time, folding
  // naively after each step. `depth` bounds the number of expansions per
  // word. Runs are cached per word.
  class BruteForce {
   public:
    BruteForce(Presentation p, std::size_t depth);

    // candidate in L(target)?
    Answer member(Word const& candidate, Word const& target);

    Answer equal(Word const& u, Word const& v);

    // Whether the run for w reached a closed graph within depth.
    bool closed(Word const& w);

    ArcSetGraph const& graph(Word const& w);

   private:
    struct Run {
      ArcSetGraph graph;
      bool        closed = false;
    };
    Run const& run(Word const& w);

    Presentation         _presentation;
    std::size_t          _depth;
    std::map<Word, Run> _runs;
  };

  Answer brute_force_equal(Word const&         u,
                           Word const&         v,
                           Presentation const& p,
                           std::size_t         depth);

}  // namespace stephen::oracle

#endif  // STEPHEN_ORACLE_HPP_
