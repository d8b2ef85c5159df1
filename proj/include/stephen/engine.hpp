#ifndef STEPHEN_ENGINE_HPP_
#define STEPHEN_ENGINE_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "json.hpp"          // for nlohmann::json
#include "presentation.hpp"  // for Presentation
#include "word-graph.hpp"    // for BirootedGraph, Vertex

// Stephen's procedure: P-expansions and the iteration that closes an
// approximate graph into a Schützenberger automaton.

namespace stephen {

  // Which side of the relation labels the existing path.
  enum class ReadSide { lhs, rhs };

  // A place where one side of a relation can be read from start to end but
  // the other side cannot.
  struct ExpansionSite {
    std::size_t relation_index = 0;
    ReadSide    direction      = ReadSide::lhs;
    Vertex      start          = 0;
    Vertex      end            = 0;

    bool operator==(ExpansionSite const&) const = default;
  };

  struct Budget {
    std::size_t max_rounds   = 64;
    std::size_t max_vertices = 100'000;
  };

  enum class ClosureStatus { closed, budget_exceeded };

  struct ClosureResult {
    ClosureStatus status = ClosureStatus::closed;
    // The Schützenberger automaton when closed, otherwise the approximation
    // from the last round that completed within budget.
    BirootedGraph graph;
    // Full P-expansions performed.
    std::size_t rounds = 0;
    // Vertex identifications across every fold of the run.
    std::size_t fold_events = 0;
    // Vertex count of the input, then after each completed round.
    std::vector<std::size_t> vertex_history;

    bool closed() const noexcept {
      return status == ClosureStatus::closed;
    }
  };

  // All expansion sites of a deterministic graph, ordered by the start
  // vertex's position in bfs_order, then relation index, then direction.
  // Throws PreconditionError if g is not deterministic.
  std::vector<ExpansionSite> find_expansions(BirootedGraph const& g,
                                             Presentation const&  p);

  // Sews a path for the unread side of the relation from site.start to
  // site.end. The result is not folded. Returns nullopt, leaving nothing
  // changed, when the site is stale: the unread side already labels a path
  // between the endpoints. Throws PreconditionError when the read side does
  // not label a path between them.
  std::optional<BirootedGraph> elementary_expansion(BirootedGraph const& g,
                                                    ExpansionSite const& site,
                                                    Presentation const&  p);

  enum class SiteOrder { canonical, reversed };

  struct RoundReport {
    BirootedGraph graph;
    std::size_t   sites  = 0;  // found at the start of the round
    std::size_t   sewn   = 0;
    std::size_t   stale  = 0;
    std::size_t   merges = 0;
    // Sewing stopped because the graph grew past the vertex limit. `graph`
    // is then the unchanged input.
    bool aborted = false;
  };

  // One full P-expansion: sews every site present at the start of the round
  // (skipping those gone stale), then folds. Sites that only appear during
  // the round wait for the next one.
  RoundReport expand_round(BirootedGraph const& g,
                           Presentation const&  p,
                           SiteOrder            order        = SiteOrder::canonical,
                           std::size_t          max_vertices = 0);

  BirootedGraph full_p_expansion(BirootedGraph const& g, Presentation const& p);

  // Iterates full P-expansions until no site remains or a budget limit is
  // hit. Throws PreconditionError if g is not deterministic or the budget has
  // a zero limit.
  ClosureResult close(BirootedGraph const& g,
                      Presentation const&  p,
                      Budget const&        budget = {});

  // close(fold(linear_graph(w)).final, p, budget), with the initial fold
  // counted in fold_events.
  ClosureResult schutzenberger_automaton(Word const&         w,
                                         Presentation const& p,
                                         Budget const&       budget = {});

  char const* to_string(ClosureStatus s) noexcept;

  // {"status", "rounds", "fold_events", "vertex_history"}
  nlohmann::json instrumentation_json(ClosureResult const& r);

}  // namespace stephen

#endif  // STEPHEN_ENGINE_HPP_
