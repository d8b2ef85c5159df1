#ifndef STEPHEN_WORD_GRAPH_HPP_
#define STEPHEN_WORD_GRAPH_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "json.hpp"  // for nlohmann::json
#include "word.hpp"  // for Word, Letter, SignedLetter, Alphabet

namespace stephen {

  using Vertex = std::uint32_t;

  // A positively oriented edge source --letter--> target. The inverse edge
  // target --letter⁻¹--> source is implied.
  struct Edge {
    Vertex source;
    Letter letter;
    Vertex target;

    auto operator<=>(Edge const&) const = default;
  };

  // One outgoing half of an edge as seen from a vertex.
  struct Arc {
    SignedLetter label;
    Vertex       target;

    auto operator<=>(Arc const&) const = default;
  };

  // Birooted inverse word graph (alpha, Γ, beta). Vertices are 0, ..., n-1.
  // Every edge is stored once as an Edge and appears as two Arcs: the
  // positive arc at its source and the inverse arc at its target. Arcs at a
  // vertex are kept sorted by label, then target.
  class BirootedGraph {
   public:
    // A single vertex which is both roots: the graph of the empty word.
    BirootedGraph();

    Vertex add_vertex();

    // Adds source --x--> target. Adding an edge that is already present is a
    // no-op; returns whether the edge was new.
    bool add_edge(Vertex source, Letter x, Vertex target);

    void set_roots(Vertex alpha, Vertex beta);

    Vertex alpha() const noexcept {
      return _alpha;
    }
    Vertex beta() const noexcept {
      return _beta;
    }
    std::size_t vertex_count() const noexcept {
      return _arcs.size();
    }
    std::size_t edge_count() const noexcept {
      return _edge_count;
    }

    std::span<Arc const> arcs(Vertex v) const {
      return _arcs.at(v);
    }

    // Positive edges, sorted.
    std::vector<Edge> edges() const;

    // Target of the first x-labelled arc at v, if any. On a deterministic
    // graph this is the unique one.
    std::optional<Vertex> step(Vertex v, SignedLetter x) const;

    // No vertex has two arcs with the same label.
    bool is_deterministic() const noexcept;

    bool operator==(BirootedGraph const&) const = default;

   private:
    std::vector<std::vector<Arc>> _arcs;
    std::size_t                   _edge_count = 0;
    Vertex                        _alpha      = 0;
    Vertex                        _beta       = 0;
  };

  // The chain alpha = 0, 1, ..., |w| = beta spelling w. An inverse letter
  // contributes the reversed positive edge.
  BirootedGraph linear_graph(Word const& w);

  // Follows w from `from` in a deterministic graph.
  std::optional<Vertex> read(BirootedGraph const& g, Vertex from, Word const& w);

  // Whether some path labelled w runs from `from` to `to`. Works on graphs
  // that are not deterministic, by tracking the set of reachable vertices.
  bool labels_path(BirootedGraph const& g,
                   Vertex               from,
                   Word const&          w,
                   Vertex               to);

  ////////////////////////////////////////////////////////////////////////
  // Folding
  ////////////////////////////////////////////////////////////////////////

  // Order in which pending identifications are processed. The result is the
  // same up to isomorphism either way; the choice exists so that this can be
  // tested.
  enum class FoldOrder { forward, reverse };

  struct FoldReport {
    std::size_t   merges = 0;
    BirootedGraph final;
  };

  // Identifies the targets of equally labelled arcs until the graph is
  // deterministic. The result is in canonical form (see canonical_form).
  FoldReport fold(BirootedGraph const& g, FoldOrder order = FoldOrder::forward);

  // Reading w from alpha is defined everywhere and ends at beta. Throws
  // PreconditionError if g is not deterministic.
  bool accepts(BirootedGraph const& g, Word const& w);

  // Root-preserving, label-preserving isomorphism of deterministic graphs.
  // Throws PreconditionError if either graph is not deterministic.
  bool isomorphic(BirootedGraph const& g1, BirootedGraph const& g2);

  ////////////////////////////////////////////////////////////////////////
  // Canonical numbering and serialization
  ////////////////////////////////////////////////////////////////////////

  // Vertices in breadth-first order from alpha, exploring arcs by letter
  // index and then sign (positive first). Unreachable vertices, if any,
  // follow in id order.
  std::vector<Vertex> bfs_order(BirootedGraph const& g);

  // g renumbered by bfs_order, so alpha is always 0.
  BirootedGraph canonical_form(BirootedGraph const& g);

  // Graphviz. alpha is drawn as a box, beta as a double circle, and a vertex
  // that is both as a double box.
  std::string to_dot(BirootedGraph const& g, Alphabet const& alphabet);

  // {"alpha": id, "beta": id, "vertices": [...], "edges": [[src, "x", dst]]}
  // using the canonical numbering.
  nlohmann::json to_json(BirootedGraph const& g, Alphabet const& alphabet);

  // Inverse of to_json. Throws Error on malformed input.
  BirootedGraph graph_from_json(nlohmann::json const& j, Alphabet const& alphabet);

}  // namespace stephen

#endif  // STEPHEN_WORD_GRAPH_HPP_
