#include "stephen/word-graph.hpp"

#include <algorithm>      // for lower_bound, sort, unique
#include <deque>          // for deque
#include <limits>         // for numeric_limits
#include <sstream>        // for ostringstream
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair, swap

#include "stephen/error.hpp"  // for PreconditionError, Error

namespace stephen {

  namespace {
    constexpr Vertex kUndefined = std::numeric_limits<Vertex>::max();

    // Union-find with union by size and path halving.
    class DisjointSets {
     public:
      explicit DisjointSets(std::size_t n) : _parent(n), _size(n, 1) {
        for (std::size_t i = 0; i < n; ++i) {
          _parent[i] = static_cast<Vertex>(i);
        }
      }

      Vertex find(Vertex x) {
        while (_parent[x] != x) {
          x = _parent[x] = _parent[_parent[x]];
        }
        return x;
      }

      // Returns (kept, absorbed) representatives; kept == absorbed if x and y
      // were already in the same class.
      std::pair<Vertex, Vertex> unite(Vertex x, Vertex y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return {x, x};
        }
        if (_size[x] < _size[y]) {
          std::swap(x, y);
        }
        _parent[y] = x;
        _size[x] += _size[y];
        return {x, y};
      }

     private:
      std::vector<Vertex>      _parent;
      std::vector<std::size_t> _size;
    };

    void insert_sorted(std::vector<Arc>& arcs, Arc a) {
      arcs.insert(std::lower_bound(arcs.begin(), arcs.end(), a), a);
    }

    void require_deterministic(BirootedGraph const& g, char const* who) {
      if (!g.is_deterministic()) {
        throw PreconditionError(std::string(who)
                                + ": the graph is not deterministic");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // BirootedGraph
  ////////////////////////////////////////////////////////////////////////

  BirootedGraph::BirootedGraph() : _arcs(1) {}

  Vertex BirootedGraph::add_vertex() {
    _arcs.emplace_back();
    return static_cast<Vertex>(_arcs.size() - 1);
  }

  bool BirootedGraph::add_edge(Vertex source, Letter x, Vertex target) {
    if (source >= vertex_count() || target >= vertex_count()) {
      throw PreconditionError("add_edge: vertex out of range");
    }
    Arc  forward{{x, false}, target};
    auto& out = _arcs[source];
    auto  it  = std::lower_bound(out.begin(), out.end(), forward);
    if (it != out.end() && *it == forward) {
      return false;
    }
    out.insert(it, forward);
    insert_sorted(_arcs[target], Arc{{x, true}, source});
    ++_edge_count;
    return true;
  }

  void BirootedGraph::set_roots(Vertex alpha, Vertex beta) {
    if (alpha >= vertex_count() || beta >= vertex_count()) {
      throw PreconditionError("set_roots: vertex out of range");
    }
    _alpha = alpha;
    _beta  = beta;
  }

  std::vector<Edge> BirootedGraph::edges() const {
    std::vector<Edge> result;
    result.reserve(_edge_count);
    for (Vertex v = 0; v < vertex_count(); ++v) {
      for (auto const& a : _arcs[v]) {
        if (!a.label.inverse) {
          result.push_back({v, a.label.letter, a.target});
        }
      }
    }
    return result;
  }

  std::optional<Vertex> BirootedGraph::step(Vertex v, SignedLetter x) const {
    auto const& out = _arcs[v];
    auto        it  = std::lower_bound(out.begin(), out.end(), Arc{x, 0});
    if (it != out.end() && it->label == x) {
      return it->target;
    }
    return std::nullopt;
  }

  bool BirootedGraph::is_deterministic() const noexcept {
    for (auto const& out : _arcs) {
      for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i - 1].label == out[i].label) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reading
  ////////////////////////////////////////////////////////////////////////

  BirootedGraph linear_graph(Word const& w) {
    BirootedGraph g;
    for (std::size_t i = 0; i < w.size(); ++i) {
      g.add_vertex();
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto const here = static_cast<Vertex>(i);
      if (w[i].inverse) {
        g.add_edge(here + 1, w[i].letter, here);
      } else {
        g.add_edge(here, w[i].letter, here + 1);
      }
    }
    g.set_roots(0, static_cast<Vertex>(w.size()));
    return g;
  }

  std::optional<Vertex> read(BirootedGraph const& g, Vertex from, Word const& w) {
    std::optional<Vertex> v = from;
    for (auto const& x : w) {
      v = g.step(*v, x);
      if (!v) {
        break;
      }
    }
    return v;
  }

  bool labels_path(BirootedGraph const& g,
                   Vertex               from,
                   Word const&          w,
                   Vertex               to) {
    std::vector<Vertex> current{from}, next;
    for (auto const& x : w) {
      next.clear();
      for (auto v : current) {
        auto out = g.arcs(v);
        auto it  = std::lower_bound(out.begin(), out.end(), Arc{x, 0});
        for (; it != out.end() && it->label == x; ++it) {
          next.push_back(it->target);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      std::swap(current, next);
      if (current.empty()) {
        return false;
      }
    }
    return std::find(current.begin(), current.end(), to) != current.end();
  }

  ////////////////////////////////////////////////////////////////////////
  // Folding
  ////////////////////////////////////////////////////////////////////////

  FoldReport fold(BirootedGraph const& g, FoldOrder order) {
    std::size_t const n = g.vertex_count();
    DisjointSets      classes(n);

    // Arcs of each class live at its representative; targets may be stale
    // and are resolved through `classes` when compared.
    std::vector<std::vector<Arc>> arcs(n);
    for (Vertex v = 0; v < n; ++v) {
      auto out = g.arcs(v);
      arcs[v].assign(out.begin(), out.end());
    }

    std::deque<std::pair<Vertex, Vertex>> pending;

    // Collapses equally labelled arcs at representative v, queueing the
    // identification of their targets.
    auto scan = [&](Vertex v) {
      auto& out = arcs[v];
      for (auto& a : out) {
        a.target = classes.find(a.target);
      }
      std::sort(out.begin(), out.end());
      std::size_t kept = 0;
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (kept > 0 && out[kept - 1].label == out[i].label) {
          if (out[kept - 1].target != out[i].target) {
            pending.emplace_back(out[kept - 1].target, out[i].target);
          }
          continue;
        }
        out[kept++] = out[i];
      }
      out.resize(kept);
    };

    if (order == FoldOrder::forward) {
      for (Vertex v = 0; v < n; ++v) {
        scan(v);
      }
    } else {
      for (Vertex v = static_cast<Vertex>(n); v-- > 0;) {
        scan(v);
      }
    }

    std::size_t merges = 0;
    while (!pending.empty()) {
      std::pair<Vertex, Vertex> next;
      if (order == FoldOrder::forward) {
        next = pending.front();
        pending.pop_front();
      } else {
        next = pending.back();
        pending.pop_back();
      }
      auto [kept, absorbed] = classes.unite(next.first, next.second);
      if (kept == absorbed) {
        continue;
      }
      ++merges;
      auto& into = arcs[kept];
      into.insert(into.end(), arcs[absorbed].begin(), arcs[absorbed].end());
      arcs[absorbed].clear();
      arcs[absorbed].shrink_to_fit();
      scan(kept);
    }

    // Rebuild over representatives with dense ids.
    std::vector<Vertex> id(n, kUndefined);
    BirootedGraph       quotient;
    bool                first = true;
    for (Vertex v = 0; v < n; ++v) {
      if (classes.find(v) == v) {
        id[v] = first ? 0 : quotient.add_vertex();
        first = false;
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      for (auto const& a : arcs[v]) {
        if (!a.label.inverse) {
          quotient.add_edge(id[v], a.label.letter, id[classes.find(a.target)]);
        }
      }
    }
    quotient.set_roots(id[classes.find(g.alpha())], id[classes.find(g.beta())]);
    return {merges, canonical_form(quotient)};
  }

  bool accepts(BirootedGraph const& g, Word const& w) {
    require_deterministic(g, "accepts");
    auto end = read(g, g.alpha(), w);
    return end && *end == g.beta();
  }

  bool isomorphic(BirootedGraph const& g1, BirootedGraph const& g2) {
    require_deterministic(g1, "isomorphic");
    require_deterministic(g2, "isomorphic");
    if (g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()) {
      return false;
    }
    std::vector<Vertex> image(g1.vertex_count(), kUndefined);
    std::vector<Vertex> preimage(g2.vertex_count(), kUndefined);
    std::vector<Vertex> queue{g1.alpha()};
    image[g1.alpha()]    = g2.alpha();
    preimage[g2.alpha()] = g1.alpha();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex const v    = queue[head];
      auto         out1 = g1.arcs(v);
      auto         out2 = g2.arcs(image[v]);
      if (out1.size() != out2.size()) {
        return false;
      }
      for (std::size_t i = 0; i < out1.size(); ++i) {
        if (out1[i].label != out2[i].label) {
          return false;
        }
        Vertex const s = out1[i].target, t = out2[i].target;
        if (image[s] == kUndefined && preimage[t] == kUndefined) {
          image[s]    = t;
          preimage[t] = s;
          queue.push_back(s);
        } else if (image[s] != t || preimage[t] != s) {
          return false;
        }
      }
    }
    return queue.size() == g1.vertex_count() && image[g1.beta()] == g2.beta();
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical numbering and serialization
  ////////////////////////////////////////////////////////////////////////

  std::vector<Vertex> bfs_order(BirootedGraph const& g) {
    std::vector<Vertex> order;
    std::vector<bool>   seen(g.vertex_count(), false);
    order.reserve(g.vertex_count());
    auto visit_from = [&](Vertex root) {
      seen[root] = true;
      std::size_t head = order.size();
      order.push_back(root);
      for (; head < order.size(); ++head) {
        // Arcs are sorted by (letter, sign, target).
        for (auto const& a : g.arcs(order[head])) {
          if (!seen[a.target]) {
            seen[a.target] = true;
            order.push_back(a.target);
          }
        }
      }
    };
    visit_from(g.alpha());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!seen[v]) {
        visit_from(v);
      }
    }
    return order;
  }

  BirootedGraph canonical_form(BirootedGraph const& g) {
    auto                order = bfs_order(g);
    std::vector<Vertex> id(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
      id[order[i]] = static_cast<Vertex>(i);
    }
    BirootedGraph result;
    for (std::size_t i = 1; i < order.size(); ++i) {
      result.add_vertex();
    }
    for (auto const& e : g.edges()) {
      result.add_edge(id[e.source], e.letter, id[e.target]);
    }
    result.set_roots(id[g.alpha()], id[g.beta()]);
    return result;
  }

  std::string to_dot(BirootedGraph const& g, Alphabet const& alphabet) {
    auto const         c = canonical_form(g);
    std::ostringstream out;
    out << "digraph {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
      out << "  " << v;
      if (v == c.alpha() && v == c.beta()) {
        out << " [shape=box, peripheries=2]";
      } else if (v == c.alpha()) {
        out << " [shape=box]";
      } else if (v == c.beta()) {
        out << " [shape=doublecircle]";
      }
      out << ";\n";
    }
    for (auto const& e : c.edges()) {
      out << "  " << e.source << " -> " << e.target << " [label=\""
          << alphabet.name(e.letter) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  nlohmann::json to_json(BirootedGraph const& g, Alphabet const& alphabet) {
    auto const     c = canonical_form(g);
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
      vertices.push_back(v);
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto const& e : c.edges()) {
      edges.push_back({e.source, alphabet.name(e.letter), e.target});
    }
    return {{"alpha", c.alpha()},
            {"beta", c.beta()},
            {"vertices", std::move(vertices)},
            {"edges", std::move(edges)}};
  }

  BirootedGraph graph_from_json(nlohmann::json const& j, Alphabet const& alphabet) {
    try {
      auto const& vertices = j.at("vertices");
      if (!vertices.is_array() || vertices.empty()) {
        throw Error("graph JSON: 'vertices' must be a non-empty array");
      }
      std::unordered_map<std::uint64_t, Vertex> id;
      BirootedGraph                             g;
      for (auto const& v : vertices) {
        auto key = v.get<std::uint64_t>();
        if (id.contains(key)) {
          throw Error("graph JSON: duplicate vertex " + std::to_string(key));
        }
        id.emplace(key, id.empty() ? 0 : g.add_vertex());
      }
      auto lookup = [&id](nlohmann::json const& v) {
        auto it = id.find(v.get<std::uint64_t>());
        if (it == id.end()) {
          throw Error("graph JSON: unknown vertex " + v.dump());
        }
        return it->second;
      };
      for (auto const& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) {
          throw Error("graph JSON: edges must be [source, letter, target]");
        }
        auto letter = alphabet.find(e[1].get<std::string>());
        if (!letter) {
          throw Error("graph JSON: unknown letter " + e[1].dump());
        }
        g.add_edge(lookup(e[0]), *letter, lookup(e[2]));
      }
      g.set_roots(lookup(j.at("alpha")), lookup(j.at("beta")));
      return g;
    } catch (nlohmann::json::exception const& e) {
      throw Error(std::string("graph JSON: ") + e.what());
    }
  }

}  // namespace stephen
