#include "stephen/oracle.hpp"

#include <climits>   // for INT_MIN
#include <optional>  // for optional
#include <vector>    // for vector

#include "stephen/error.hpp"  // for PreconditionError

namespace stephen::oracle {

  Word free_reduce(Word const& w) {
    std::vector<SignedLetter> stack;
    for (auto const& x : w) {
      if (!stack.empty() && stack.back() == x.inverted()) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return Word(std::move(stack));
  }

  BirootedGraph munn_tree(Word const& w) {
    BirootedGraph        tree;
    std::map<Word, Vertex> vertex_of;
    Word                 prefix;
    vertex_of.emplace(prefix, 0);
    for (auto const& x : w) {
      Word next = free_reduce(prefix + Word({x}));
      auto it   = vertex_of.find(next);
      if (it == vertex_of.end()) {
        it = vertex_of.emplace(next, tree.add_vertex()).first;
      }
      Vertex const from = vertex_of.at(prefix), to = it->second;
      if (x.inverse) {
        tree.add_edge(to, x.letter, from);
      } else {
        tree.add_edge(from, x.letter, to);
      }
      prefix = std::move(next);
    }
    tree.set_roots(0, vertex_of.at(prefix));
    return tree;
  }

  std::set<int> ArcSetGraph::vertices() const {
    std::set<int> result{alpha, beta};
    for (auto const& [from, label, to] : arcs) {
      result.insert(from);
    }
    return result;
  }

  namespace {
    void add_edge(ArcSetGraph& g, int from, SignedLetter x, int to) {
      g.arcs.emplace(from, x.label(), to);
      g.arcs.emplace(to, x.inverted().label(), from);
    }

    // Repeatedly finds one pair of equally labelled arcs out of a vertex and
    // renames one target to the other throughout.
    void naive_fold(ArcSetGraph& g) {
      while (true) {
        std::optional<std::pair<int, int>> clash;
        for (auto it = g.arcs.begin(); it != g.arcs.end(); ++it) {
          auto next = std::next(it);
          if (next != g.arcs.end() && std::get<0>(*it) == std::get<0>(*next)
              && std::get<1>(*it) == std::get<1>(*next)) {
            clash = {std::get<2>(*it), std::get<2>(*next)};
            break;
          }
        }
        if (!clash) {
          return;
        }
        auto [keep, drop] = *clash;
        auto rename       = [keep, drop](int v) { return v == drop ? keep : v; };
        std::set<std::tuple<int, std::uint32_t, int>> renamed;
        for (auto const& [from, label, to] : g.arcs) {
          renamed.emplace(rename(from), label, rename(to));
        }
        g.arcs  = std::move(renamed);
        g.alpha = rename(g.alpha);
        g.beta  = rename(g.beta);
      }
    }

    std::optional<int> read(ArcSetGraph const& g, int from, Word const& w) {
      int v = from;
      for (auto const& x : w) {
        auto it = g.arcs.lower_bound({v, x.label(), INT_MIN});
        if (it == g.arcs.end() || std::get<0>(*it) != v
            || std::get<1>(*it) != x.label()) {
          return std::nullopt;
        }
        v = std::get<2>(*it);
      }
      return v;
    }

    // Sews the first expansion site found; false if there is none.
    bool expand_once(ArcSetGraph& g, Presentation const& p) {
      for (int v : g.vertices()) {
        for (auto const& r : p.relations()) {
          for (int side = 0; side < 2; ++side) {
            Word const& readable = side == 0 ? r.lhs : r.rhs;
            Word const& other    = side == 0 ? r.rhs : r.lhs;
            auto        end      = read(g, v, readable);
            if (!end || read(g, v, other) == end) {
              continue;
            }
            int here = v;
            for (std::size_t i = 0; i < other.size(); ++i) {
              int next = i + 1 == other.size() ? *end : g.next_vertex++;
              add_edge(g, here, other[i], next);
              here = next;
            }
            return true;
          }
        }
      }
      return false;
    }
  }  // namespace

  BruteForce::BruteForce(Presentation p, std::size_t depth)
      : _presentation(std::move(p)), _depth(depth), _runs() {}

  BruteForce::Run const& BruteForce::run(Word const& w) {
    auto it = _runs.find(w);
    if (it != _runs.end()) {
      return it->second;
    }
    if (!_presentation.alphabet().contains(w)) {
      throw PreconditionError("word uses a letter outside the alphabet");
    }
    Run r;
    r.graph.next_vertex = static_cast<int>(w.size()) + 1;
    r.graph.beta        = static_cast<int>(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      add_edge(r.graph, static_cast<int>(i), w[i], static_cast<int>(i + 1));
    }
    naive_fold(r.graph);
    std::size_t steps = 0;
    while (true) {
      if (steps == _depth) {
        // Closed only if no further expansion would be possible.
        ArcSetGraph probe = r.graph;
        r.closed          = !expand_once(probe, _presentation);
        break;
      }
      if (!expand_once(r.graph, _presentation)) {
        r.closed = true;
        break;
      }
      ++steps;
      naive_fold(r.graph);
    }
    return _runs.emplace(w, std::move(r)).first->second;
  }

  Answer BruteForce::member(Word const& candidate, Word const& target) {
    auto const& r   = run(target);
    auto        end = read(r.graph, r.graph.alpha, candidate);
    if (end && *end == r.graph.beta) {
      return Answer::yes;
    }
    return r.closed ? Answer::no : Answer::unknown;
  }

  Answer BruteForce::equal(Word const& u, Word const& v) {
    return both(member(u, v), member(v, u));
  }

  bool BruteForce::closed(Word const& w) {
    return run(w).closed;
  }

  ArcSetGraph const& BruteForce::graph(Word const& w) {
    return run(w).graph;
  }

  Answer brute_force_equal(Word const&         u,
                           Word const&         v,
                           Presentation const& p,
                           std::size_t         depth) {
    return BruteForce(p, depth).equal(u, v);
  }

}  // namespace stephen::oracle
