#include "stephen/engine.hpp"

#include <algorithm>  // for reverse

#include "stephen/error.hpp"  // for PreconditionError

namespace stephen {

  namespace {
    Word const& read_side(Relation const& r, ReadSide d) {
      return d == ReadSide::lhs ? r.lhs : r.rhs;
    }

    Word const& sewn_side(Relation const& r, ReadSide d) {
      return d == ReadSide::lhs ? r.rhs : r.lhs;
    }

    void require_deterministic(BirootedGraph const& g, char const* who) {
      if (!g.is_deterministic()) {
        throw PreconditionError(std::string(who)
                                + ": the graph is not deterministic");
      }
    }

    // Adds a fresh path labelled w (positive, non-empty) from start to end.
    void sew(BirootedGraph& g, Vertex start, Word const& w, Vertex end) {
      Vertex here = start;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Vertex next = i + 1 == w.size() ? end : g.add_vertex();
        g.add_edge(here, w[i].letter, next);
        here = next;
      }
    }

    enum class SewOutcome { sewn, stale };

    // Revalidates against the current, possibly non-deterministic, graph.
    SewOutcome sew_site(BirootedGraph&       g,
                        ExpansionSite const& site,
                        Presentation const&  p) {
      if (site.relation_index >= p.relations().size()) {
        throw PreconditionError("expansion site: relation index out of range");
      }
      if (site.start >= g.vertex_count() || site.end >= g.vertex_count()) {
        throw PreconditionError("expansion site: vertex out of range");
      }
      auto const& r = p.relations()[site.relation_index];
      if (!labels_path(g, site.start, read_side(r, site.direction), site.end)) {
        throw PreconditionError(
            "expansion site: the read side does not label a path");
      }
      Word const& other = sewn_side(r, site.direction);
      if (labels_path(g, site.start, other, site.end)) {
        return SewOutcome::stale;
      }
      sew(g, site.start, other, site.end);
      return SewOutcome::sewn;
    }
  }  // namespace

  std::vector<ExpansionSite> find_expansions(BirootedGraph const& g,
                                             Presentation const&  p) {
    require_deterministic(g, "find_expansions");
    std::vector<ExpansionSite> sites;
    auto const&                relations = p.relations();
    for (Vertex start : bfs_order(g)) {
      for (std::size_t i = 0; i < relations.size(); ++i) {
        auto lhs_end = read(g, start, relations[i].lhs);
        auto rhs_end = read(g, start, relations[i].rhs);
        if (lhs_end && lhs_end != rhs_end) {
          sites.push_back({i, ReadSide::lhs, start, *lhs_end});
        }
        if (rhs_end && rhs_end != lhs_end) {
          sites.push_back({i, ReadSide::rhs, start, *rhs_end});
        }
      }
    }
    return sites;
  }

  std::optional<BirootedGraph> elementary_expansion(BirootedGraph const& g,
                                                    ExpansionSite const& site,
                                                    Presentation const&  p) {
    BirootedGraph result = g;
    if (sew_site(result, site, p) == SewOutcome::stale) {
      return std::nullopt;
    }
    return result;
  }

  RoundReport expand_round(BirootedGraph const& g,
                           Presentation const&  p,
                           SiteOrder            order,
                           std::size_t          max_vertices) {
    auto sites = find_expansions(g, p);
    if (order == SiteOrder::reversed) {
      std::reverse(sites.begin(), sites.end());
    }
    RoundReport   report;
    BirootedGraph work = g;
    report.sites       = sites.size();
    for (auto const& site : sites) {
      if (sew_site(work, site, p) == SewOutcome::stale) {
        ++report.stale;
        continue;
      }
      ++report.sewn;
      if (max_vertices != 0 && work.vertex_count() > max_vertices) {
        report.aborted = true;
        report.graph   = g;
        return report;
      }
    }
    auto folded   = fold(work);
    report.merges = folded.merges;
    report.graph  = std::move(folded.final);
    return report;
  }

  BirootedGraph full_p_expansion(BirootedGraph const& g, Presentation const& p) {
    return expand_round(g, p).graph;
  }

  ClosureResult close(BirootedGraph const& g,
                      Presentation const&  p,
                      Budget const&        budget) {
    require_deterministic(g, "close");
    if (budget.max_rounds == 0 || budget.max_vertices == 0) {
      throw PreconditionError("close: budget limits must be positive");
    }
    ClosureResult result;
    result.graph = g;
    result.vertex_history.push_back(g.vertex_count());
    while (true) {
      if (find_expansions(result.graph, p).empty()) {
        result.status = ClosureStatus::closed;
        return result;
      }
      if (result.rounds == budget.max_rounds) {
        break;
      }
      auto round = expand_round(
          result.graph, p, SiteOrder::canonical, budget.max_vertices);
      if (round.aborted || round.graph.vertex_count() > budget.max_vertices) {
        break;
      }
      ++result.rounds;
      result.fold_events += round.merges;
      result.graph = std::move(round.graph);
      result.vertex_history.push_back(result.graph.vertex_count());
    }
    result.status = ClosureStatus::budget_exceeded;
    return result;
  }

  ClosureResult schutzenberger_automaton(Word const&         w,
                                         Presentation const& p,
                                         Budget const&       budget) {
    auto initial = fold(linear_graph(w));
    auto result  = close(initial.final, p, budget);
    result.fold_events += initial.merges;
    return result;
  }

  char const* to_string(ClosureStatus s) noexcept {
    return s == ClosureStatus::closed ? "closed" : "budget-exceeded";
  }

  nlohmann::json instrumentation_json(ClosureResult const& r) {
    return {{"status", to_string(r.status)},
            {"rounds", r.rounds},
            {"fold_events", r.fold_events},
            {"vertex_history", r.vertex_history}};
  }

}  // namespace stephen
