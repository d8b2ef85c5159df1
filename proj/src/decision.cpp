#include "stephen/decision.hpp"

#include "stephen/error.hpp"  // for PreconditionError

namespace stephen {

  char const* to_string(Answer a) noexcept {
    switch (a) {
      case Answer::yes:
        return "yes";
      case Answer::no:
        return "no";
      case Answer::unknown:
        return "unknown";
    }
    return "?";
  }

  Answer both(Answer a, Answer b) noexcept {
    if (a == Answer::no || b == Answer::no) {
      return Answer::no;
    }
    if (a == Answer::yes && b == Answer::yes) {
      return Answer::yes;
    }
    return Answer::unknown;
  }

  WordProblem::WordProblem(Presentation p, Budget budget)
      : _presentation(std::move(p)), _budget(budget), _cache() {}

  ClosureResult const& WordProblem::closure(Word const& w) {
    auto it = _cache.find(w);
    if (it != _cache.end()) {
      return it->second;
    }
    if (!_presentation.alphabet().contains(w)) {
      throw PreconditionError("word uses a letter outside the alphabet");
    }
    return _cache
        .emplace(w, schutzenberger_automaton(w, _presentation, _budget))
        .first->second;
  }

  Answer WordProblem::member(Word const& candidate, Word const& target) {
    if (!_presentation.alphabet().contains(candidate)) {
      throw PreconditionError("word uses a letter outside the alphabet");
    }
    auto const& c = closure(target);
    if (accepts(c.graph, candidate)) {
      return Answer::yes;
    }
    return c.closed() ? Answer::no : Answer::unknown;
  }

  Answer WordProblem::equal_answer(Word const& u, Word const& v) {
    auto first = member(u, v);
    if (first == Answer::no) {
      return first;
    }
    return both(first, member(v, u));
  }

  Verdict WordProblem::from_checks(std::vector<MembershipCheck> checks) {
    Verdict result;
    result.answer = Answer::yes;
    for (auto const& check : checks) {
      result.answer = both(result.answer, check.answer);
    }
    for (auto const& check : checks) {
      auto const& c = closure(check.target);
      result.witness.closures.push_back({check.target,
                                         c.status,
                                         c.rounds,
                                         c.graph.vertex_count(),
                                         c.graph.edge_count()});
    }
    result.witness.checks = std::move(checks);
    return result;
  }

  Verdict WordProblem::equal(Word const& u, Word const& v) {
    return from_checks({{u, v, member(u, v)}, {v, u, member(v, u)}});
  }

  Verdict WordProblem::natural_leq(Word const& u, Word const& w) {
    return from_checks({{w, u, member(w, u)}});
  }

  Verdict WordProblem::idempotent(Word const& w) {
    return equal(w, w + w.inverse());
  }

  Verdict decide_equal(Word const&         u,
                       Word const&         v,
                       Presentation const& p,
                       Budget const&       budget) {
    return WordProblem(p, budget).equal(u, v);
  }

  Verdict decide_natural_leq(Word const&         u,
                             Word const&         w,
                             Presentation const& p,
                             Budget const&       budget) {
    return WordProblem(p, budget).natural_leq(u, w);
  }

  Verdict is_idempotent(Word const&         w,
                        Presentation const& p,
                        Budget const&       budget) {
    return WordProblem(p, budget).idempotent(w);
  }

  nlohmann::json to_json(Verdict const& v, Alphabet const& alphabet) {
    nlohmann::json closures  = nlohmann::json::array();
    nlohmann::json exhausted = nlohmann::json::array();
    for (auto const& c : v.witness.closures) {
      closures.push_back({{"word", to_string(c.word, alphabet)},
                          {"status", to_string(c.status)},
                          {"rounds", c.rounds},
                          {"vertices", c.vertices},
                          {"edges", c.edges}});
      if (c.status == ClosureStatus::budget_exceeded) {
        exhausted.push_back(to_string(c.word, alphabet));
      }
    }
    nlohmann::json checks = nlohmann::json::array();
    for (auto const& c : v.witness.checks) {
      checks.push_back({{"word", to_string(c.candidate, alphabet)},
                        {"in_language_of", to_string(c.target, alphabet)},
                        {"answer", to_string(c.answer)}});
    }
    return {{"answer", to_string(v.answer)},
            {"witness",
             {{"closures", std::move(closures)},
              {"checks", std::move(checks)},
              {"budget_exhausted", std::move(exhausted)}}}};
  }

}  // namespace stephen
