#ifndef STEPHEN_DECISION_HPP_
#define STEPHEN_DECISION_HPP_

#include <cstddef>        // for size_t
#include <unordered_map>  // for unordered_map
#include <vector>         // for vector

#include "engine.hpp"        // for Budget, ClosureResult
#include "json.hpp"          // for nlohmann::json
#include "presentation.hpp"  // for Presentation
#include "word.hpp"          // for Word

// Word problem verdicts. Everything rests on two facts about the language
// L(u) of the Schützenberger automaton of u:
//
//   * w is in L(u) iff w >= u in the natural partial order, and u = v iff
//     u is in L(v) and v is in L(u);
//   * every approximation of the automaton accepts a subset of L(u).
//
// So acceptance by any approximation proves membership, while rejection
// proves non-membership only once the automaton is closed. A verdict is
// Unknown exactly when a closure ran out of budget before either happened.

namespace stephen {

  enum class Answer { yes, no, unknown };

  char const* to_string(Answer a) noexcept;

  // Three-valued conjunction.
  Answer both(Answer a, Answer b) noexcept;

  struct ClosureSummary {
    Word          word;
    ClosureStatus status   = ClosureStatus::closed;
    std::size_t   rounds   = 0;
    std::size_t   vertices = 0;
    std::size_t   edges    = 0;
  };

  // candidate in L(target)?
  struct MembershipCheck {
    Word   candidate;
    Word   target;
    Answer answer = Answer::unknown;
  };

  struct Witness {
    std::vector<ClosureSummary>  closures;
    std::vector<MembershipCheck> checks;
  };

  struct Verdict {
    Answer  answer = Answer::unknown;
    Witness witness;
  };

  // Decides questions over one presentation, caching a closure per word.
  class WordProblem {
   public:
    explicit WordProblem(Presentation p, Budget budget = {});

    Presentation const& presentation() const noexcept {
      return _presentation;
    }
    Budget const& budget() const noexcept {
      return _budget;
    }

    // Throws PreconditionError if w uses letters outside the alphabet.
    ClosureResult const& closure(Word const& w);

    // Whether candidate is in L(target), i.e. candidate >= target.
    Answer member(Word const& candidate, Word const& target);

    // u = v
    Verdict equal(Word const& u, Word const& v);
    // w >= u
    Verdict natural_leq(Word const& u, Word const& w);
    // w = w w⁻¹
    Verdict idempotent(Word const& w);

    // Same answers as above without building a witness.
    Answer equal_answer(Word const& u, Word const& v);

   private:
    Verdict from_checks(std::vector<MembershipCheck> checks);

    Presentation                                     _presentation;
    Budget                                           _budget;
    std::unordered_map<Word, ClosureResult, WordHash> _cache;
  };

  Verdict decide_equal(Word const&         u,
                       Word const&         v,
                       Presentation const& p,
                       Budget const&       budget = {});

  // Is w >= u?
  Verdict decide_natural_leq(Word const&         u,
                             Word const&         w,
                             Presentation const& p,
                             Budget const&       budget = {});

  Verdict is_idempotent(Word const&         w,
                        Presentation const& p,
                        Budget const&       budget = {});

  // {"answer": "yes|no|unknown", "witness": {...}}
  nlohmann::json to_json(Verdict const& v, Alphabet const& alphabet);

}  // namespace stephen

#endif  // STEPHEN_DECISION_HPP_
