#ifndef STEPHEN_PRESENTATION_HPP_
#define STEPHEN_PRESENTATION_HPP_

#include <cstddef>      // for size_t
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "word.hpp"  // for Word, Alphabet, Letter

namespace stephen {

  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  // A positive presentation <X | R>. Construction validates the invariants:
  // every side is non-empty, positive and over X, and no relation is trivial.
  class Presentation {
   public:
    Presentation(Alphabet alphabet, std::vector<Relation> relations);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    bool is_one_relation() const noexcept {
      return _relations.size() == 1;
    }

    bool operator==(Presentation const&) const = default;

   private:
    Alphabet              _alphabet;
    std::vector<Relation> _relations;
  };

  // Reads the line-oriented presentation format:
  //
  //   X: a b c        # letters, in index order
  //   R: aba = c      # one relation per line
  //
  // Throws ParseError for malformed text and InvalidPresentation when the
  // result would violate a Presentation invariant.
  Presentation parse_presentation(std::string_view text);

  // Parses a word over `alphabet`. Letters are matched longest-first, so both
  // "ab^a" and "x1 x2^" work; whitespace separates but is otherwise ignored.
  // A trailing '^' inverts the preceding letter. Empty text gives the empty
  // word.
  Word parse_word(std::string_view text, Alphabet const& alphabet);

  // Writes `p` back in the format accepted by parse_presentation.
  std::string to_string(Presentation const& p);

  ////////////////////////////////////////////////////////////////////////
  // Left and right graphs
  ////////////////////////////////////////////////////////////////////////

  // Undirected multigraph on the alphabet, one edge per relation.
  struct SideGraph {
    std::size_t                         vertex_count = 0;
    std::vector<std::pair<Letter, Letter>> edges;
  };

  struct SideGraphs {
    SideGraph left;   // joins the first letters of each relation
    SideGraph right;  // joins the last letters
  };

  SideGraphs side_graphs(Presentation const& p);

  // A side graph has a cycle if it has a self-loop, two edges on the same
  // pair of vertices, or a longer closed path.
  bool has_cycle(SideGraph const& g);

  // Adian (cycle-free): neither side graph has a cycle.
  bool is_adian(Presentation const& p);

  ////////////////////////////////////////////////////////////////////////
  // Overlap analysis for one-relation presentations
  ////////////////////////////////////////////////////////////////////////

  enum class OverlapCase {
    no_interaction,
    case1,  // a side has a border, the sides do not overlap each other
    case2,  // one-way overlap between the sides, no borders
    case3,  // one-way overlap between the sides, and a border
    case4,  // the sides overlap each other both ways
    subword
  };

  struct OverlapProfile {
    bool        u_subword_of_v        = false;
    bool        v_subword_of_u        = false;
    std::size_t u_border_len          = 0;
    std::size_t v_border_len          = 0;
    std::size_t suffix_u_prefix_v_len = 0;
    std::size_t suffix_v_prefix_u_len = 0;
    OverlapCase case_label            = OverlapCase::no_interaction;

    bool operator==(OverlapProfile const&) const = default;
  };

  // Longest k with 0 < k, 2k <= |w| and prefix_k(w) = suffix_k(w); 0 if none.
  std::size_t border_length(Word const& w);

  // Longest k with 0 < k < min(|u|, |v|) and suffix_k(u) = prefix_k(v).
  std::size_t suffix_prefix_overlap(Word const& u, Word const& v);

  // Throws PreconditionError unless u and v are non-empty, positive and
  // distinct.
  OverlapProfile overlap_profile(Word const& u, Word const& v);

  // Number of (side, position) pairs at which a relation side occurs in w.
  // Requires w positive and p one-relation.
  std::size_t count_r_word_occurrences(Word const& w, Presentation const& p);

  enum class Finiteness { certified_finite, certified_infinite, unknown };

  enum class CertificateBasis { fact1, prop1, prop2, subword_argument, none };

  struct FinitenessCertificate {
    Finiteness       verdict = Finiteness::unknown;
    CertificateBasis basis   = CertificateBasis::none;

    bool operator==(FinitenessCertificate const&) const = default;
  };

  // Whether every Schützenberger graph of a positive word is known to be
  // finite. Depends only on the overlap profile of the single relation.
  // Requires a one-relation Adian presentation.
  FinitenessCertificate classify_finiteness(Presentation const& p);

  FinitenessCertificate certificate_for(OverlapCase c) noexcept;

  char const* to_string(OverlapCase c) noexcept;
  char const* to_string(Finiteness v) noexcept;
  char const* to_string(CertificateBasis b) noexcept;

}  // namespace stephen

#endif  // STEPHEN_PRESENTATION_HPP_
