#include "stephen/presentation.hpp"

#include <algorithm>  // for min, any_of
#include <numeric>    // for iota
#include <vector>     // for vector

#include "stephen/error.hpp"  // for ParseError, InvalidPresentation, ...

namespace stephen {

  namespace {

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
    }

    bool is_reserved(char c) {
      return c == '=' || c == ':' || c == '^' || c == '#';
    }

    // Tokenizes a run of letters starting at `offset` within a line. Columns
    // in errors are 1-based and relative to the full line.
    Word parse_letters(std::string_view text,
                       Alphabet const&  alphabet,
                       std::size_t      line,
                       std::size_t      offset) {
      Word        result;
      std::size_t pos = 0;
      while (pos < text.size()) {
        if (is_space(text[pos])) {
          ++pos;
          continue;
        }
        if (is_reserved(text[pos])) {
          std::string what(1, text[pos]);
          throw ParseError(
              text[pos] == '^' ? "'^' must follow a letter"
                               : "unexpected reserved character '" + what + "'",
              line,
              offset + pos + 1);
        }
        std::size_t best = 0;
        Letter      letter;
        for (std::size_t i = 0; i < alphabet.size(); ++i) {
          auto const& name = alphabet.names()[i];
          if (name.size() > best && text.substr(pos).starts_with(name)) {
            best   = name.size();
            letter = Letter{static_cast<std::uint32_t>(i)};
          }
        }
        if (best == 0) {
          std::size_t end = pos;
          while (end < text.size() && !is_space(text[end])
                 && !is_reserved(text[end])) {
            ++end;
          }
          throw ParseError("undeclared letter '"
                               + std::string(text.substr(pos, end - pos)) + "'",
                           line,
                           offset + pos + 1);
        }
        pos += best;
        bool inverse = false;
        if (pos < text.size() && text[pos] == '^') {
          inverse = true;
          ++pos;
        }
        result.push_back({letter, inverse});
      }
      return result;
    }

    std::string_view strip_comment(std::string_view line) {
      auto hash = line.find('#');
      return hash == std::string_view::npos ? line : line.substr(0, hash);
    }

    std::size_t first_non_space(std::string_view s, std::size_t from = 0) {
      while (from < s.size() && is_space(s[from])) {
        ++from;
      }
      return from;
    }

    bool only_spaces(std::string_view s) {
      return first_non_space(s) == s.size();
    }

    std::string describe(Relation const& r, Alphabet const& alphabet) {
      return to_string(r.lhs, alphabet) + " = " + to_string(r.rhs, alphabet);
    }

  }  // namespace

  Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations)
      : _alphabet(std::move(alphabet)), _relations(std::move(relations)) {
    if (_alphabet.size() == 0) {
      throw InvalidPresentation("the alphabet must not be empty");
    }
    for (auto const& r : _relations) {
      for (auto const* side : {&r.lhs, &r.rhs}) {
        if (side->empty()) {
          throw InvalidPresentation("relation sides must be non-empty");
        }
        if (!_alphabet.contains(*side)) {
          throw InvalidPresentation("relation uses a letter outside the alphabet");
        }
        if (!side->is_positive()) {
          throw InvalidPresentation("relation sides must be positive words: "
                                    + describe(r, _alphabet));
        }
      }
      if (r.lhs == r.rhs) {
        throw InvalidPresentation("trivial relation "
                                  + describe(r, _alphabet));
      }
    }
  }

  Presentation parse_presentation(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<Relation>   relations;
    std::size_t             line_no = 0;

    while (!text.empty()) {
      ++line_no;
      auto             newline = text.find('\n');
      std::string_view line    = text.substr(0, newline);
      text = newline == std::string_view::npos ? std::string_view{}
                                               : text.substr(newline + 1);
      line = strip_comment(line);
      if (only_spaces(line)) {
        continue;
      }
      std::size_t start = first_non_space(line);
      if (line.size() < start + 2 || line[start + 1] != ':'
          || (line[start] != 'X' && line[start] != 'R')) {
        throw ParseError("expected a line starting with 'X:' or 'R:'",
                         line_no,
                         start + 1);
      }
      std::size_t body = start + 2;

      if (line[start] == 'X') {
        if (alphabet) {
          throw ParseError("the alphabet is declared twice", line_no, start + 1);
        }
        alphabet.emplace();
        std::size_t pos = body;
        while ((pos = first_non_space(line, pos)) < line.size()) {
          std::size_t end = pos;
          while (end < line.size() && !is_space(line[end])) {
            if (is_reserved(line[end])) {
              throw ParseError("reserved character '" + std::string(1, line[end])
                                   + "' in a letter name",
                               line_no,
                               end + 1);
            }
            ++end;
          }
          std::string name(line.substr(pos, end - pos));
          if (!alphabet->add(name)) {
            throw ParseError("letter '" + name + "' is declared twice",
                             line_no,
                             pos + 1);
          }
          pos = end;
        }
        if (alphabet->size() == 0) {
          throw ParseError("the alphabet must not be empty", line_no, body + 1);
        }
        continue;
      }

      if (!alphabet) {
        throw ParseError(
            "relations must come after the 'X:' line", line_no, start + 1);
      }
      auto eq = line.find('=', body);
      if (eq == std::string_view::npos) {
        throw ParseError("expected '=' in relation", line_no, line.size() + 1);
      }
      if (line.find('=', eq + 1) != std::string_view::npos) {
        throw ParseError(
            "more than one '=' in relation", line_no, line.find('=', eq + 1) + 1);
      }
      Word lhs = parse_letters(line.substr(body, eq - body), *alphabet, line_no, body);
      Word rhs = parse_letters(line.substr(eq + 1), *alphabet, line_no, eq + 1);
      if (lhs.empty() || rhs.empty()) {
        throw InvalidPresentation("line " + std::to_string(line_no)
                                  + ": relation sides must be non-empty");
      }
      relations.push_back({std::move(lhs), std::move(rhs)});
    }

    if (!alphabet) {
      throw ParseError("missing 'X:' line", line_no + 1, 1);
    }
    return Presentation(std::move(*alphabet), std::move(relations));
  }

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    return parse_letters(text, alphabet, 1, 0);
  }

  std::string to_string(Presentation const& p) {
    std::string result = "X:";
    for (auto const& name : p.alphabet().names()) {
      result += ' ';
      result += name;
    }
    result += '\n';
    for (auto const& r : p.relations()) {
      result += "R: " + describe(r, p.alphabet()) + '\n';
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Side graphs
  ////////////////////////////////////////////////////////////////////////

  SideGraphs side_graphs(Presentation const& p) {
    SideGraphs result;
    result.left.vertex_count  = p.alphabet().size();
    result.right.vertex_count = p.alphabet().size();
    for (auto const& r : p.relations()) {
      result.left.edges.emplace_back(r.lhs[0].letter, r.rhs[0].letter);
      result.right.edges.emplace_back(r.lhs[r.lhs.size() - 1].letter,
                                      r.rhs[r.rhs.size() - 1].letter);
    }
    return result;
  }

  bool has_cycle(SideGraph const& g) {
    // A forest on n vertices: an edge closes a cycle iff its endpoints are
    // already connected. Self-loops and parallel edges fall out for free.
    std::vector<std::size_t> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& [a, b] : g.edges) {
      auto ra = find(a.index);
      auto rb = find(b.index);
      if (ra == rb) {
        return true;
      }
      parent[ra] = rb;
    }
    return false;
  }

  bool is_adian(Presentation const& p) {
    auto graphs = side_graphs(p);
    return !has_cycle(graphs.left) && !has_cycle(graphs.right);
  }

  ////////////////////////////////////////////////////////////////////////
  // Overlaps
  ////////////////////////////////////////////////////////////////////////

  std::size_t border_length(Word const& w) {
    for (std::size_t k = w.size() / 2; k > 0; --k) {
      if (w.prefix(k) == w.suffix(k)) {
        return k;
      }
    }
    return 0;
  }

  std::size_t suffix_prefix_overlap(Word const& u, Word const& v) {
    std::size_t const bound = std::min(u.size(), v.size());
    for (std::size_t k = bound == 0 ? 0 : bound - 1; k > 0; --k) {
      if (u.suffix(k) == v.prefix(k)) {
        return k;
      }
    }
    return 0;
  }

  OverlapProfile overlap_profile(Word const& u, Word const& v) {
    if (u.empty() || v.empty()) {
      throw PreconditionError("overlap_profile: words must be non-empty");
    }
    if (!u.is_positive() || !v.is_positive()) {
      throw PreconditionError("overlap_profile: words must be positive");
    }
    if (u == v) {
      throw PreconditionError("overlap_profile: words must be distinct");
    }
    OverlapProfile result;
    result.u_subword_of_v        = v.contains(u);
    result.v_subword_of_u        = u.contains(v);
    result.u_border_len          = border_length(u);
    result.v_border_len          = border_length(v);
    result.suffix_u_prefix_v_len = suffix_prefix_overlap(u, v);
    result.suffix_v_prefix_u_len = suffix_prefix_overlap(v, u);

    int const cross = (result.suffix_u_prefix_v_len > 0 ? 1 : 0)
                      + (result.suffix_v_prefix_u_len > 0 ? 1 : 0);
    bool const border = result.u_border_len > 0 || result.v_border_len > 0;

    if (result.u_subword_of_v || result.v_subword_of_u) {
      result.case_label = OverlapCase::subword;
    } else if (cross == 2) {
      result.case_label = OverlapCase::case4;
    } else if (cross == 1) {
      result.case_label = border ? OverlapCase::case3 : OverlapCase::case2;
    } else {
      result.case_label = border ? OverlapCase::case1 : OverlapCase::no_interaction;
    }
    return result;
  }

  std::size_t count_r_word_occurrences(Word const& w, Presentation const& p) {
    if (!w.is_positive()) {
      throw PreconditionError("count_r_word_occurrences: word must be positive");
    }
    if (!p.is_one_relation()) {
      throw PreconditionError(
          "count_r_word_occurrences: presentation must have exactly one relation");
    }
    auto const& r = p.relations().front();
    return w.count_occurrences(r.lhs) + w.count_occurrences(r.rhs);
  }

  FinitenessCertificate certificate_for(OverlapCase c) noexcept {
    switch (c) {
      case OverlapCase::no_interaction:
        return {Finiteness::certified_finite, CertificateBasis::fact1};
      case OverlapCase::case1:
        return {Finiteness::certified_finite, CertificateBasis::prop1};
      case OverlapCase::case2:
        return {Finiteness::certified_finite, CertificateBasis::prop2};
      case OverlapCase::subword:
        return {Finiteness::certified_infinite,
                CertificateBasis::subword_argument};
      case OverlapCase::case3:
      case OverlapCase::case4:
        break;
    }
    return {Finiteness::unknown, CertificateBasis::none};
  }

  FinitenessCertificate classify_finiteness(Presentation const& p) {
    if (!p.is_one_relation()) {
      throw PreconditionError(
          "classify_finiteness: presentation must have exactly one relation");
    }
    if (!is_adian(p)) {
      throw PreconditionError("classify_finiteness: presentation is not Adian");
    }
    auto const& r = p.relations().front();
    return certificate_for(overlap_profile(r.lhs, r.rhs).case_label);
  }

  char const* to_string(OverlapCase c) noexcept {
    switch (c) {
      case OverlapCase::no_interaction:
        return "NoInteraction";
      case OverlapCase::case1:
        return "Case1";
      case OverlapCase::case2:
        return "Case2";
      case OverlapCase::case3:
        return "Case3";
      case OverlapCase::case4:
        return "Case4";
      case OverlapCase::subword:
        return "Subword";
    }
    return "?";
  }

  char const* to_string(Finiteness v) noexcept {
    switch (v) {
      case Finiteness::certified_finite:
        return "certified-finite";
      case Finiteness::certified_infinite:
        return "certified-infinite";
      case Finiteness::unknown:
        return "unknown";
    }
    return "?";
  }

  char const* to_string(CertificateBasis b) noexcept {
    switch (b) {
      case CertificateBasis::fact1:
        return "fact 1";
      case CertificateBasis::prop1:
        return "proposition 1";
      case CertificateBasis::prop2:
        return "proposition 2";
      case CertificateBasis::subword_argument:
        return "subword argument";
      case CertificateBasis::none:
        return "none";
    }
    return "?";
  }

}  // namespace stephen
