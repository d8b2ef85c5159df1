#include "cli.hpp"

#include <cstdlib>   // for getenv
#include <fstream>   // for ifstream, ofstream
#include <optional>  // for optional
#include <sstream>   // for ostringstream

#include "CLI11.hpp"

#include "stephen/decision.hpp"
#include "stephen/engine.hpp"
#include "stephen/error.hpp"
#include "stephen/presentation.hpp"
#include "stephen/word-graph.hpp"

namespace stephen::cli {

  namespace {

    constexpr char const* kRoundsEnv = "STEPHEN_KIT_BUDGET_ROUNDS";

    struct Options {
      std::size_t              max_rounds   = Budget{}.max_rounds;
      std::size_t              max_vertices = Budget{}.max_vertices;
      std::string              json_path;
      std::string              dot_path;
      std::string              presentation_path;
      std::vector<std::string> words;
    };

    Presentation load(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot read " + path);
      }
      std::ostringstream text;
      text << in.rdbuf();
      return parse_presentation(text.str());
    }

    void write_file(std::string const& path, std::string const& content) {
      std::ofstream file(path);
      if (!file || !(file << content)) {
        throw Error("cannot write " + path);
      }
    }

    Budget budget_of(Options const& o) {
      return {o.max_rounds, o.max_vertices};
    }

    int cmd_check(Options const& o, std::ostream& out) {
      auto const p     = load(o.presentation_path);
      bool const adian = is_adian(p);
      nlohmann::json report{{"adian", adian}};
      if (!adian) {
        out << "adian: no\n";
      } else if (!p.is_one_relation()) {
        out << "adian: yes; case: n/a (" << p.relations().size()
            << " relations); finiteness: unknown\n";
      } else {
        auto const& r       = p.relations().front();
        auto const  profile = overlap_profile(r.lhs, r.rhs);
        auto const  cert    = classify_finiteness(p);
        out << "adian: yes; case: " << to_string(profile.case_label)
            << "; finiteness: " << to_string(cert.verdict);
        if (cert.basis != CertificateBasis::none) {
          out << " (" << to_string(cert.basis) << ")";
        }
        out << '\n';
        report["case"]       = to_string(profile.case_label);
        report["finiteness"] = to_string(cert.verdict);
        report["basis"]      = to_string(cert.basis);
        report["profile"]
            = {{"u_subword_of_v", profile.u_subword_of_v},
               {"v_subword_of_u", profile.v_subword_of_u},
               {"u_border_len", profile.u_border_len},
               {"v_border_len", profile.v_border_len},
               {"suffix_u_prefix_v_len", profile.suffix_u_prefix_v_len},
               {"suffix_v_prefix_u_len", profile.suffix_v_prefix_u_len}};
      }
      if (!o.json_path.empty()) {
        write_file(o.json_path, report.dump(2) + "\n");
      }
      return kOk;
    }

    int cmd_graph(Options const& o, std::ostream& out) {
      auto const p = load(o.presentation_path);
      auto const w = parse_word(o.words.at(0), p.alphabet());
      auto const r = schutzenberger_automaton(w, p, budget_of(o));
      out << to_string(r.status) << "; rounds=" << r.rounds
          << "; vertices=" << r.graph.vertex_count()
          << "; edges=" << r.graph.edge_count() << '\n';
      if (!o.dot_path.empty()) {
        write_file(o.dot_path, to_dot(r.graph, p.alphabet()));
      }
      if (!o.json_path.empty()) {
        nlohmann::json j{{"closure", instrumentation_json(r)},
                         {"graph", to_json(r.graph, p.alphabet())}};
        write_file(o.json_path, j.dump(2) + "\n");
      }
      return r.closed() ? kOk : kUnknown;
    }

    int report_verdict(Verdict const&      v,
                       Presentation const& p,
                       Options const&      o,
                       std::ostream&       out) {
      auto const j = to_json(v, p.alphabet());
      out << to_string(v.answer) << '\n' << j.dump() << '\n';
      if (!o.json_path.empty()) {
        write_file(o.json_path, j.dump(2) + "\n");
      }
      switch (v.answer) {
        case Answer::yes:
          return kYes;
        case Answer::no:
          return kNo;
        case Answer::unknown:
          break;
      }
      return kUnknown;
    }

    int cmd_eq(Options const& o, std::ostream& out) {
      auto const  p = load(o.presentation_path);
      WordProblem problem(p, budget_of(o));
      auto const  u = parse_word(o.words.at(0), p.alphabet());
      auto const  v = parse_word(o.words.at(1), p.alphabet());
      return report_verdict(problem.equal(u, v), p, o, out);
    }

    int cmd_leq(Options const& o, std::ostream& out) {
      auto const  p = load(o.presentation_path);
      WordProblem problem(p, budget_of(o));
      auto const  u = parse_word(o.words.at(0), p.alphabet());
      auto const  w = parse_word(o.words.at(1), p.alphabet());
      return report_verdict(problem.natural_leq(u, w), p, o, out);
    }

    int cmd_idem(Options const& o, std::ostream& out) {
      auto const  p = load(o.presentation_path);
      WordProblem problem(p, budget_of(o));
      auto const  w = parse_word(o.words.at(0), p.alphabet());
      return report_verdict(problem.idempotent(w), p, o, out);
    }

    int cmd_count_r(Options const& o, std::ostream& out) {
      auto const p = load(o.presentation_path);
      auto const w = parse_word(o.words.at(0), p.alphabet());
      out << count_r_word_occurrences(w, p) << '\n';
      return kOk;
    }

    std::optional<std::size_t> rounds_from_env() {
      char const* value = std::getenv(kRoundsEnv);
      if (value == nullptr || *value == '\0') {
        return std::nullopt;
      }
      std::size_t used = 0;
      auto        n    = std::stoull(value, &used);
      if (used != std::string(value).size() || n == 0) {
        throw std::invalid_argument("");
      }
      return n;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    Options o;
    try {
      if (auto n = rounds_from_env()) {
        o.max_rounds = *n;
      }
    } catch (std::exception const&) {
      err << "error: " << kRoundsEnv << " must be a positive integer\n";
      return kError;
    }

    CLI::App app{"Schützenberger automata and word problems for positive "
                 "inverse monoid presentations",
                 "stephen-kit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-rounds", o.max_rounds, "Full expansion rounds per closure")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-vertices", o.max_vertices, "Vertex limit per closure")
        ->check(CLI::PositiveNumber);
    app.add_option("--json", o.json_path, "Write a JSON report to PATH");
    app.add_option("--dot", o.dot_path, "Write the automaton as Graphviz to PATH");

    auto presentation = [&o](CLI::App* sub) {
      sub->add_option("presentation", o.presentation_path, "Presentation file")
          ->required();
    };
    auto words = [&o](CLI::App* sub, char const* name, int count, char const* help) {
      sub->add_option(name, o.words, help)->expected(count)->required();
    };

    auto* check = app.add_subcommand(
        "check", "Adian test, overlap case and finiteness certificate");
    presentation(check);

    auto* graph = app.add_subcommand("graph", "Build a Schützenberger automaton");
    presentation(graph);

    auto* eq   = app.add_subcommand("eq", "Decide u = v");
    auto* leq  = app.add_subcommand("leq", "Decide w >= u in the natural order");
    auto* idem = app.add_subcommand("idem", "Decide whether w is idempotent");
    auto* count
        = app.add_subcommand("count-r", "Count relation-side occurrences in w");
    for (auto* sub : {eq, leq, idem, count}) {
      presentation(sub);
    }
    char const* inverse_hint = "; write a^ for the inverse of a";
    words(graph, "word", 1, (std::string("Word") + inverse_hint).c_str());
    words(eq, "words", 2, (std::string("u v") + inverse_hint).c_str());
    words(leq, "words", 2, (std::string("u w, asking w >= u") + inverse_hint).c_str());
    words(idem, "word", 1, (std::string("Word") + inverse_hint).c_str());
    words(count, "word", 1, "Positive word");

    std::vector<char const*> argv{"stephen-kit"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kOk : kError;
    }

    try {
      if (check->parsed()) {
        return cmd_check(o, out);
      } else if (graph->parsed()) {
        return cmd_graph(o, out);
      } else if (eq->parsed()) {
        return cmd_eq(o, out);
      } else if (leq->parsed()) {
        return cmd_leq(o, out);
      } else if (idem->parsed()) {
        return cmd_idem(o, out);
      } else if (count->parsed()) {
        return cmd_count_r(o, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kError;
    }
    return kError;
  }

}  // namespace stephen::cli
