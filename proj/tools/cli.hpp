#ifndef STEPHEN_TOOLS_CLI_HPP_
#define STEPHEN_TOOLS_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace stephen::cli {

  // Exit codes. Verdict commands use yes/no/unknown; `graph` uses ok for a
  // closed automaton and unknown for an exhausted budget.
  inline constexpr int kOk      = 0;
  inline constexpr int kYes     = 0;
  inline constexpr int kNo      = 1;
  inline constexpr int kError   = 2;
  inline constexpr int kUnknown = 3;

  // Runs one command. `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace stephen::cli

#endif  // STEPHEN_TOOLS_CLI_HPP_
