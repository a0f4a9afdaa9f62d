#ifndef SHRINKCA_CLI_HPP
#define SHRINKCA_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shrinkca/automata.hpp"
#include "shrinkca/generators.hpp"
#include "shrinkca/gf2poly.hpp"

namespace shrinkca::cli {

enum class OutputFormat { text, json };

enum ExitStatus : int {
  kOk = 0,
  kVerdictFalse = 1,
  kUsageError = 2,
};

/// A fully validated invocation. Only the fields used by `subcommand` are set.
struct CommandRequest {
  std::string subcommand;  // lfsr, shrink, "ca run", "ca charpoly", linearize, bm, attack
  OutputFormat format = OutputFormat::text;

  std::optional<Gf2Poly> poly;
  std::optional<BitSequence> state;
  std::optional<Gf2Poly> p1;
  std::optional<BitSequence> s1;
  std::optional<Gf2Poly> p2;
  std::optional<BitSequence> s2;
  std::optional<RuleVector> rules;
  std::optional<CaState> ca_state;
  std::optional<BitSequence> sequence;
  std::optional<std::size_t> count;
  std::optional<std::size_t> steps;
  std::optional<int> l1;
};

/// Executes a validated request, writing the report to out and diagnostics to err.
int run_command(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs the command.
/// Exit codes: 0 success, 1 attack verdict false, 2 usage or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shrinkca::cli

#endif  // SHRINKCA_CLI_HPP
