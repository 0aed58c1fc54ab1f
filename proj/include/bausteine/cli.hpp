#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bausteine/abstraction.hpp"
#include "bausteine/parse.hpp"
#include "bausteine/reducer.hpp"

namespace bausteine::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceBound = 3;

enum class OutputFormat { Plain, JsonLines };

struct CliConfig {
  ProfileKind profile = ProfileKind::Modern;
  std::size_t max_steps = kDefaultMaxSteps;
  Strategy strategy = Strategy::NormalOrder;
  bool trace = false;
  OutputFormat output = OutputFormat::Plain;
  bool detect_cycles = false;
};

int cmd_reduce(const std::string& expr, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_abstract(const std::vector<std::string>& vars, const std::string& expr, AbstractionAlgorithm alg,
                 const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_identities(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_transforms(std::size_t n, const CliConfig& cfg, std::ostream& out, std::ostream& err);
/// op is `add`, `mul` (two operands) or `encode` (one).
int cmd_church(const std::string& op, const std::vector<std::string>& operands, const CliConfig& cfg,
               std::ostream& out, std::ostream& err);
int cmd_epr(std::istream& formulas, const CliConfig& cfg, std::ostream& out, std::ostream& err);
/// Reads until `:quit` or end of input. The prompt is printed only when
/// `interactive` is set.
int cmd_repl(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err,
             bool interactive = false);

/// Full command line (args excludes the program name). `env_max_steps` is the
/// value of BAUSTEINE_MAX_STEPS, if set; an explicit --max-steps wins.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_steps = std::nullopt, bool interactive = false);

}  // namespace bausteine::cli
