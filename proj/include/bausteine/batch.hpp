#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bausteine/abstraction.hpp"
#include "bausteine/epr.hpp"
#include "bausteine/reducer.hpp"
#include "bausteine/transforms.hpp"

namespace bausteine::batch {

/// Every kernel has a plain serial loop kept as the reference and an OpenMP
/// version over the same per-item work. Results are always in input order.
enum class Execution { Serial, Parallel };

std::vector<ReductionTrace> normalize_all(const std::vector<Term>& terms, Strategy strategy,
                                          const NormalizeOptions& options, Execution exec);

struct ConfluenceReport {
  std::size_t checked = 0;
  /// Terms where both strategies reached a normal form within the bound.
  std::size_t both_normalized = 0;
  /// Indices where both normalized but to different terms.
  std::vector<std::size_t> discrepancies;
};

ConfluenceReport confluence(const std::vector<Term>& terms, std::size_t max_steps, Execution exec);

struct AbstractionCase {
  std::string variable;
  Term body;
  Term argument;
};

struct AbstractionReport {
  std::size_t checked = 0;
  std::size_t both_normalized = 0;
  std::vector<std::size_t> discrepancies;
  /// Cases whose abstraction still mentions the variable.
  std::vector<std::size_t> not_eliminated;
};

/// For each case, ([x]body) argument and body[x := argument] must reach the
/// same normal form whenever both normalize within max_steps.
AbstractionReport abstraction(const std::vector<AbstractionCase>& cases, AbstractionAlgorithm alg,
                              std::size_t max_steps, Execution exec);

/// One flag per transform: does it pass verify_transform.
std::vector<bool> verify_transforms(const std::vector<Transform>& transforms, Execution exec);

struct DecisionOutcome {
  std::optional<epr::Decision> decision;
  std::string error;  ///< set when grounding was too large
};

std::vector<DecisionOutcome> decide_all(const std::vector<epr::Formula>& formulas, Execution exec);

}  // namespace bausteine::batch
