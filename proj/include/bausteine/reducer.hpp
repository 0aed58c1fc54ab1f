#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bausteine/term.hpp"

namespace bausteine {

enum class Strategy {
  NormalOrder,       ///< leftmost-outermost redex first
  ApplicativeOrder,  ///< leftmost-innermost redex first
};

enum class Rule { K, S };

/// One move from a node to a child.
enum class Dir : std::uint8_t { Fun, Arg };

using RedexPath = std::vector<Dir>;

/// `/` for the root, otherwise `/fun/arg/...`.
std::string format_path(const RedexPath& path);
std::optional<RedexPath> parse_path(std::string_view text);

std::optional<RedexPath> find_redex(const Term& t, Strategy strategy);

/// Subterm at path. Precondition: the path is valid for t.
const Term& subterm_at(const Term& t, const RedexPath& path);

/// Which rule the node matches, if it is a redex.
std::optional<Rule> redex_rule(const Term& t);

/// Contracts the redex at path: K a b => a, S f g x => f x (g x).
/// Throws std::invalid_argument if no redex sits at path and SizeExceeded if
/// the resulting term would exceed node_cap.
Term contract_at(const Term& t, const RedexPath& path, std::uint64_t node_cap = kDefaultNodeCap);

/// One strategy step, or nullopt when t is in normal form.
std::optional<Term> step(const Term& t, Strategy strategy, std::uint64_t node_cap = kDefaultNodeCap);

struct TraceStep {
  Term term;  ///< the term after this contraction
  RedexPath path;
  Rule rule;
};

enum class OutcomeKind { NormalForm, StepLimit, CycleDetected, SizeExceeded };

struct ReductionTrace {
  Term initial;
  std::vector<TraceStep> steps;
  OutcomeKind outcome = OutcomeKind::NormalForm;
  /// The last term reached; the normal form when outcome is NormalForm.
  Term final_term;
  std::size_t step_count = 0;
  /// Steps between the two occurrences of the repeated term.
  std::size_t cycle_period = 0;

  bool normalized() const { return outcome == OutcomeKind::NormalForm; }
};

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

struct NormalizeOptions {
  std::size_t max_steps = kDefaultMaxSteps;
  bool detect_cycles = false;
  std::uint64_t node_cap = kDefaultNodeCap;
  /// When false only the outcome, final term and step count are kept.
  bool record_steps = true;
};

ReductionTrace normalize(const Term& t, Strategy strategy, const NormalizeOptions& options = {});

std::string_view outcome_name(OutcomeKind kind);
std::string_view rule_name(Rule rule);

/// Line-oriented trace: `<step#> <rule> <path> <term>` per step, then
/// `OUTCOME <kind>` (with the period appended for cycles).
std::string serialize_trace(const ReductionTrace& trace);

enum class ExtEquality { Equal, NotEqual, Inconclusive };

/// Applies both closed terms to fresh variables _v1.._v<arity>, normalizes in
/// normal order and compares normal forms structurally.
ExtEquality ext_equal(const Term& x, const Term& y, std::size_t arity,
                      std::size_t max_steps = kDefaultMaxSteps);

std::string_view ext_equality_name(ExtEquality e);

}  // namespace bausteine
