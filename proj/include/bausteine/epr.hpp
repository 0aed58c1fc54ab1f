#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bausteine/formula.hpp"

namespace bausteine::epr {

inline constexpr std::uint64_t kMaxInstantiations = 1'000'000;
/// Matrices with at most this many distinct ground atoms are converted by
/// distribution; larger ones by Tseitin encoding.
inline constexpr std::size_t kDistributionAtomLimit = 12;

class GroundingTooLarge : public std::runtime_error {
 public:
  explicit GroundingTooLarge(std::uint64_t domain, std::uint64_t universals)
      : std::runtime_error("grounding needs " + std::to_string(domain) + "^" + std::to_string(universals) +
                           " instantiations, over the limit of " + std::to_string(kMaxInstantiations)) {}
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;

  auto operator<=>(const GroundAtom&) const = default;
  bool operator==(const GroundAtom&) const = default;
};

std::string to_string(const GroundAtom& a);

using Clause = std::vector<int>;

/// DIMACS-style literals: variable v is `v`, its negation `-v`.
struct CNFInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;
  std::map<GroundAtom, int> atom_table;
  /// Grounding metadata; empty for hand-built instances.
  std::vector<std::string> domain;
  std::uint64_t instantiations = 0;
};

/// Replaces existentials by fresh witness constants and instantiates the
/// universal block over every assignment from the domain (witnesses plus the
/// formula's constants, or a single constant if both are absent).
/// Precondition: classify(f).in_class.
CNFInstance ground(const Formula& f);

/// Assignment indexed by variable (index 0 unused).
using Model = std::vector<bool>;

struct SatResult {
  bool sat = false;
  Model model;
};

/// DPLL with unit propagation and pure-literal elimination, branching on the
/// lowest unassigned variable, true first. A returned model is checked
/// against every clause.
SatResult dpll(const CNFInstance& cnf);

bool satisfies(const CNFInstance& cnf, const Model& model);

enum class Verdict { Satisfiable, Unsatisfiable, OutOfClass };

struct Decision {
  Verdict verdict = Verdict::Unsatisfiable;
  std::string reason;  ///< OutOfClass only
  /// Ground atoms of the original predicates and their values in the model.
  std::map<GroundAtom, bool> model;
};

Decision decide(const Formula& f);
Decision decide(std::string_view text);

std::string_view verdict_name(Verdict v);

}  // namespace bausteine::epr
