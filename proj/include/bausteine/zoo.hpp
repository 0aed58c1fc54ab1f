#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bausteine/reducer.hpp"
#include "bausteine/term.hpp"

namespace bausteine {

/// A named combinator together with the equation it must satisfy.
struct ZooEntry {
  std::string name;
  Term definition;  ///< closed, over S and K only
  std::size_t arity = 1;
  /// Normal form expected for `definition _v1 .. _v<arity>`.
  Term expected;
  /// True when the definition comes from abstraction rather than a historical formula.
  bool derived = false;
};

/// I, I', Z, T, B, C and W.
std::vector<ZooEntry> builtin_zoo();

/// Looks an entry up by name in builtin_zoo().
std::optional<ZooEntry> zoo_entry(const std::string& name);

struct VerifyResult {
  bool passed = false;
  ReductionTrace trace;
};

/// Applies the definition to fresh variables and checks the normal-order
/// normal form matches `expected` exactly.
VerifyResult verify_entry(const ZooEntry& entry, std::size_t max_steps = kDefaultMaxSteps);

/// S K phi: an identity for any closed phi.
Term identity_for_any(const Term& phi);

}  // namespace bausteine
