#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bausteine/reducer.hpp"
#include "bausteine/term.hpp"

namespace bausteine {

/// Church booleans: true selects its first argument, false its second.
Term true_term();   // K
Term false_term();  // S K

/// The sole connective; every other Boolean function is composed from it.
const Term& nand_term();

enum class BoolValue { True, False, NotBoolean };

struct BoolEval {
  BoolValue value = BoolValue::NotBoolean;
  /// Set when normalization hit the step bound (value is then NotBoolean).
  bool step_limit = false;
};

BoolEval eval_bool(const Term& t, std::size_t max_steps = kDefaultMaxSteps);

/// Outputs for inputs (p,q) = (F,F), (F,T), (T,F), (T,T), in that order, so
/// AND is {0,0,0,1}.
using TruthTable = std::array<bool, 4>;

/// Parses a four-character table such as "0110".
std::optional<TruthTable> parse_truth_table(std::string_view bits);
std::string format_truth_table(const TruthTable& table);

/// A closed two-argument term built only from compositions of nand_term().
Term synthesize_binary_boolean(const TruthTable& table);

/// Evaluates a two-argument boolean term on all four encoded input pairs.
std::optional<TruthTable> evaluate_binary(const Term& f, std::size_t max_steps = kDefaultMaxSteps);

struct ChurchNumeral {
  std::uint64_t n = 0;
  Term term;
};

ChurchNumeral church(std::uint64_t n);
/// Counts the f-spine of `t f x`; nullopt for anything not of the form f^k x.
std::optional<std::uint64_t> church_decode(const Term& t, std::size_t max_steps = kDefaultMaxSteps);

const Term& church_succ();
const Term& church_add_term();
const Term& church_mul_term();

/// The normalized application of the add/mul combinator to both numerals.
ChurchNumeral church_add(const ChurchNumeral& a, const ChurchNumeral& b);
ChurchNumeral church_mul(const ChurchNumeral& a, const ChurchNumeral& b);

}  // namespace bausteine
