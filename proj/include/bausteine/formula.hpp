#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bausteine::epr {

enum class Quantifier { Exists, ForAll };

struct QuantifiedVar {
  Quantifier quantifier;
  std::string name;
};

/// Quantifier-free matrix. Atom arguments are names; whether a name is a
/// variable or a constant is decided by the prefix.
struct Expr {
  enum class Kind { Atom, Equal, Not, And, Or, Implies };

  Kind kind = Kind::Atom;
  std::string predicate;           ///< Atom only
  std::vector<std::string> args;   ///< Atom, Equal
  std::vector<Expr> children;      ///< Not: 1, And/Or/Implies: 2

  static Expr atom(std::string predicate, std::vector<std::string> args);
  static Expr equal(std::string lhs, std::string rhs);
  static Expr negation(Expr e);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);
};

struct Formula {
  std::vector<QuantifiedVar> prefix;
  Expr matrix;
  std::set<std::string> constants;

  bool binds(std::string_view name) const;
};

class FormulaError : public std::runtime_error {
 public:
  enum class Kind {
    Syntax,
    /// A name quantified a second time.
    RequantifiedVariable,
  };

  FormulaError(Kind kind, std::size_t position, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// `exists x. forall y. <matrix>` with `~` > `&` > `|` > `->` (right
/// associative), atoms `P(x, y)` or `P`, and `x = y`. Lowercase names not
/// bound by the prefix are constants. Function terms are rejected.
Formula parse_formula(std::string_view text);

struct Classification {
  bool in_class = true;
  std::string reason;
};

/// In class iff every existential precedes every universal and no equality
/// occurs.
Classification classify(const Formula& f);

std::string to_string(const Expr& e);
std::string to_string(const Formula& f);

}  // namespace bausteine::epr
