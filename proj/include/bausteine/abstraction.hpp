#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bausteine/term.hpp"

namespace bausteine {

/// Variable elimination rules.
///
///   naive:      [x]x = S K K;  [x]M = K M (x not free in M);
///               [x](M N) = S ([x]M) ([x]N)
///   optimized:  naive plus [x](M x) = M when x is not free in M, tried first.
enum class AbstractionAlgorithm { Naive, Optimized };

class DuplicateVariable : public std::invalid_argument {
 public:
  explicit DuplicateVariable(const std::string& name)
      : std::invalid_argument("duplicate variable " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// [x]t. The result never contains Var(x), and applied to any a it reduces
/// to the same normal form as t[x := a].
Term abstract(std::string_view x, const Term& t, AbstractionAlgorithm alg);

/// [v1]...[vn]t, innermost (last) variable eliminated first.
Term abstract_many(const std::vector<std::string>& vars, const Term& t, AbstractionAlgorithm alg);

Term apply_curried(const Term& f, const std::vector<Term>& args);

std::string_view algorithm_name(AbstractionAlgorithm alg);

}  // namespace bausteine
