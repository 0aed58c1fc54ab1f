#include "bausteine/abstraction.hpp"

#include <set>

namespace bausteine {

namespace {

bool occurs(std::string_view x, const Term& t) {
  if (t.closed()) return false;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->closed()) continue;
    if (cur->is_var()) {
      if (cur->name() == x) return true;
    } else if (cur->is_app()) {
      stack.push_back(&cur->arg());
      stack.push_back(&cur->fun());
    }
  }
  return false;
}

Term identity() { return Term::app(Term::app(Term::s(), Term::k()), Term::k()); }

}  // namespace

Term abstract(std::string_view x, const Term& t, AbstractionAlgorithm alg) {
  if (t.is_var() && t.name() == x) return identity();
  if (!occurs(x, t)) return Term::app(Term::k(), t);
  // t is an application containing x.
  if (alg == AbstractionAlgorithm::Optimized && t.arg().is_var() && t.arg().name() == x &&
      !occurs(x, t.fun())) {
    return t.fun();
  }
  return Term::app(Term::app(Term::s(), abstract(x, t.fun(), alg)), abstract(x, t.arg(), alg));
}

Term abstract_many(const std::vector<std::string>& vars, const Term& t, AbstractionAlgorithm alg) {
  std::set<std::string_view> distinct;
  for (const auto& v : vars) {
    if (!distinct.insert(v).second) throw DuplicateVariable(v);
  }
  Term out = t;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = abstract(*it, out, alg);
  return out;
}

Term apply_curried(const Term& f, const std::vector<Term>& args) { return apply_all(f, args); }

std::string_view algorithm_name(AbstractionAlgorithm alg) {
  return alg == AbstractionAlgorithm::Naive ? "naive" : "optimized";
}

}  // namespace bausteine
