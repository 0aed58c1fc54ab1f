#include "bausteine/zoo.hpp"

#include <stdexcept>

#include "bausteine/abstraction.hpp"
#include "bausteine/parse.hpp"

namespace bausteine {

namespace {

Term bare(std::string_view text) {
  static const NamingProfile atoms = NamingProfile::atoms_only(ProfileKind::Modern);
  return parse(text, atoms, ParseOptions{.expand_definitions = false});
}

Term v(std::size_t i) { return fresh_var(i); }

}  // namespace

std::vector<ZooEntry> builtin_zoo() {
  const Term z = bare("S (K S) K");
  // S (Z Z S) (K K) with Z written out.
  const Term t = Term::app(Term::app(Term::s(), apply_all(z, {z, Term::s()})),
                           Term::app(Term::k(), Term::k()));
  const Term w = abstract_many({"f", "x"}, bare("f x x"), AbstractionAlgorithm::Optimized);

  const Term compose = Term::app(v(1), Term::app(v(2), v(3)));
  const Term flip = apply_all(v(1), {v(3), v(2)});

  return {
      {"I", bare("S K K"), 1, v(1), false},
      {"I'", bare("(S K) (K K)"), 1, v(1), false},
      {"Z", z, 3, compose, false},
      {"T", t, 3, flip, false},
      {"B", z, 3, compose, false},
      {"C", t, 3, flip, false},
      {"W", w, 2, apply_all(v(1), {v(2), v(2)}), true},
  };
}

std::optional<ZooEntry> zoo_entry(const std::string& name) {
  for (auto& e : builtin_zoo()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

VerifyResult verify_entry(const ZooEntry& entry, std::size_t max_steps) {
  Term applied = entry.definition;
  for (std::size_t i = 1; i <= entry.arity; ++i) applied = Term::app(std::move(applied), v(i));
  VerifyResult out;
  out.trace = normalize(applied, Strategy::NormalOrder, NormalizeOptions{.max_steps = max_steps});
  out.passed = out.trace.normalized() && out.trace.final_term == entry.expected;
  return out;
}

Term identity_for_any(const Term& phi) {
  if (!phi.closed()) throw std::invalid_argument("identity_for_any expects a closed term");
  return Term::app(Term::app(Term::s(), Term::k()), phi);
}

}  // namespace bausteine
