#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bausteine/parse.hpp"
#include "bausteine/zoo.hpp"

using namespace bausteine;

namespace {

const char* const kOmegaOmega = "(S (S K K) (S K K)) (S (S K K) (S K K))";

Term bare(std::string_view s) {
  static const auto atoms = NamingProfile::atoms_only(ProfileKind::Modern);
  return parse(s, atoms, ParseOptions{.expand_definitions = false});
}

}  // namespace

TEST_CASE("every built-in entry verifies within 100 steps") {
  const auto zoo = builtin_zoo();
  CHECK(zoo.size() == 7);
  for (const auto& e : zoo) {
    CAPTURE(e.name);
    CHECK(e.definition.closed());
    const auto r = verify_entry(e, 100);
    CHECK(r.passed);
    CHECK(r.trace.step_count <= 100);
  }
}

TEST_CASE("expected forms are written over fresh variables") {
  const auto z = *zoo_entry("Z");
  CHECK(print(z.expected) == "_v1 (_v2 _v3)");
  const auto t = *zoo_entry("T");
  CHECK(print(t.expected) == "_v1 _v3 _v2");
  CHECK(print(zoo_entry("W")->expected) == "_v1 _v2 _v2");
  CHECK(zoo_entry("W")->derived);
  CHECK_FALSE(zoo_entry("I")->derived);
  CHECK_FALSE(zoo_entry("X"));
}

TEST_CASE("a wrong equation fails") {
  const ZooEntry bad{"bad", Term::k(), 1, fresh_var(1), false};
  const auto r = verify_entry(bad);
  CHECK_FALSE(r.passed);
  CHECK(r.trace.normalized());
  CHECK(r.trace.final_term == Term::app(Term::k(), fresh_var(1)));
}

TEST_CASE("the two identities and the modern aliases") {
  CHECK(zoo_entry("I")->definition == bare("S K K"));
  CHECK(zoo_entry("I'")->definition == bare("S K (K K)"));
  CHECK(zoo_entry("B")->definition == zoo_entry("Z")->definition);
  CHECK(zoo_entry("C")->definition == zoo_entry("T")->definition);
  CHECK(ext_equal(zoo_entry("I")->definition, zoo_entry("I'")->definition, 1) == ExtEquality::Equal);
}

TEST_CASE("zoo definitions agree with both naming profiles") {
  const auto modern = NamingProfile::modern();
  const auto sch = NamingProfile::schoenfinkel();
  CHECK(parse("Z", sch) == zoo_entry("Z")->definition);
  CHECK(parse("T", sch) == zoo_entry("T")->definition);
  CHECK(parse("B", modern) == zoo_entry("B")->definition);
  CHECK(parse("C", modern) == zoo_entry("C")->definition);
  CHECK(parse("W", modern) == zoo_entry("W")->definition);
  CHECK(parse("I", modern) == zoo_entry("I")->definition);
  CHECK(parse("I", sch) == zoo_entry("I")->definition);
}

TEST_CASE("S K phi is an identity for any closed phi") {
  const auto modern = NamingProfile::modern();
  for (const char* phi : {"K", "S", "S K", "S (K S) K", "S K K", kOmegaOmega}) {
    CAPTURE(phi);
    const Term id = identity_for_any(parse(phi, modern));
    const auto r = normalize(Term::app(id, Term::var("x")), Strategy::NormalOrder);
    REQUIRE(r.normalized());
    CHECK(r.final_term == Term::var("x"));
    CHECK(r.step_count == 2);
  }
  CHECK_THROWS_AS(identity_for_any(Term::var("x")), std::invalid_argument);
}

TEST_CASE("applicative order does not finish S K (omega omega) x") {
  const Term id = identity_for_any(bare(kOmegaOmega));
  const auto r = normalize(Term::app(id, Term::var("x")), Strategy::ApplicativeOrder,
                           NormalizeOptions{.max_steps = 10'000, .record_steps = false});
  CHECK(r.outcome == OutcomeKind::StepLimit);
}
