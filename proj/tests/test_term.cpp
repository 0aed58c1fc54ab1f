#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bausteine/parse.hpp"
#include "bausteine/term.hpp"
#include "support/generators.hpp"

using namespace bausteine;

namespace {

const NamingProfile& modern() {
  static const auto p = NamingProfile::modern();
  return p;
}

Term p(std::string_view s) { return parse(s, modern()); }

Term S() { return Term::s(); }
Term K() { return Term::k(); }
Term V(const char* n) { return Term::var(n); }
Term A(Term f, Term a) { return Term::app(std::move(f), std::move(a)); }

}  // namespace

TEST_CASE("parse: juxtaposition is left associative") {
  CHECK(p("S K K") == A(A(S(), K()), K()));
  CHECK(p("S (K S) K") == A(A(S(), A(K(), S())), K()));
  CHECK(p("SKK") == p("S K K"));
  CHECK(p("  ((S)) ") == S());
}

TEST_CASE("parse: lowercase identifiers become variables") {
  CHECK(p("x") == V("x"));
  CHECK(p("f x_1 yY2") == A(A(V("f"), V("x_1")), V("yY2")));
}

TEST_CASE("parse: errors carry kind and position") {
  auto kind_of = [](std::string_view text) {
    try {
      p(text);
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error for " << text);
    return ParseError::Kind::EmptyInput;
  };
  CHECK(kind_of("S (K") == ParseError::Kind::UnbalancedParens);
  CHECK(kind_of("S K)") == ParseError::Kind::UnbalancedParens);
  CHECK(kind_of("   ") == ParseError::Kind::EmptyInput);
  CHECK(kind_of("") == ParseError::Kind::EmptyInput);
  CHECK(kind_of("S Q") == ParseError::Kind::UnknownUppercaseName);
  CHECK(kind_of("S ()") == ParseError::Kind::EmptyGroup);
  CHECK(kind_of("_v1") == ParseError::Kind::UnexpectedCharacter);

  try {
    p("S (K");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    p("S K Q");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("profiles: C means flip in modern naming and constancy in Schoenfinkel naming") {
  const auto sch = NamingProfile::schoenfinkel();
  CHECK(parse("C", sch) == K());
  CHECK(parse("S(CS)C", sch) == parse("S(KS)K", modern(), ParseOptions{.expand_definitions = false}));
  CHECK(parse("C", modern()) != K());
  CHECK(parse("B", modern()) == parse("Z", sch));
  CHECK(parse("C", modern()) == parse("T", sch));
  // Schoenfinkel naming has no B; modern naming has no Z.
  CHECK_THROWS_AS(parse("B", sch), ParseError);
  CHECK_THROWS_AS(parse("Z", modern()), ParseError);
}

TEST_CASE("profiles: every definition is closed and over S and K only") {
  for (const auto& prof : {NamingProfile::modern(), NamingProfile::schoenfinkel()}) {
    for (const auto& [name, body] : prof.definitions()) {
      CAPTURE(name);
      CHECK(body.closed());
      CHECK(free_vars(body).empty());
    }
  }
}

TEST_CASE("profiles: definitions can be disabled") {
  CHECK_THROWS_AS(parse("I", modern(), ParseOptions{.expand_definitions = false}), ParseError);
  CHECK(parse("I x", modern()) == p("S K K x"));
}

TEST_CASE("profiles: define validates names and bodies") {
  auto prof = NamingProfile::modern();
  CHECK_FALSE(prof.define("M", p("S K")));
  CHECK(prof.define("M", p("K")));  // overwrite reported
  CHECK(parse("M", prof) == K());
  CHECK(prof.define("I", K()));
  CHECK(parse("I", prof) == K());
  CHECK_THROWS_AS(prof.define("S", K()), std::invalid_argument);
  CHECK_THROWS_AS(prof.define("K", K()), std::invalid_argument);
  CHECK_THROWS_AS(prof.define("m", K()), std::invalid_argument);
  CHECK_THROWS_AS(prof.define("Mx", K()), std::invalid_argument);
  CHECK_THROWS_AS(prof.define("N", V("x")), std::invalid_argument);
  CHECK(prof.define("N'", S()) == false);
  CHECK(parse("N'", prof) == S());
}

TEST_CASE("print: minimal parenthesization") {
  CHECK(print(A(A(S(), K()), K())) == "S K K");
  CHECK(print(A(S(), A(K(), K()))) == "S (K K)");
  CHECK(print(V("x")) == "x");
  CHECK(print(p("S (K S) K")) == "S (K S) K");
  CHECK(print(p("f (g (h x)) y")) == "f (g (h x)) y");
  CHECK(print(p("((S K) K)")) == "S K K");
}

TEST_CASE("print: refuses terms over the node cap") {
  Term t = S();
  for (int i = 0; i < 10; ++i) t = A(t, K());
  CHECK(t.size() == 21);
  CHECK_THROWS_AS(print(t, 20), SizeExceeded);
  CHECK_NOTHROW(print(t, 21));
}

TEST_CASE("parse: node cap") {
  CHECK_THROWS_AS(parse("S K K K", modern(), ParseOptions{.node_cap = 5}), SizeExceeded);
  CHECK_NOTHROW(parse("S K K K", modern(), ParseOptions{.node_cap = 7}));
}

TEST_CASE("free_vars") {
  CHECK(free_vars(p("S K K")).empty());
  CHECK(free_vars(p("S x (K y)")) == std::set<std::string>{"x", "y"});
  CHECK(free_vars(p("x x")) == std::set<std::string>{"x"});
}

TEST_CASE("substitute") {
  CHECK(substitute(V("x"), "x", K()) == K());
  CHECK(substitute(p("K y"), "x", S()) == p("K y"));
  CHECK(substitute(p("x x"), "x", p("S K")) == p("(S K) (S K)"));
  CHECK(substitute(p("f x (g x)"), "x", p("K K")) == p("f (K K) (g (K K))"));
}

TEST_CASE("term metadata") {
  const Term t = p("S K K x");
  CHECK(t.size() == 7);
  CHECK_FALSE(t.closed());
  CHECK(t.is_redex());
  CHECK(p("S K K").has_redex() == false);
  CHECK(p("K x y").is_redex());
  CHECK(p("f (K x y)").has_redex());
  CHECK_FALSE(p("f (K x y)").is_redex());
  CHECK(p("S K K").hash() == p("S K K").hash());
}

TEST_CASE("deep left spines are built, compared, printed and freed without recursion") {
  Term t = S();
  for (int i = 0; i < 200000; ++i) t = A(std::move(t), K());
  Term u = S();
  for (int i = 0; i < 200000; ++i) u = A(std::move(u), K());
  CHECK(t == u);
  CHECK(print(t).size() == 1 + 2 * 200000);
  CHECK(free_vars(t).empty());
}

TEST_CASE("property: parse(print(t)) == t for random closed terms") {
  testing::Rng rng(9);
  const auto atoms_only = NamingProfile::atoms_only(ProfileKind::Modern);
  for (int i = 0; i < 1000; ++i) {
    const Term t = testing::random_closed_term(rng, 30);
    const std::string text = print(t);
    CAPTURE(text);
    CHECK(parse(text, atoms_only, ParseOptions{.expand_definitions = false}) == t);
    if (t.is_app()) CHECK(text.front() != '(');
  }
}

TEST_CASE("property: substituting a variable for itself is the identity") {
  testing::Rng rng(10);
  const std::vector<Term> atoms{S(), K(), V("x"), V("y")};
  for (int i = 0; i < 300; ++i) {
    const Term t = testing::random_term(rng, 25, atoms);
    CHECK(substitute(t, "x", V("x")) == t);
    CHECK(substitute(t, "z", K()) == t);
  }
}
