#include "bausteine/golden.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

#include "bausteine/abstraction.hpp"
#include "bausteine/logic.hpp"
#include "bausteine/parse.hpp"
#include "bausteine/reducer.hpp"
#include "bausteine/transforms.hpp"
#include "bausteine/zoo.hpp"

namespace bausteine {

namespace {

const char* const kSchoenfinkel1924 = "Schoenfinkel 1924, p. 312";
const char* const kSchoenfinkelFootnote = "Schoenfinkel 1924, p. 312, footnote 3";
const char* const kCurry1929 = "Curry 1929";
const char* const kSheffer = "Schoenfinkel 1924, introduction (Sheffer 1913)";

Term modern(std::string_view text) { return parse(text, NamingProfile::modern()); }

Term term_of(const std::string& zoo_name) { return zoo_entry(zoo_name)->definition; }

/// Exact normal-order normal form within the golden step bound.
GoldenOutcome reduces_to(const Term& input, const Term& expected) {
  const auto r = normalize(input, Strategy::NormalOrder, NormalizeOptions{.max_steps = kGoldenStepBound});
  if (!r.normalized()) {
    return {false, std::string(outcome_name(r.outcome)) + " after " + std::to_string(r.step_count) + " steps"};
  }
  if (r.final_term != expected) return {false, "normal form " + print(r.final_term) + ", expected " + print(expected)};
  return {true, print(input) + " => " + print(r.final_term) + " in " + std::to_string(r.step_count) + " steps"};
}

GoldenOutcome reduces_to(std::string_view input, std::string_view expected) {
  return reduces_to(modern(input), modern(expected));
}

GoldenOutcome identity_for(const Term& phi, const std::string& label) {
  auto out = reduces_to(Term::app(identity_for_any(phi), Term::var("x")), Term::var("x"));
  out.detail = "phi = " + label + ": " + out.detail;
  return out;
}

GoldenOutcome transform_count(std::size_t n, std::size_t expected) {
  const auto count = enumerate_transforms(n).size();
  return {count == expected, "n=" + std::to_string(n) + ": " + std::to_string(count) + " transforms"};
}

GoldenOutcome ext_equal_case(const Term& a, const Term& b, std::size_t arity) {
  const auto e = ext_equal(a, b, arity);
  return {e == ExtEquality::Equal, std::string(ext_equality_name(e)) + " at arity " + std::to_string(arity)};
}

}  // namespace

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases{
      {"I_eq_SKK", "S K K x reduces to x", kSchoenfinkel1924, "I = SCC",
       [] { return reduces_to("S K K x", "x"); }},
      {"I_eq_SK_KK", "(S K)(K K) x reduces to x", kSchoenfinkelFootnote, "(SC)(CC)",
       [] { return reduces_to("(S K) (K K) x", "x"); }},
      {"I_ext_equal_I_prime", "S K K and (S K)(K K) are extensionally equal", kSchoenfinkelFootnote,
       "(SC)(CC)", [] { return ext_equal_case(term_of("I"), term_of("I'"), 1); }},
      {"K_rule", "K x y reduces to x", kCurry1929, "Kxy = x", [] { return reduces_to("K x y", "x"); }},
      {"S_rule", "S x y z reduces to x z (y z)", kCurry1929, "Sxyz = xz(yz)",
       [] { return reduces_to("S x y z", "x z (y z)"); }},
      {"I_eq_SK_phi_K", "S K phi x reduces to x for phi = K", kSchoenfinkel1924, "I = SCφ",
       [] { return identity_for(Term::k(), "K"); }},
      {"I_eq_SK_phi_S", "S K phi x reduces to x for phi = S", kSchoenfinkel1924, "I = SCφ",
       [] { return identity_for(Term::s(), "S"); }},
      {"I_eq_SK_phi_SK", "S K phi x reduces to x for phi = S K", kSchoenfinkel1924, "I = SCφ",
       [] { return identity_for(modern("S K"), "S K"); }},
      {"I_eq_SK_phi_Z", "S K phi x reduces to x for phi = Z", kSchoenfinkel1924, "I = SCφ",
       [] { return identity_for(term_of("Z"), "Z"); }},
      {"I_eq_SK_phi_T", "S K phi x reduces to x for phi = T", kSchoenfinkel1924, "I = SCφ",
       [] { return identity_for(term_of("T"), "T"); }},
      {"Z_is_composition", "Z f g x reduces to f (g x) for Z = S (K S) K", kSchoenfinkel1924, "Zfgx = f(gx)",
       [] { return reduces_to(apply_all(term_of("Z"), {Term::var("f"), Term::var("g"), Term::var("x")}),
                              modern("f (g x)")); }},
      {"Z_notation", "S(CS)C in Schoenfinkel naming is S(KS)K", kSchoenfinkel1924, "Z = S(CS)C",
       [] {
         const Term a = parse("S(CS)C", NamingProfile::schoenfinkel());
         const Term b = parse("S(KS)K", NamingProfile::modern(), ParseOptions{.expand_definitions = false});
         return GoldenOutcome{a == b && a == term_of("Z"), print(a)};
       }},
      {"T_is_flip", "T f y x reduces to f x y", kSchoenfinkel1924, "Tfyx = fxy",
       [] { return reduces_to(apply_all(term_of("T"), {Term::var("f"), Term::var("y"), Term::var("x")}),
                              modern("f x y")); }},
      {"T_notation", "S(ZZS)(CC) in Schoenfinkel naming is the flip combinator", kSchoenfinkel1924,
       "T = S(ZZS)(CC)",
       [] {
         const Term t = parse("S(ZZS)(CC)", NamingProfile::schoenfinkel());
         return GoldenOutcome{t == term_of("T"), print(t)};
       }},
      {"Z_ext_equal_B_abstraction", "Z agrees with composition obtained by abstraction", kSchoenfinkel1924,
       "Zfgx = f(gx)",
       [] {
         const Term b = abstract_many({"f", "g", "x"}, modern("f (g x)"), AbstractionAlgorithm::Naive);
         return ext_equal_case(term_of("Z"), b, 3);
       }},
      {"transforms_n2", "two variables give 3 transforms", kCurry1929, "phi(1,2), phi(2,1), phi(1,1)",
       [] { return transform_count(2, 3); }},
      {"transforms_n3", "three variables give 13 transforms", kCurry1929, "13",
       [] { return transform_count(3, 13); }},
      {"transforms_n4", "four variables give 75 transforms", kCurry1929, "75",
       [] { return transform_count(4, 75); }},
      {"transforms_n5", "five variables give 541 transforms", kCurry1929, "541",
       [] { return transform_count(5, 541); }},
      {"nand_truth_table", "the NAND combinator has truth table 1110", kSheffer, "NAND",
       [] {
         const auto table = evaluate_binary(nand_term());
         const bool ok = table && *table == TruthTable{true, true, true, false};
         return GoldenOutcome{ok, table ? format_truth_table(*table) : "not boolean"};
       }},
  };
  std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return cases;
}

GoldenReport run_golden() {
  const auto start = std::chrono::steady_clock::now();
  const auto cases = golden_cases();
  GoldenReport report;
  report.results.resize(cases.size());
  const auto n = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    const auto& c = cases[static_cast<std::size_t>(i)];
    GoldenOutcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    report.results[static_cast<std::size_t>(i)] = {c.id, c.description, c.citation, c.source, std::move(outcome)};
  }
  for (const auto& r : report.results) report.failures += r.outcome.passed ? 0 : 1;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace bausteine
