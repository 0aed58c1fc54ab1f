// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bausteine/abstraction.hpp"
#include "bausteine/batch.hpp"
#include "bausteine/epr.hpp"
#include "bausteine/golden.hpp"
#include "bausteine/logic.hpp"
#include "bausteine/parse.hpp"
#include "bausteine/reducer.hpp"
#include "bausteine/transforms.hpp"
#include "support/epr_oracle.hpp"
#include "support/generators.hpp"

using namespace bausteine;

namespace {

struct Verdict {
  bool pass = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      note = what;
    }
  }
};

Term bare(std::string_view s) {
  static const auto atoms = NamingProfile::atoms_only(ProfileKind::Modern);
  return parse(s, atoms, ParseOptions{.expand_definitions = false});
}

const char* const kOmega = "S (S K K) (S K K)";

Verdict golden_identities() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  auto expect = [&](const std::string& input, const std::string& output) {
    const auto r = normalize(bare(input), Strategy::NormalOrder, NormalizeOptions{.max_steps = kGoldenStepBound});
    v.require(r.normalized() && r.final_term == bare(output), input + " does not reach " + output);
    v.require(r.step_count <= kGoldenStepBound, input + " needs more than 30 steps");
  };
  expect("S K K x", "x");
  expect("(S K) (K K) x", "x");
  const std::string z = "(S (K S) K)";
  const std::string t = "(S (" + z + " " + z + " S) (K K))";
  for (const std::string& phi : std::vector<std::string>{"K", "S", "(S K)", z, t}) expect("S K " + phi + " x", "x");
  expect(z + " f g x", "f (g x)");
  expect(t + " f y x", "f x y");

  const auto report = run_golden();
  v.require(report.ok(), std::to_string(report.failures) + " golden cases failed");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  return v;
}

Verdict transform_counts() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<std::size_t> expected{1, 3, 13, 75, 541};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto ts = enumerate_transforms(n);
    v.require(ts.size() == expected[n - 1], "n=" + std::to_string(n) + " gives " + std::to_string(ts.size()));
    const auto ok = batch::verify_transforms(ts, batch::Execution::Parallel);
    for (std::size_t i = 0; i < ts.size(); ++i)
      v.require(ok[i], "transform " + format_map(ts[i].map) + " fails verification");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  return v;
}

Verdict church_arithmetic() {
  Verdict v;
  int equalities = 0;
  for (std::uint64_t m = 0; m <= 5; ++m) {
    for (std::uint64_t n = 0; n <= 5; ++n) {
      const auto a = church(m);
      const auto b = church(n);
      const auto sum = church_decode(church_add(a, b).term);
      const auto prod = church_decode(church_mul(a, b).term);
      v.require(sum == m + n, std::to_string(m) + "+" + std::to_string(n));
      v.require(prod == m * n, std::to_string(m) + "*" + std::to_string(n));
      equalities += (sum == m + n) + (prod == m * n);
    }
  }
  v.require(equalities == 72, std::to_string(equalities) + " of 72 equalities hold");
  return v;
}

Verdict functional_completeness() {
  Verdict v;
  for (unsigned bits = 0; bits < 16; ++bits) {
    TruthTable want{};
    for (unsigned i = 0; i < 4; ++i) want[i] = (bits >> (3 - i)) & 1u;
    const Term f = synthesize_binary_boolean(want);
    // Exhaustive evaluation over the four encoded input pairs.
    std::size_t row = 0;
    for (bool p : {false, true}) {
      for (bool q : {false, true}) {
        const Term in_p = p ? true_term() : false_term();
        const Term in_q = q ? true_term() : false_term();
        const auto r = normalize(apply_all(f, {in_p, in_q, Term::var("t"), Term::var("f")}), Strategy::NormalOrder,
                                 NormalizeOptions{.record_steps = false});
        const Term expect = Term::var(want[row] ? "t" : "f");
        v.require(r.normalized() && r.final_term == expect, "table " + format_truth_table(want) + " row " + std::to_string(row));
        ++row;
      }
    }
  }
  return v;
}

Verdict strategy_separation() {
  Verdict v;
  const Term omega = bare(kOmega);
  const Term omega2 = Term::app(omega, omega);
  const Term t = apply_all(Term::k(), {Term::var("y"), omega2});
  const auto normal = normalize(t, Strategy::NormalOrder);
  v.require(normal.normalized() && normal.final_term == Term::var("y") && normal.step_count <= 5,
            "normal order does not reach y in 5 steps");
  const auto applicative = normalize(t, Strategy::ApplicativeOrder, NormalizeOptions{.max_steps = 10'000, .record_steps = false});
  v.require(!applicative.normalized(), "applicative order normalized");
  const auto cyc = normalize(omega2, Strategy::ApplicativeOrder, NormalizeOptions{.detect_cycles = true, .record_steps = false});
  v.require(cyc.outcome == OutcomeKind::CycleDetected && cyc.cycle_period <= 5,
            std::string("omega omega: ") + std::string(outcome_name(cyc.outcome)));
  return v;
}

Verdict confluence() {
  Verdict v;
  testing::Rng rng(6);
  std::vector<Term> terms;
  for (int i = 0; i < 500; ++i) terms.push_back(testing::random_closed_term(rng, 15));
  const auto r = batch::confluence(terms, 1000, batch::Execution::Parallel);
  v.require(r.checked == 500, "checked " + std::to_string(r.checked));
  v.require(r.discrepancies.empty(), std::to_string(r.discrepancies.size()) + " discrepancies");
  v.note = v.pass ? std::to_string(r.both_normalized) + " compared" : v.note;
  return v;
}

Verdict abstraction_oracle() {
  Verdict v;
  testing::Rng rng(7);
  const std::vector<Term> atoms{Term::s(), Term::k(), Term::var("x"), Term::var("y")};
  const NormalizeOptions opts{.max_steps = 2000, .record_steps = false};
  std::size_t compared = 0;
  for (int i = 0; i < 300; ++i) {
    const Term t = testing::random_term(rng, 10, atoms);
    const Term a = testing::random_closed_term(rng, 6);
    const auto want = normalize(substitute(t, "x", a), Strategy::NormalOrder, opts);
    for (auto alg : {AbstractionAlgorithm::Naive, AbstractionAlgorithm::Optimized}) {
      const Term f = abstract("x", t, alg);
      v.require(free_vars(f).count("x") == 0, "x survives in " + print(f));
      const auto got = normalize(Term::app(f, a), Strategy::NormalOrder, opts);
      if (got.normalized() && want.normalized()) {
        ++compared;
        v.require(got.final_term == want.final_term,
                  std::string(algorithm_name(alg)) + " disagrees on " + print(t) + " with " + print(a));
      }
    }
  }
  if (v.pass) v.note = std::to_string(compared) + " compared";
  return v;
}

Verdict epr_oracle() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  testing::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto f = testing::random_epr_formula(rng);
    const bool sat = testing::brute_force_sat(f);
    const auto d = epr::decide(f);
    v.require(d.verdict == (sat ? epr::Verdict::Satisfiable : epr::Verdict::Unsatisfiable),
              "verdict differs on " + epr::to_string(f));
  }
  v.require(epr::decide("forall x. P(x) & ~P(x)").verdict == epr::Verdict::Unsatisfiable, "contradiction");
  v.require(epr::decide("exists x. exists y. forall z. R(x,z) & ~R(y,z)").verdict == epr::Verdict::Satisfiable,
            "two witnesses");
  v.require(epr::decide("exists x. forall y. R(x,y) -> R(x,y)").verdict == epr::Verdict::Satisfiable, "tautology");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  return v;
}

Verdict round_trip() {
  Verdict v;
  testing::Rng rng(9);
  const auto atoms = NamingProfile::atoms_only(ProfileKind::Modern);
  for (int i = 0; i < 1000; ++i) {
    const Term t = testing::random_closed_term(rng, 30);
    const std::string text = print(t);
    v.require(parse(text, atoms, ParseOptions{.expand_definitions = false}) == t, "round trip fails on " + text);
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"golden identities", golden_identities},
      {"transform counts", transform_counts},
      {"church arithmetic", church_arithmetic},
      {"functional completeness", functional_completeness},
      {"strategy separation", strategy_separation},
      {"confluence", confluence},
      {"abstraction oracle", abstraction_oracle},
      {"epr oracle", epr_oracle},
      {"round trip", round_trip},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.note = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %d %s (%.0f ms)%s%s\n", v.pass ? "PASS" : "FAIL", index, name, ms, v.note.empty() ? "" : ": ",
                v.note.c_str());
    failed += !v.pass;
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
