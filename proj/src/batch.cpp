#include "bausteine/batch.hpp"

namespace bausteine::batch {

namespace {

template <typename Fn>
void for_each_index(std::size_t n, Execution exec, Fn&& fn) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

bool mentions(const Term& t, const std::string& name) { return free_vars(t).count(name) > 0; }

}  // namespace

std::vector<ReductionTrace> normalize_all(const std::vector<Term>& terms, Strategy strategy,
                                          const NormalizeOptions& options, Execution exec) {
  std::vector<ReductionTrace> out(terms.size());
  for_each_index(terms.size(), exec, [&](std::size_t i) { out[i] = normalize(terms[i], strategy, options); });
  return out;
}

ConfluenceReport confluence(const std::vector<Term>& terms, std::size_t max_steps, Execution exec) {
  // 0: not both normalized, 1: agree, 2: disagree
  std::vector<unsigned char> verdict(terms.size(), 0);
  const NormalizeOptions opts{.max_steps = max_steps, .record_steps = false};
  for_each_index(terms.size(), exec, [&](std::size_t i) {
    const auto normal = normalize(terms[i], Strategy::NormalOrder, opts);
    if (!normal.normalized()) return;
    const auto applicative = normalize(terms[i], Strategy::ApplicativeOrder, opts);
    if (!applicative.normalized()) return;
    verdict[i] = normal.final_term == applicative.final_term ? 1 : 2;
  });
  ConfluenceReport report;
  report.checked = terms.size();
  for (std::size_t i = 0; i < verdict.size(); ++i) {
    if (verdict[i] != 0) ++report.both_normalized;
    if (verdict[i] == 2) report.discrepancies.push_back(i);
  }
  return report;
}

AbstractionReport abstraction(const std::vector<AbstractionCase>& cases, AbstractionAlgorithm alg,
                              std::size_t max_steps, Execution exec) {
  // bit 0: both normalized, bit 1: disagree, bit 2: variable survived
  std::vector<unsigned char> flags(cases.size(), 0);
  const NormalizeOptions opts{.max_steps = max_steps, .record_steps = false};
  for_each_index(cases.size(), exec, [&](std::size_t i) {
    const auto& c = cases[i];
    const Term lifted = abstract(c.variable, c.body, alg);
    if (mentions(lifted, c.variable)) flags[i] |= 4;
    const auto via_abstraction = normalize(Term::app(lifted, c.argument), Strategy::NormalOrder, opts);
    if (!via_abstraction.normalized()) return;
    const auto via_substitution = normalize(substitute(c.body, c.variable, c.argument), Strategy::NormalOrder, opts);
    if (!via_substitution.normalized()) return;
    flags[i] |= 1;
    if (via_abstraction.final_term != via_substitution.final_term) flags[i] |= 2;
  });
  AbstractionReport report;
  report.checked = cases.size();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i] & 1) ++report.both_normalized;
    if (flags[i] & 2) report.discrepancies.push_back(i);
    if (flags[i] & 4) report.not_eliminated.push_back(i);
  }
  return report;
}

std::vector<bool> verify_transforms(const std::vector<Transform>& transforms, Execution exec) {
  // vector<bool> packs bits, so concurrent writes go through a byte vector.
  std::vector<unsigned char> ok(transforms.size(), 0);
  for_each_index(transforms.size(), exec,
                 [&](std::size_t i) { ok[i] = verify_transform(transforms[i]).passed ? 1 : 0; });
  return {ok.begin(), ok.end()};
}

std::vector<DecisionOutcome> decide_all(const std::vector<epr::Formula>& formulas, Execution exec) {
  std::vector<DecisionOutcome> out(formulas.size());
  for_each_index(formulas.size(), exec, [&](std::size_t i) {
    try {
      out[i].decision = epr::decide(formulas[i]);
    } catch (const epr::GroundingTooLarge& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

}  // namespace bausteine::batch
