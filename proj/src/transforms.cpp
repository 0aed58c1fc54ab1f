#include "bausteine/transforms.hpp"

#include <algorithm>

#include "bausteine/abstraction.hpp"

namespace bausteine {

std::vector<std::vector<std::size_t>> enumerate_surjections(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || k > n) return out;
  // Odometer over {1..k}^n in lexicographic order, keeping the surjective ones.
  std::vector<std::size_t> map(n, 1);
  std::vector<std::size_t> hits(k + 1);
  while (true) {
    std::fill(hits.begin(), hits.end(), 0);
    for (auto v : map) ++hits[v];
    if (std::all_of(hits.begin() + 1, hits.end(), [](std::size_t h) { return h > 0; })) {
      out.push_back(map);
    }
    std::size_t i = n;
    while (i > 0 && map[i - 1] == k) map[--i] = 1;
    if (i == 0) break;
    ++map[i - 1];
  }
  return out;
}

Term transform_combinator(const std::vector<std::size_t>& map, std::size_t k) {
  std::vector<std::string> vars{"phi"};
  for (std::size_t i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
  Term body = Term::var("phi");
  for (auto idx : map) body = Term::app(std::move(body), Term::var(vars[idx]));
  return abstract_many(vars, body, AbstractionAlgorithm::Optimized);
}

std::vector<Transform> enumerate_transforms(std::size_t n) {
  if (n == 0) throw std::invalid_argument("transform arity must be positive");
  if (n > kMaxTransformArity) throw ArityTooLarge(n);
  std::vector<Transform> out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (auto& map : enumerate_surjections(n, k)) {
      Term c = transform_combinator(map, k);
      out.push_back({n, k, std::move(map), std::move(c)});
    }
  }
  return out;
}

TransformCheck verify_transform(const Transform& t, std::size_t max_steps) {
  // phi is _v1, the k variables are _v2.._v<k+1>.
  Term applied = Term::app(t.combinator, fresh_var(1));
  for (std::size_t i = 1; i <= t.k; ++i) applied = Term::app(std::move(applied), fresh_var(i + 1));
  Term expected = fresh_var(1);
  for (auto idx : t.map) expected = Term::app(std::move(expected), fresh_var(idx + 1));

  TransformCheck out;
  out.trace = normalize(applied, Strategy::NormalOrder, NormalizeOptions{.max_steps = max_steps});
  out.passed = out.trace.normalized() && out.trace.final_term == expected;
  return out;
}

std::string format_map(const std::vector<std::size_t>& map) {
  std::string out;
  for (auto v : map) out += std::to_string(v);
  return out;
}

}  // namespace bausteine
