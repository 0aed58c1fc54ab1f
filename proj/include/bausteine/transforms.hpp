#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "bausteine/reducer.hpp"
#include "bausteine/term.hpp"

namespace bausteine {

inline constexpr std::size_t kMaxTransformArity = 6;

class ArityTooLarge : public std::invalid_argument {
 public:
  explicit ArityTooLarge(std::size_t n)
      : std::invalid_argument("transform arity " + std::to_string(n) + " exceeds " +
                              std::to_string(kMaxTransformArity)) {}
};

/// A permutation and/or identification of the arguments of an n-ary function:
/// phi v_map(1) .. v_map(n) as a function of v1..vk.
struct Transform {
  std::size_t n = 1;
  std::size_t k = 1;
  /// map[i] is the 1-based variable index for argument position i+1;
  /// surjective onto 1..k.
  std::vector<std::size_t> map;
  Term combinator;
};

/// Every surjection {1..n} -> {1..k} for k = 1..n, ordered by (k, map).
/// The count is the ordered Bell number of n.
std::vector<Transform> enumerate_transforms(std::size_t n);

/// Surjections only, without building combinators.
std::vector<std::vector<std::size_t>> enumerate_surjections(std::size_t n, std::size_t k);

Term transform_combinator(const std::vector<std::size_t>& map, std::size_t k);

struct TransformCheck {
  bool passed = false;
  ReductionTrace trace;
};

/// Applies the combinator to a fresh phi and v1..vk and checks the normal
/// form is literally phi v_map(1) .. v_map(n).
TransformCheck verify_transform(const Transform& t, std::size_t max_steps = kDefaultMaxSteps);

/// "121" style rendering of the map.
std::string format_map(const std::vector<std::size_t>& map);

}  // namespace bausteine
