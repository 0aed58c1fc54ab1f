#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bausteine {

/// Default hard cap on term size (node count).
inline constexpr std::uint64_t kDefaultNodeCap = 1'000'000;

/// Raised when a term grows past the configured node cap.
class SizeExceeded : public std::runtime_error {
 public:
  SizeExceeded(std::uint64_t size, std::uint64_t cap);

  std::uint64_t size() const { return size_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t size_;
  std::uint64_t cap_;
};

namespace detail {
struct Node;
}

/// An immutable applicative term: S, K, a named variable, or a binary
/// application. Copies share structure.
///
/// Every node caches its tree size, a structural hash, whether it is closed,
/// and whether any redex occurs below it, so the reducer can walk straight to
/// the next redex without scanning redex-free subtrees.
class Term {
 public:
  enum class Kind : std::uint8_t { S, K, Var, App };

  /// The atom S. Default-constructed terms are S.
  Term();

  static Term s();
  static Term k();
  static Term var(std::string name);
  static Term app(Term fun, Term arg);

  Kind kind() const;
  bool is_app() const { return kind() == Kind::App; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_atom() const { return kind() == Kind::S || kind() == Kind::K; }

  /// Variable name; empty for every other kind.
  const std::string& name() const;
  /// Children of an application. Precondition: is_app().
  const Term& fun() const;
  const Term& arg() const;

  /// Node count of the tree (shared subterms counted once per occurrence).
  std::uint64_t size() const;
  std::size_t hash() const;
  bool closed() const;
  /// True iff this node is itself a K or S redex.
  bool is_redex() const;
  /// True iff a redex occurs anywhere in this tree.
  bool has_redex() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  friend struct detail::Node;

  explicit Term(std::shared_ptr<detail::Node> node) : node_(std::move(node)) {}

  std::shared_ptr<detail::Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Left-nested application of f to each argument in order.
inline Term apply_all(Term f, std::initializer_list<Term> args) {
  for (const auto& a : args) f = Term::app(std::move(f), a);
  return f;
}

template <typename Range>
Term apply_all(Term f, const Range& args) {
  for (const auto& a : args) f = Term::app(std::move(f), a);
  return f;
}

std::set<std::string> free_vars(const Term& t);

/// Replaces every Var(name) with replacement. Terms have no binders, so no
/// capture can occur.
Term substitute(const Term& t, std::string_view name, const Term& replacement);

/// Minimal parenthesization: an argument is parenthesized iff it is an
/// application. Throws SizeExceeded when t is larger than node_cap.
std::string print(const Term& t, std::uint64_t node_cap = kDefaultNodeCap);

/// Reserved variable name `_v<i>` (1-based). The parser never produces these.
Term fresh_var(std::size_t i);

}  // namespace bausteine
