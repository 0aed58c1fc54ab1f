#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bausteine/term.hpp"

namespace bausteine {

enum class ProfileKind { Modern, Schoenfinkel };

/// Resolves uppercase names to closed combinators.
///
/// In the modern profile `C` is the flip combinator and `B` composition.
/// In the Schoenfinkel profile `C` is the constancy atom (modern K), and the
/// derived names are I, Z and T. S and K are atoms in both profiles and can
/// never be redefined.
class NamingProfile {
 public:
  static NamingProfile modern();
  static NamingProfile schoenfinkel();
  static NamingProfile from_kind(ProfileKind kind);
  /// A profile with no definitions, only the atom names.
  static NamingProfile atoms_only(ProfileKind kind);

  ProfileKind kind() const { return kind_; }
  std::string_view label() const;

  /// Atom aliases are always active, even with definitions disabled.
  std::optional<Term> atom_alias(std::string_view name) const;
  std::optional<Term> lookup(std::string_view name) const;
  const std::map<std::string, Term, std::less<>>& definitions() const { return definitions_; }

  /// Adds or replaces a definition. Returns true when an existing entry was
  /// overwritten. Throws std::invalid_argument for non-closed bodies, reserved
  /// names, or names that are not an uppercase letter followed by primes.
  bool define(const std::string& name, Term body);

  static bool valid_name(std::string_view name);

 private:
  explicit NamingProfile(ProfileKind kind) : kind_(kind) {}

  ProfileKind kind_;
  std::map<std::string, Term, std::less<>> definitions_;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { EmptyInput, UnbalancedParens, UnknownUppercaseName, UnexpectedCharacter, EmptyGroup };

  ParseError(Kind kind, std::size_t position, std::string detail);

  Kind kind() const { return kind_; }
  /// Zero-based byte offset into the input.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

struct ParseOptions {
  bool expand_definitions = true;
  std::uint64_t node_cap = kDefaultNodeCap;
};

/// Juxtaposition is left-associative application. Uppercase names are a single
/// letter plus optional primes (`I'`), so "SKK" reads as S K K; lowercase
/// identifiers `[a-z][A-Za-z0-9_]*` become variables.
Term parse(std::string_view text, const NamingProfile& profile, const ParseOptions& options = {});

}  // namespace bausteine
