#include "bausteine/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace bausteine {

namespace {

Term raw(std::string_view text) {
  static const NamingProfile bare = NamingProfile::atoms_only(ProfileKind::Modern);
  return parse(text, bare, ParseOptions{.expand_definitions = false});
}

constexpr std::string_view kComposition = "S (K S) K";
constexpr std::string_view kFlip = "S (S (K S) K (S (K S) K) S) (K K)";

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace

NamingProfile NamingProfile::modern() {
  NamingProfile p(ProfileKind::Modern);
  p.definitions_.emplace("I", raw("S K K"));
  p.definitions_.emplace("B", raw(kComposition));
  p.definitions_.emplace("C", raw(kFlip));
  p.definitions_.emplace("W", raw("S S (K (S K K))"));
  return p;
}

NamingProfile NamingProfile::schoenfinkel() {
  NamingProfile p(ProfileKind::Schoenfinkel);
  p.definitions_.emplace("I", raw("S K K"));
  p.definitions_.emplace("Z", raw(kComposition));
  p.definitions_.emplace("T", raw(kFlip));
  return p;
}

NamingProfile NamingProfile::atoms_only(ProfileKind kind) { return NamingProfile(kind); }

NamingProfile NamingProfile::from_kind(ProfileKind kind) {
  return kind == ProfileKind::Modern ? modern() : schoenfinkel();
}

std::string_view NamingProfile::label() const {
  return kind_ == ProfileKind::Modern ? "modern" : "schoenfinkel";
}

std::optional<Term> NamingProfile::atom_alias(std::string_view name) const {
  if (name == "S") return Term::s();
  if (name == "K") return Term::k();
  if (kind_ == ProfileKind::Schoenfinkel && name == "C") return Term::k();
  return std::nullopt;
}

std::optional<Term> NamingProfile::lookup(std::string_view name) const {
  if (auto atom = atom_alias(name)) return atom;
  auto it = definitions_.find(name);
  if (it == definitions_.end()) return std::nullopt;
  return it->second;
}

bool NamingProfile::valid_name(std::string_view name) {
  if (name.empty() || !is_upper(name.front())) return false;
  for (char c : name.substr(1)) {
    if (c != '\'') return false;
  }
  return true;
}

bool NamingProfile::define(const std::string& name, Term body) {
  if (!valid_name(name)) {
    throw std::invalid_argument("definition name must be an uppercase letter with optional primes: " + name);
  }
  if (atom_alias(name)) throw std::invalid_argument("cannot redefine atom " + name);
  if (!body.closed()) throw std::invalid_argument("definition of " + name + " is not closed");
  auto [it, inserted] = definitions_.insert_or_assign(name, std::move(body));
  return !inserted;
}

ParseError::ParseError(Kind kind, std::size_t position, std::string detail)
    : std::runtime_error(std::move(detail)), kind_(kind), position_(position) {}

Term parse(std::string_view text, const NamingProfile& profile, const ParseOptions& options) {
  // One accumulator per open group; the outermost is the whole input.
  struct Group {
    std::optional<Term> acc;
    std::size_t open_pos;
  };
  std::vector<Group> groups{{std::nullopt, 0}};
  auto push = [&](Term t) {
    auto& acc = groups.back().acc;
    acc = acc ? Term::app(std::move(*acc), std::move(t)) : std::move(t);
    if (acc->size() > options.node_cap) throw SizeExceeded(acc->size(), options.node_cap);
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      groups.push_back({std::nullopt, i});
      ++i;
    } else if (c == ')') {
      if (groups.size() == 1) {
        throw ParseError(ParseError::Kind::UnbalancedParens, i, "unmatched ')' at " + std::to_string(i));
      }
      Group g = std::move(groups.back());
      groups.pop_back();
      if (!g.acc) throw ParseError(ParseError::Kind::EmptyGroup, g.open_pos, "empty parentheses at " + std::to_string(g.open_pos));
      push(std::move(*g.acc));
      ++i;
    } else if (is_upper(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] == '\'') ++j;
      const std::string_view name = text.substr(i, j - i);
      std::optional<Term> resolved =
          options.expand_definitions ? profile.lookup(name) : profile.atom_alias(name);
      if (!resolved) {
        throw ParseError(ParseError::Kind::UnknownUppercaseName, i,
                         "unknown name '" + std::string(name) + "' at " + std::to_string(i));
      }
      push(std::move(*resolved));
      i = j;
    } else if (is_lower(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_ident(text[j])) ++j;
      push(Term::var(std::string(text.substr(i, j - i))));
      i = j;
    } else {
      throw ParseError(ParseError::Kind::UnexpectedCharacter, i,
                       "unexpected character '" + std::string(1, c) + "' at " + std::to_string(i));
    }
  }
  if (groups.size() > 1) {
    const std::size_t pos = groups.back().open_pos;
    throw ParseError(ParseError::Kind::UnbalancedParens, pos, "unclosed '(' at " + std::to_string(pos));
  }
  if (!groups.front().acc) throw ParseError(ParseError::Kind::EmptyInput, 0, "empty input");
  return std::move(*groups.front().acc);
}

}  // namespace bausteine
