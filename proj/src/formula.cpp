#include "bausteine/formula.hpp"

#include <cctype>
#include <map>
#include <utility>

namespace bausteine::epr {

Expr Expr::atom(std::string predicate, std::vector<std::string> args) {
  Expr e;
  e.kind = Kind::Atom;
  e.predicate = std::move(predicate);
  e.args = std::move(args);
  return e;
}

Expr Expr::equal(std::string lhs, std::string rhs) {
  Expr e;
  e.kind = Kind::Equal;
  e.args = {std::move(lhs), std::move(rhs)};
  return e;
}

Expr Expr::negation(Expr inner) {
  Expr e;
  e.kind = Kind::Not;
  e.children.push_back(std::move(inner));
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

bool Formula::binds(std::string_view name) const {
  for (const auto& q : prefix) {
    if (q.name == name) return true;
  }
  return false;
}

FormulaError::FormulaError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " at " + std::to_string(position)), kind_(kind), position_(position) {}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula run() {
    Formula f;
    skip_space();
    while (true) {
      const std::size_t save = pos_;
      if (!at_lower()) break;
      const std::string word = ident();
      Quantifier q;
      if (word == "exists") {
        q = Quantifier::Exists;
      } else if (word == "forall") {
        q = Quantifier::ForAll;
      } else {
        pos_ = save;
        break;
      }
      skip_space();
      const std::size_t name_pos = pos_;
      if (!at_lower()) fail("expected variable after quantifier");
      std::string name = ident();
      if (name == "exists" || name == "forall") fail("quantifier keyword used as variable", name_pos);
      if (f.binds(name)) {
        throw FormulaError(FormulaError::Kind::RequantifiedVariable, name_pos,
                           "variable '" + name + "' is already quantified");
      }
      expect('.');
      f.prefix.push_back({q, std::move(name)});
    }
    prefix_ = &f;
    f.matrix = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  Expr implication() {
    Expr lhs = disjunction();
    skip_space();
    if (text_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Expr::binary(Expr::Kind::Implies, std::move(lhs), implication());
    }
    return lhs;
  }

  Expr disjunction() {
    Expr lhs = conjunction();
    while (peek() == '|') {
      ++pos_;
      lhs = Expr::binary(Expr::Kind::Or, std::move(lhs), conjunction());
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = unary();
    while (peek() == '&') {
      ++pos_;
      lhs = Expr::binary(Expr::Kind::And, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (peek() == '~') {
      ++pos_;
      return Expr::negation(unary());
    }
    return primary();
  }

  Expr primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Expr inner = implication();
      expect(')');
      return inner;
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string pred = ident();
      std::vector<std::string> args;
      if (peek() == '(') {
        ++pos_;
        args.push_back(argument());
        while (peek() == ',') {
          ++pos_;
          args.push_back(argument());
        }
        expect(')');
      }
      check_arity(pred, args.size(), at);
      return Expr::atom(std::move(pred), std::move(args));
    }
    if (at_lower()) {
      std::string lhs = argument();
      if (peek() != '=') fail("expected '=' after term");
      ++pos_;
      std::string rhs = argument();
      return Expr::equal(std::move(lhs), std::move(rhs));
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string argument() {
    skip_space();
    const std::size_t at = pos_;
    if (!at_lower()) fail("expected a variable or constant name");
    std::string name = ident();
    if (name == "exists" || name == "forall") fail("quantifiers must form a prenex prefix", at);
    if (peek() == '(') fail("function symbol '" + name + "' is not allowed", at);
    if (!prefix_->binds(name)) prefix_->constants.insert(name);
    return name;
  }

  void check_arity(const std::string& pred, std::size_t arity, std::size_t at) {
    auto [it, inserted] = arity_.emplace(pred, arity);
    if (!inserted && it->second != arity) {
      fail("predicate '" + pred + "' used with arities " + std::to_string(it->second) + " and " +
               std::to_string(arity),
           at);
    }
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_lower() {
    skip_space();
    return pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_])) != 0;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw FormulaError(FormulaError::Kind::Syntax, at, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Formula* prefix_ = nullptr;
  std::map<std::string, std::size_t> arity_;
};

bool contains_equality(const Expr& e) {
  if (e.kind == Expr::Kind::Equal) return true;
  for (const auto& c : e.children) {
    if (contains_equality(c)) return true;
  }
  return false;
}

}  // namespace

Formula parse_formula(std::string_view text) {
  bool blank = true;
  for (char c : text) blank = blank && std::isspace(static_cast<unsigned char>(c)) != 0;
  if (blank) throw FormulaError(FormulaError::Kind::Syntax, 0, "empty formula");
  return FormulaParser(text).run();
}

Classification classify(const Formula& f) {
  bool seen_universal = false;
  for (const auto& q : f.prefix) {
    if (q.quantifier == Quantifier::ForAll) {
      seen_universal = true;
    } else if (seen_universal) {
      return {false, "universal before existential"};
    }
  }
  if (contains_equality(f.matrix)) return {false, "equality unsupported"};
  return {true, {}};
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Atom: {
      if (e.args.empty()) return e.predicate;
      std::string out = e.predicate + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? "," : "") + e.args[i];
      return out + ")";
    }
    case Expr::Kind::Equal:
      return e.args[0] + " = " + e.args[1];
    case Expr::Kind::Not:
      return "~" + to_string(e.children[0]);
    case Expr::Kind::And:
      return "(" + to_string(e.children[0]) + " & " + to_string(e.children[1]) + ")";
    case Expr::Kind::Or:
      return "(" + to_string(e.children[0]) + " | " + to_string(e.children[1]) + ")";
    case Expr::Kind::Implies:
      return "(" + to_string(e.children[0]) + " -> " + to_string(e.children[1]) + ")";
  }
  return {};
}

std::string to_string(const Formula& f) {
  std::string out;
  for (const auto& q : f.prefix) {
    out += q.quantifier == Quantifier::Exists ? "exists " : "forall ";
    out += q.name + ". ";
  }
  return out + to_string(f.matrix);
}

}  // namespace bausteine::epr
