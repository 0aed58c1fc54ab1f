#include "bausteine/epr.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_map>
#include <utility>

namespace bausteine::epr {

std::string to_string(const GroundAtom& a) {
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) out += (i ? "," : "") + a.args[i];
  return out + ")";
}

namespace {

// Negation normal form over ground literals.
struct Prop {
  enum class Kind { Lit, And, Or } kind = Kind::Lit;
  int lit = 0;
  std::vector<Prop> kids;
};

Prop join(Prop::Kind kind, Prop a, Prop b) {
  Prop out;
  out.kind = kind;
  for (Prop* p : {&a, &b}) {
    if (p->kind == kind) {
      for (auto& k : p->kids) out.kids.push_back(std::move(k));
    } else {
      out.kids.push_back(std::move(*p));
    }
  }
  return out;
}

class Grounder {
 public:
  Grounder(CNFInstance& cnf, const std::unordered_map<std::string, std::string>& binding)
      : cnf_(cnf), binding_(binding) {}

  Prop nnf(const Expr& e, bool negated) {
    switch (e.kind) {
      case Expr::Kind::Atom: {
        const int v = atom_var(e);
        return Prop{Prop::Kind::Lit, negated ? -v : v, {}};
      }
      case Expr::Kind::Not:
        return nnf(e.children[0], !negated);
      case Expr::Kind::And:
        return join(negated ? Prop::Kind::Or : Prop::Kind::And, nnf(e.children[0], negated),
                    nnf(e.children[1], negated));
      case Expr::Kind::Or:
        return join(negated ? Prop::Kind::And : Prop::Kind::Or, nnf(e.children[0], negated),
                    nnf(e.children[1], negated));
      case Expr::Kind::Implies:
        return join(negated ? Prop::Kind::And : Prop::Kind::Or, nnf(e.children[0], !negated),
                    nnf(e.children[1], negated));
      case Expr::Kind::Equal:
        break;
    }
    throw std::logic_error("equality reached the grounder");
  }

 private:
  int atom_var(const Expr& e) {
    GroundAtom a{e.predicate, {}};
    for (const auto& arg : e.args) {
      auto it = binding_.find(arg);
      a.args.push_back(it == binding_.end() ? arg : it->second);
    }
    auto [it, inserted] = cnf_.atom_table.emplace(std::move(a), cnf_.num_vars + 1);
    if (inserted) ++cnf_.num_vars;
    return it->second;
  }

  CNFInstance& cnf_;
  const std::unordered_map<std::string, std::string>& binding_;
};

void collect_vars(const Prop& p, std::set<int>& out) {
  if (p.kind == Prop::Kind::Lit) {
    out.insert(std::abs(p.lit));
    return;
  }
  for (const auto& k : p.kids) collect_vars(k, out);
}

/// Sorts and dedups literals; nullopt for a tautological clause.
std::optional<Clause> tidy(Clause c) {
  std::sort(c.begin(), c.end(), [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
  });
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == -c[i - 1]) return std::nullopt;
  }
  return c;
}

std::vector<Clause> distribute(const Prop& p) {
  switch (p.kind) {
    case Prop::Kind::Lit:
      return {{p.lit}};
    case Prop::Kind::And: {
      std::vector<Clause> out;
      for (const auto& k : p.kids) {
        for (auto& c : distribute(k)) out.push_back(std::move(c));
      }
      return out;
    }
    case Prop::Kind::Or: {
      std::vector<Clause> acc{{}};
      for (const auto& k : p.kids) {
        const auto rhs = distribute(k);
        std::vector<Clause> next;
        for (const auto& a : acc) {
          for (const auto& b : rhs) {
            Clause c = a;
            c.insert(c.end(), b.begin(), b.end());
            if (auto t = tidy(std::move(c))) next.push_back(std::move(*t));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

int tseitin(const Prop& p, CNFInstance& cnf) {
  if (p.kind == Prop::Kind::Lit) return p.lit;
  std::vector<int> kids;
  for (const auto& k : p.kids) kids.push_back(tseitin(k, cnf));
  const int aux = ++cnf.num_vars;
  if (p.kind == Prop::Kind::And) {
    Clause back{aux};
    for (int k : kids) {
      cnf.clauses.push_back({-aux, k});
      back.push_back(-k);
    }
    cnf.clauses.push_back(std::move(back));
  } else {
    Clause forth{-aux};
    for (int k : kids) {
      cnf.clauses.push_back({aux, -k});
      forth.push_back(k);
    }
    cnf.clauses.push_back(std::move(forth));
  }
  return aux;
}

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (out > kMaxInstantiations / base) throw GroundingTooLarge(base, exp);
    out *= base;
  }
  return out;
}

}  // namespace

CNFInstance ground(const Formula& f) {
  if (!classify(f).in_class) throw std::invalid_argument("formula is outside the decidable class");
  CNFInstance cnf;
  std::unordered_map<std::string, std::string> binding;
  std::vector<std::string> universals;

  std::size_t witness = 0;
  for (const auto& q : f.prefix) {
    if (q.quantifier == Quantifier::ForAll) {
      universals.push_back(q.name);
      continue;
    }
    std::string name;
    do {
      name = "c" + std::to_string(++witness);
    } while (f.constants.count(name) > 0);
    binding[q.name] = name;
    cnf.domain.push_back(name);
  }
  cnf.domain.insert(cnf.domain.end(), f.constants.begin(), f.constants.end());
  if (cnf.domain.empty()) cnf.domain.push_back("c1");

  const std::uint64_t d = cnf.domain.size();
  const std::uint64_t total = checked_power(d, universals.size());

  std::vector<std::size_t> odometer(universals.size(), 0);
  Grounder grounder(cnf, binding);
  for (std::uint64_t n = 0; n < total; ++n) {
    for (std::size_t i = 0; i < universals.size(); ++i) binding[universals[i]] = cnf.domain[odometer[i]];
    const Prop p = grounder.nnf(f.matrix, false);
    std::set<int> vars;
    collect_vars(p, vars);
    if (vars.size() <= kDistributionAtomLimit) {
      for (auto& c : distribute(p)) {
        if (auto t = tidy(std::move(c))) cnf.clauses.push_back(std::move(*t));
      }
    } else {
      cnf.clauses.push_back({tseitin(p, cnf)});
    }
    ++cnf.instantiations;
    for (std::size_t i = universals.size(); i-- > 0;) {
      if (++odometer[i] < d) break;
      odometer[i] = 0;
    }
  }
  return cnf;
}

namespace {

// 0 unassigned, +1 true, -1 false.
using Assignment = std::vector<signed char>;

int value_of(const Assignment& a, int lit) {
  const int v = a[std::abs(lit)];
  return lit > 0 ? v : -v;
}

bool solve(const std::vector<Clause>& clauses, Assignment& assign) {
  const std::size_t nvars = assign.size() - 1;
  while (true) {
    // Unit propagation to a fixed point.
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : clauses) {
        int unassigned = 0;
        int last = 0;
        bool sat = false;
        for (int lit : c) {
          const int v = value_of(assign, lit);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++unassigned;
            last = lit;
          }
        }
        if (sat) continue;
        if (unassigned == 0) return false;
        if (unassigned == 1) {
          assign[std::abs(last)] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
    }

    // Pure literals among the clauses still open.
    std::vector<unsigned char> polarity(nvars + 1, 0);  // bit 1: positive, bit 2: negative
    bool open = false;
    for (const auto& c : clauses) {
      bool sat = false;
      for (int lit : c) sat = sat || value_of(assign, lit) > 0;
      if (sat) continue;
      open = true;
      for (int lit : c) {
        if (value_of(assign, lit) == 0) polarity[std::abs(lit)] |= lit > 0 ? 1 : 2;
      }
    }
    if (!open) return true;

    bool assigned_pure = false;
    for (std::size_t v = 1; v <= nvars; ++v) {
      if (polarity[v] == 1 || polarity[v] == 2) {
        assign[v] = polarity[v] == 1 ? 1 : -1;
        assigned_pure = true;
      }
    }
    if (assigned_pure) continue;

    std::size_t branch = 0;
    for (std::size_t v = 1; v <= nvars && branch == 0; ++v) {
      if (polarity[v] != 0) branch = v;
    }
    for (signed char value : {1, -1}) {
      Assignment trial = assign;
      trial[branch] = value;
      if (solve(clauses, trial)) {
        assign = std::move(trial);
        return true;
      }
    }
    return false;
  }
}

}  // namespace

bool satisfies(const CNFInstance& cnf, const Model& model) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (int lit : c) {
      const auto v = static_cast<std::size_t>(std::abs(lit));
      if (v >= model.size()) continue;
      sat = sat || (lit > 0 ? model[v] : !model[v]);
    }
    if (!sat) return false;
  }
  return true;
}

SatResult dpll(const CNFInstance& cnf) {
  Assignment assign(static_cast<std::size_t>(cnf.num_vars) + 1, 0);
  SatResult out;
  if (!solve(cnf.clauses, assign)) return out;
  out.sat = true;
  out.model.assign(assign.size(), false);
  for (std::size_t v = 1; v < assign.size(); ++v) out.model[v] = assign[v] > 0;
  if (!satisfies(cnf, out.model)) throw std::logic_error("DPLL produced a model that violates a clause");
  return out;
}

Decision decide(const Formula& f) {
  Decision out;
  const auto cls = classify(f);
  if (!cls.in_class) {
    out.verdict = Verdict::OutOfClass;
    out.reason = cls.reason;
    return out;
  }
  const CNFInstance cnf = ground(f);
  const SatResult r = dpll(cnf);
  if (!r.sat) {
    out.verdict = Verdict::Unsatisfiable;
    return out;
  }
  out.verdict = Verdict::Satisfiable;
  for (const auto& [atom, var] : cnf.atom_table) out.model.emplace(atom, r.model[var]);
  return out;
}

Decision decide(std::string_view text) { return decide(parse_formula(text)); }

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Satisfiable:
      return "SAT";
    case Verdict::Unsatisfiable:
      return "UNSAT";
    case Verdict::OutOfClass:
      return "OUTOFCLASS";
  }
  return "?";
}

}  // namespace bausteine::epr
