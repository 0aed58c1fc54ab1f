#include "bausteine/reducer.hpp"

#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace bausteine {

std::string format_path(const RedexPath& path) {
  if (path.empty()) return "/";
  std::string out;
  for (Dir d : path) out += d == Dir::Fun ? "/fun" : "/arg";
  return out;
}

std::optional<RedexPath> parse_path(std::string_view text) {
  if (text == "/") return RedexPath{};
  RedexPath path;
  while (!text.empty()) {
    if (text.substr(0, 4) == "/fun") {
      path.push_back(Dir::Fun);
    } else if (text.substr(0, 4) == "/arg") {
      path.push_back(Dir::Arg);
    } else {
      return std::nullopt;
    }
    text.remove_prefix(4);
  }
  if (path.empty()) return std::nullopt;
  return path;
}

std::optional<RedexPath> find_redex(const Term& t, Strategy strategy) {
  if (!t.has_redex()) return std::nullopt;
  RedexPath path;
  const Term* cur = &t;
  // Each node on the way down is an application with a redex somewhere below.
  while (true) {
    if (strategy == Strategy::NormalOrder) {
      if (cur->is_redex()) return path;
      if (cur->fun().has_redex()) {
        path.push_back(Dir::Fun);
        cur = &cur->fun();
      } else {
        path.push_back(Dir::Arg);
        cur = &cur->arg();
      }
    } else {
      if (cur->fun().has_redex()) {
        path.push_back(Dir::Fun);
        cur = &cur->fun();
      } else if (cur->arg().has_redex()) {
        path.push_back(Dir::Arg);
        cur = &cur->arg();
      } else {
        return path;
      }
    }
  }
}

const Term& subterm_at(const Term& t, const RedexPath& path) {
  const Term* cur = &t;
  for (Dir d : path) {
    if (!cur->is_app()) throw std::invalid_argument("path leaves the term at " + format_path(path));
    cur = d == Dir::Fun ? &cur->fun() : &cur->arg();
  }
  return *cur;
}

std::optional<Rule> redex_rule(const Term& t) {
  if (!t.is_redex()) return std::nullopt;
  return t.fun().fun().kind() == Term::Kind::K ? Rule::K : Rule::S;
}

Term contract_at(const Term& t, const RedexPath& path, std::uint64_t node_cap) {
  std::vector<const Term*> ancestors;
  ancestors.reserve(path.size());
  const Term* cur = &t;
  for (Dir d : path) {
    if (!cur->is_app()) throw std::invalid_argument("path leaves the term at " + format_path(path));
    ancestors.push_back(cur);
    cur = d == Dir::Fun ? &cur->fun() : &cur->arg();
  }
  const auto rule = redex_rule(*cur);
  if (!rule) throw std::invalid_argument("no redex at " + format_path(path));

  std::uint64_t contractum_size = 0;
  if (*rule == Rule::K) {
    contractum_size = cur->fun().arg().size();
  } else {
    const Term& f = cur->fun().fun().arg();
    const Term& g = cur->fun().arg();
    const Term& x = cur->arg();
    contractum_size = f.size() + g.size() + 2 * x.size() + 3;
  }
  const std::uint64_t new_size = t.size() - cur->size() + contractum_size;
  if (new_size > node_cap) throw SizeExceeded(new_size, node_cap);

  Term result;
  if (*rule == Rule::K) {
    result = cur->fun().arg();
  } else {
    const Term& f = cur->fun().fun().arg();
    const Term& g = cur->fun().arg();
    const Term& x = cur->arg();
    result = Term::app(Term::app(f, x), Term::app(g, x));
  }
  for (std::size_t i = path.size(); i-- > 0;) {
    const Term& parent = *ancestors[i];
    result = path[i] == Dir::Fun ? Term::app(std::move(result), parent.arg())
                                 : Term::app(parent.fun(), std::move(result));
  }
  return result;
}

std::optional<Term> step(const Term& t, Strategy strategy, std::uint64_t node_cap) {
  auto path = find_redex(t, strategy);
  if (!path) return std::nullopt;
  return contract_at(t, *path, node_cap);
}

ReductionTrace normalize(const Term& t, Strategy strategy, const NormalizeOptions& options) {
  if (options.max_steps == 0) throw std::invalid_argument("max_steps must be positive");
  ReductionTrace trace{.initial = t, .steps = {}, .final_term = t};
  // Structural hash -> (term, step index) for exact-equality confirmation.
  std::unordered_multimap<std::size_t, std::pair<Term, std::size_t>> seen;
  if (options.detect_cycles) seen.emplace(t.hash(), std::make_pair(t, 0));

  Term cur = t;
  while (true) {
    auto path = find_redex(cur, strategy);
    if (!path) {
      trace.outcome = OutcomeKind::NormalForm;
      break;
    }
    if (trace.step_count >= options.max_steps) {
      trace.outcome = OutcomeKind::StepLimit;
      break;
    }
    const Rule rule = *redex_rule(subterm_at(cur, *path));
    try {
      cur = contract_at(cur, *path, options.node_cap);
    } catch (const SizeExceeded&) {
      trace.outcome = OutcomeKind::SizeExceeded;
      break;
    }
    ++trace.step_count;
    if (options.record_steps) trace.steps.push_back({cur, std::move(*path), rule});
    if (options.detect_cycles) {
      auto [lo, hi] = seen.equal_range(cur.hash());
      bool repeated = false;
      for (auto it = lo; it != hi; ++it) {
        if (it->second.first == cur) {
          trace.cycle_period = trace.step_count - it->second.second;
          repeated = true;
          break;
        }
      }
      if (repeated) {
        trace.outcome = OutcomeKind::CycleDetected;
        break;
      }
      seen.emplace(cur.hash(), std::make_pair(cur, trace.step_count));
    }
  }
  trace.final_term = cur;
  return trace;
}

std::string_view outcome_name(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::NormalForm:
      return "NormalForm";
    case OutcomeKind::StepLimit:
      return "StepLimit";
    case OutcomeKind::CycleDetected:
      return "CycleDetected";
    case OutcomeKind::SizeExceeded:
      return "SizeExceeded";
  }
  return "?";
}

std::string_view rule_name(Rule rule) { return rule == Rule::K ? "K" : "S"; }

std::string serialize_trace(const ReductionTrace& trace) {
  std::string out;
  std::size_t n = 0;
  for (const auto& s : trace.steps) {
    out += std::to_string(++n);
    out += ' ';
    out += rule_name(s.rule);
    out += ' ';
    out += format_path(s.path);
    out += ' ';
    out += print(s.term);
    out += '\n';
  }
  out += "OUTCOME ";
  out += outcome_name(trace.outcome);
  if (trace.outcome == OutcomeKind::CycleDetected) out += " " + std::to_string(trace.cycle_period);
  out += '\n';
  return out;
}

ExtEquality ext_equal(const Term& x, const Term& y, std::size_t arity, std::size_t max_steps) {
  Term ax = x;
  Term ay = y;
  for (std::size_t i = 1; i <= arity; ++i) {
    ax = Term::app(std::move(ax), fresh_var(i));
    ay = Term::app(std::move(ay), fresh_var(i));
  }
  const NormalizeOptions opts{.max_steps = max_steps, .detect_cycles = true, .record_steps = false};
  const auto rx = normalize(ax, Strategy::NormalOrder, opts);
  if (!rx.normalized()) return ExtEquality::Inconclusive;
  const auto ry = normalize(ay, Strategy::NormalOrder, opts);
  if (!ry.normalized()) return ExtEquality::Inconclusive;
  return rx.final_term == ry.final_term ? ExtEquality::Equal : ExtEquality::NotEqual;
}

std::string_view ext_equality_name(ExtEquality e) {
  switch (e) {
    case ExtEquality::Equal:
      return "Equal";
    case ExtEquality::NotEqual:
      return "NotEqual";
    case ExtEquality::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

}  // namespace bausteine
