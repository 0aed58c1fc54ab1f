#include "bausteine/logic.hpp"

#include "bausteine/abstraction.hpp"

namespace bausteine {

namespace {

constexpr auto kAlg = AbstractionAlgorithm::Optimized;

Term var(const char* name) { return Term::var(name); }

Term nand(const Term& a, const Term& b) { return apply_all(nand_term(), {a, b}); }
Term negate(const Term& a) { return nand(a, a); }
Term conj(const Term& a, const Term& b) { return negate(nand(a, b)); }
Term disj(const Term& a, const Term& b) { return nand(negate(a), negate(b)); }
Term exclusive(const Term& a, const Term& b) {
  const Term m = nand(a, b);
  return nand(nand(a, m), nand(b, m));
}

Term body_for(const TruthTable& table) {
  const Term p = var("p");
  const Term q = var("q");
  const Term tautology = nand(p, negate(p));
  unsigned index = 0;
  for (bool bit : table) index = (index << 1) | (bit ? 1u : 0u);
  switch (index) {
    case 0b0000: return negate(tautology);
    case 0b0001: return conj(p, q);
    case 0b0010: return conj(p, negate(q));
    case 0b0011: return negate(negate(p));
    case 0b0100: return conj(negate(p), q);
    case 0b0101: return negate(negate(q));
    case 0b0110: return exclusive(p, q);
    case 0b0111: return disj(p, q);
    case 0b1000: return negate(disj(p, q));
    case 0b1001: return negate(exclusive(p, q));
    case 0b1010: return negate(q);
    case 0b1011: return disj(p, negate(q));
    case 0b1100: return negate(p);
    case 0b1101: return disj(negate(p), q);
    case 0b1110: return nand(p, q);
    default: return tautology;
  }
}

}  // namespace

Term true_term() { return Term::k(); }
Term false_term() { return Term::app(Term::s(), Term::k()); }

const Term& nand_term() {
  static const Term n = [] {
    const Term p = var("p");
    const Term q = var("q");
    // p (q false true) true
    const Term body = apply_all(p, {apply_all(q, {false_term(), true_term()}), true_term()});
    return abstract_many({"p", "q"}, body, kAlg);
  }();
  return n;
}

BoolEval eval_bool(const Term& t, std::size_t max_steps) {
  const Term a = fresh_var(1);
  const Term b = fresh_var(2);
  const auto r = normalize(apply_all(t, {a, b}), Strategy::NormalOrder,
                           NormalizeOptions{.max_steps = max_steps, .record_steps = false});
  if (!r.normalized()) return {BoolValue::NotBoolean, true};
  if (r.final_term == a) return {BoolValue::True, false};
  if (r.final_term == b) return {BoolValue::False, false};
  return {BoolValue::NotBoolean, false};
}

std::optional<TruthTable> parse_truth_table(std::string_view bits) {
  if (bits.size() != 4) return std::nullopt;
  TruthTable table{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (bits[i] != '0' && bits[i] != '1') return std::nullopt;
    table[i] = bits[i] == '1';
  }
  return table;
}

std::string format_truth_table(const TruthTable& table) {
  std::string out;
  for (bool b : table) out += b ? '1' : '0';
  return out;
}

Term synthesize_binary_boolean(const TruthTable& table) {
  return abstract_many({"p", "q"}, body_for(table), kAlg);
}

std::optional<TruthTable> evaluate_binary(const Term& f, std::size_t max_steps) {
  TruthTable out{};
  std::size_t i = 0;
  for (bool p : {false, true}) {
    for (bool q : {false, true}) {
      const Term applied = apply_all(f, {p ? true_term() : false_term(), q ? true_term() : false_term()});
      const auto r = eval_bool(applied, max_steps);
      if (r.value == BoolValue::NotBoolean) return std::nullopt;
      out[i++] = r.value == BoolValue::True;
    }
  }
  return out;
}

const Term& church_succ() {
  static const Term t = abstract_many({"n", "f", "x"}, Term::app(var("f"), apply_all(var("n"), {var("f"), var("x")})), kAlg);
  return t;
}

const Term& church_add_term() {
  static const Term t = abstract_many(
      {"m", "n", "f", "x"},
      apply_all(var("m"), {var("f"), apply_all(var("n"), {var("f"), var("x")})}), kAlg);
  return t;
}

const Term& church_mul_term() {
  static const Term t =
      abstract_many({"m", "n", "f"}, Term::app(var("m"), Term::app(var("n"), var("f"))), kAlg);
  return t;
}

ChurchNumeral church(std::uint64_t n) {
  Term t = abstract_many({"f", "x"}, var("x"), kAlg);
  for (std::uint64_t i = 0; i < n; ++i) {
    t = normalize(Term::app(church_succ(), t), Strategy::NormalOrder, NormalizeOptions{.record_steps = false}).final_term;
  }
  return {n, t};
}

std::optional<std::uint64_t> church_decode(const Term& t, std::size_t max_steps) {
  const Term f = fresh_var(1);
  const Term x = fresh_var(2);
  const auto r = normalize(apply_all(t, {f, x}), Strategy::NormalOrder,
                           NormalizeOptions{.max_steps = max_steps, .record_steps = false});
  if (!r.normalized()) return std::nullopt;
  std::uint64_t count = 0;
  const Term* cur = &r.final_term;
  while (cur->is_app()) {
    if (cur->fun() != f) return std::nullopt;
    ++count;
    cur = &cur->arg();
  }
  if (*cur != x) return std::nullopt;
  return count;
}

namespace {

ChurchNumeral combine(const Term& op, const ChurchNumeral& a, const ChurchNumeral& b, std::uint64_t n) {
  const auto r = normalize(apply_all(op, {a.term, b.term}), Strategy::NormalOrder,
                           NormalizeOptions{.record_steps = false});
  return {n, r.final_term};
}

}  // namespace

ChurchNumeral church_add(const ChurchNumeral& a, const ChurchNumeral& b) {
  return combine(church_add_term(), a, b, a.n + b.n);
}

ChurchNumeral church_mul(const ChurchNumeral& a, const ChurchNumeral& b) {
  return combine(church_mul_term(), a, b, a.n * b.n);
}

}  // namespace bausteine
