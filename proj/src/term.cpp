#include "bausteine/term.hpp"

#include <utility>
#include <vector>

namespace bausteine {

SizeExceeded::SizeExceeded(std::uint64_t size, std::uint64_t cap)
    : std::runtime_error("term size " + std::to_string(size) + " exceeds node cap " +
                         std::to_string(cap)),
      size_(size),
      cap_(cap) {}

namespace detail {

struct Node {
  Term::Kind kind = Term::Kind::S;
  std::string name;
  // Null for atoms and variables.
  Term fun_child{std::shared_ptr<Node>()};
  Term arg_child{std::shared_ptr<Node>()};
  std::uint64_t size = 1;
  std::size_t hash = 0;
  bool closed = true;
  bool redex = false;
  bool has_redex = false;

  Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;
  ~Node();
};

}  // namespace detail

namespace {

constexpr std::size_t kMix = 0x9e3779b97f4a7c15ULL;

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + kMix + (seed << 6) + (seed >> 2));
}

std::shared_ptr<detail::Node> make_atom(Term::Kind kind) {
  auto n = std::shared_ptr<detail::Node>(new detail::Node);
  n->kind = kind;
  n->hash = combine(0x51ULL, static_cast<std::size_t>(kind));
  return n;
}

const std::shared_ptr<detail::Node>& s_node() {
  static const auto node = make_atom(Term::Kind::S);
  return node;
}

const std::shared_ptr<detail::Node>& k_node() {
  static const auto node = make_atom(Term::Kind::K);
  return node;
}

}  // namespace

Term::Term() : node_(s_node()) {}

namespace detail {

// Deep left spines (long applications) would otherwise be freed recursively.
Node::~Node() {
  std::vector<Term> pending;
  auto take = [&pending](Term& child) {
    if (child.node_ && child.is_app()) pending.push_back(std::move(child));
  };
  if (kind == Term::Kind::App) {
    take(fun_child);
    take(arg_child);
  }
  while (!pending.empty()) {
    Term t = std::move(pending.back());
    pending.pop_back();
    auto& ptr = t.node_;
    if (ptr.use_count() == 1) {
      take(ptr->fun_child);
      take(ptr->arg_child);
    }
  }
}

}  // namespace detail

Term Term::s() { return Term(s_node()); }
Term Term::k() { return Term(k_node()); }

Term Term::var(std::string name) {
  auto n = std::shared_ptr<detail::Node>(new detail::Node);
  n->kind = Kind::Var;
  n->hash = combine(0x7aULL, std::hash<std::string>{}(name));
  n->name = std::move(name);
  n->closed = false;
  return Term(std::move(n));
}

Term Term::app(Term fun, Term arg) {
  auto n = std::shared_ptr<detail::Node>(new detail::Node);
  n->kind = Kind::App;
  const std::uint64_t total = 1 + fun.size() + arg.size();
  n->size = total < fun.size() ? UINT64_MAX : total;
  n->hash = combine(combine(0xa9ULL, fun.hash()), arg.hash());
  n->closed = fun.closed() && arg.closed();
  // K a b, or S f g x.
  if (fun.is_app()) {
    const Term& head = fun.fun();
    n->redex = head.kind() == Kind::K ||
               (head.is_app() && head.fun().kind() == Kind::S);
  }
  n->has_redex = n->redex || fun.has_redex() || arg.has_redex();
  n->fun_child = std::move(fun);
  n->arg_child = std::move(arg);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
const Term& Term::fun() const { return node_->fun_child; }
const Term& Term::arg() const { return node_->arg_child; }
std::uint64_t Term::size() const { return node_->size; }
std::size_t Term::hash() const { return node_->hash; }
bool Term::closed() const { return node_->closed; }
bool Term::is_redex() const { return node_->redex; }
bool Term::has_redex() const { return node_->has_redex; }

bool operator==(const Term& a, const Term& b) {
  std::vector<std::pair<const Term*, const Term*>> stack{{&a, &b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->hash() != y->hash() || x->size() != y->size() || x->kind() != y->kind()) {
      return false;
    }
    switch (x->kind()) {
      case Term::Kind::S:
      case Term::Kind::K:
        break;
      case Term::Kind::Var:
        if (x->name() != y->name()) return false;
        break;
      case Term::Kind::App:
        stack.emplace_back(&x->arg(), &y->arg());
        stack.emplace_back(&x->fun(), &y->fun());
        break;
    }
  }
  return true;
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->closed()) continue;
    if (cur->is_var()) {
      out.insert(cur->name());
    } else if (cur->is_app()) {
      stack.push_back(&cur->arg());
      stack.push_back(&cur->fun());
    }
  }
  return out;
}

Term substitute(const Term& t, std::string_view name, const Term& replacement) {
  // Post-order rebuild; closed subtrees are returned untouched.
  struct Frame {
    const Term* term;
    bool expanded;
  };
  std::vector<Frame> stack{{&t, false}};
  std::vector<Term> results;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Term& cur = *f.term;
    if (f.expanded) {
      Term arg = std::move(results.back());
      results.pop_back();
      Term fun = std::move(results.back());
      results.pop_back();
      results.push_back(Term::app(std::move(fun), std::move(arg)));
      continue;
    }
    if (cur.closed()) {
      results.push_back(cur);
    } else if (cur.is_var()) {
      results.push_back(cur.name() == name ? replacement : cur);
    } else {
      stack.push_back({&cur, true});
      stack.push_back({&cur.arg(), false});
      stack.push_back({&cur.fun(), false});
    }
  }
  return std::move(results.back());
}

std::string print(const Term& t, std::uint64_t node_cap) {
  if (t.size() > node_cap) throw SizeExceeded(t.size(), node_cap);
  enum class Op : std::uint8_t { Emit, EmitParenthesized, Space, Close };
  struct Item {
    Op op;
    const Term* term;
  };
  std::string out;
  std::vector<Item> stack{{Op::Emit, &t}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    if (item.op == Op::Space) {
      out += ' ';
      continue;
    }
    if (item.op == Op::Close) {
      out += ')';
      continue;
    }
    const Term& cur = *item.term;
    switch (cur.kind()) {
      case Term::Kind::S:
        out += 'S';
        break;
      case Term::Kind::K:
        out += 'K';
        break;
      case Term::Kind::Var:
        out += cur.name();
        break;
      case Term::Kind::App:
        if (item.op == Op::EmitParenthesized) {
          out += '(';
          stack.push_back({Op::Close, nullptr});
        }
        stack.push_back({cur.arg().is_app() ? Op::EmitParenthesized : Op::Emit, &cur.arg()});
        stack.push_back({Op::Space, nullptr});
        stack.push_back({Op::Emit, &cur.fun()});
        break;
    }
  }
  return out;
}

Term fresh_var(std::size_t i) { return Term::var("_v" + std::to_string(i)); }

}  // namespace bausteine
