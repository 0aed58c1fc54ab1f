#include "bausteine/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bausteine/batch.hpp"
#include "bausteine/golden.hpp"
#include "bausteine/logic.hpp"
#include "bausteine/transforms.hpp"
#include "bausteine/zoo.hpp"

namespace bausteine::cli {

namespace {

using nlohmann::json;

class Emitter {
 public:
  Emitter(std::ostream& out, OutputFormat format) : out_(out), format_(format) {}

  /// `plain` is the text line; `payload` carries the same fields for json-lines.
  void emit(std::string_view kind, const std::string& plain, json payload) {
    if (format_ == OutputFormat::Plain) {
      out_ << plain << '\n';
    } else {
      out_ << json{{"kind", kind}, {"payload", std::move(payload)}}.dump() << '\n';
    }
  }

 private:
  std::ostream& out_;
  OutputFormat format_;
};

void report_error(std::ostream& err, const CliConfig& cfg, const std::string& message,
                  std::optional<std::size_t> position = std::nullopt) {
  if (cfg.output == OutputFormat::JsonLines) {
    json payload{{"message", message}};
    if (position) payload["position"] = *position;
    err << json{{"kind", "error"}, {"payload", payload}}.dump() << '\n';
  } else {
    err << "error: " << message << '\n';
  }
}

std::string outcome_line(const ReductionTrace& trace) {
  std::string line = "OUTCOME " + std::string(outcome_name(trace.outcome));
  if (trace.outcome == OutcomeKind::CycleDetected) line += " " + std::to_string(trace.cycle_period);
  return line;
}

json outcome_payload(const ReductionTrace& trace) {
  json p{{"outcome", outcome_name(trace.outcome)}, {"steps", trace.step_count}};
  if (trace.outcome == OutcomeKind::CycleDetected) p["period"] = trace.cycle_period;
  return p;
}

/// Normalizes and prints per the config; returns the exit code.
int reduce_term(const Term& term, const CliConfig& cfg, bool trace, Emitter& emit, std::ostream& err) {
  const auto r = normalize(term, cfg.strategy,
                           NormalizeOptions{.max_steps = cfg.max_steps,
                                            .detect_cycles = cfg.detect_cycles,
                                            .record_steps = trace});
  try {
    if (trace) {
      std::size_t n = 0;
      for (const auto& s : r.steps) {
        ++n;
        const std::string printed = print(s.term);
        emit.emit("step",
                  std::to_string(n) + " " + std::string(rule_name(s.rule)) + " " + format_path(s.path) + " " + printed,
                  {{"index", n}, {"rule", rule_name(s.rule)}, {"path", format_path(s.path)}, {"term", printed}});
      }
      emit.emit("outcome", outcome_line(r), outcome_payload(r));
    } else if (!r.normalized()) {
      emit.emit("outcome", outcome_line(r), outcome_payload(r));
    }
    if (r.normalized()) {
      const std::string printed = print(r.final_term);
      emit.emit("result", printed, {{"term", printed}});
      return kExitOk;
    }
  } catch (const SizeExceeded& e) {
    report_error(err, cfg, e.what());
  }
  return kExitResourceBound;
}

bool valid_variable(const std::string& name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front()))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::optional<std::uint64_t> parse_count(const std::string& text) {
  if (text.empty() || text.size() > 9) return std::nullopt;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  return std::stoull(text);
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

int cmd_reduce(const std::string& expr, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  Emitter emit(out, cfg.output);
  Term term;
  try {
    term = parse(expr, NamingProfile::from_kind(cfg.profile));
  } catch (const ParseError& e) {
    report_error(err, cfg, e.what(), e.position());
    return kExitInputError;
  } catch (const SizeExceeded& e) {
    report_error(err, cfg, e.what());
    return kExitResourceBound;
  }
  return reduce_term(term, cfg, cfg.trace, emit, err);
}

int cmd_abstract(const std::vector<std::string>& vars, const std::string& expr, AbstractionAlgorithm alg,
                 const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto& v : vars) {
    if (!valid_variable(v)) {
      report_error(err, cfg, "not a variable name: " + v);
      return kExitInputError;
    }
  }
  try {
    const Term body = parse(expr, NamingProfile::from_kind(cfg.profile));
    const Term result = abstract_many(vars, body, alg);
    const std::string printed = print(result);
    Emitter(out, cfg.output).emit("result", printed, {{"term", printed}, {"algorithm", algorithm_name(alg)}});
    return kExitOk;
  } catch (const ParseError& e) {
    report_error(err, cfg, e.what(), e.position());
  } catch (const DuplicateVariable& e) {
    report_error(err, cfg, e.what());
  } catch (const SizeExceeded& e) {
    report_error(err, cfg, e.what());
    return kExitResourceBound;
  }
  return kExitInputError;
}

int cmd_verify_identities(const CliConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
  Emitter emit(out, cfg.output);
  std::size_t failures = 0;
  std::size_t total = 0;
  for (const auto& entry : builtin_zoo()) {
    const bool pass = verify_entry(entry, cfg.max_steps).passed;
    failures += pass ? 0 : 1;
    ++total;
    const std::string def = print(entry.definition);
    emit.emit("zoo", entry.name + " " + def + " " + (pass ? "PASS" : "FAIL"),
              {{"name", entry.name}, {"definition", def}, {"derived", entry.derived}, {"pass", pass}});
  }
  const auto report = run_golden();
  for (const auto& r : report.results) {
    failures += r.outcome.passed ? 0 : 1;
    ++total;
    emit.emit("golden", r.id + " " + (r.outcome.passed ? "PASS" : "FAIL"),
              {{"id", r.id}, {"citation", r.citation}, {"source", r.source}, {"detail", r.outcome.detail},
               {"pass", r.outcome.passed}});
  }
  emit.emit("summary", "SUMMARY passed=" + std::to_string(total - failures) + " failed=" + std::to_string(failures),
            {{"passed", total - failures}, {"failed", failures}});
  return failures == 0 ? kExitOk : 1;
}

int cmd_transforms(std::size_t n, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Transform> transforms;
  try {
    transforms = enumerate_transforms(n);
  } catch (const std::invalid_argument& e) {
    report_error(err, cfg, e.what());
    return kExitInputError;
  }
  Emitter emit(out, cfg.output);
  emit.emit("count", std::to_string(transforms.size()), {{"n", n}, {"count", transforms.size()}});
  for (const auto& t : transforms) {
    const std::string map = format_map(t.map);
    const std::string comb = print(t.combinator);
    emit.emit("transform", "k=" + std::to_string(t.k) + " map=" + map + " " + comb,
              {{"k", t.k}, {"map", map}, {"combinator", comb}});
  }
  return kExitOk;
}

int cmd_church(const std::string& op, const std::vector<std::string>& operands, const CliConfig& cfg,
               std::ostream& out, std::ostream& err) {
  const std::size_t want = op == "encode" ? 1 : 2;
  if ((op != "add" && op != "mul" && op != "encode") || operands.size() != want) {
    report_error(err, cfg, "usage: church add|mul <m> <n>  or  church encode <n>");
    return kExitInputError;
  }
  std::vector<std::uint64_t> values;
  for (const auto& s : operands) {
    auto v = parse_count(s);
    if (!v) {
      report_error(err, cfg, "not a natural number: " + s);
      return kExitInputError;
    }
    values.push_back(*v);
  }
  try {
    ChurchNumeral result;
    if (op == "encode") {
      result = church(values[0]);
    } else {
      const auto a = church(values[0]);
      const auto b = church(values[1]);
      result = op == "add" ? church_add(a, b) : church_mul(a, b);
    }
    const auto decoded = church_decode(result.term, cfg.max_steps);
    Emitter emit(out, cfg.output);
    const std::string printed = print(result.term);
    emit.emit("term", printed, {{"term", printed}});
    if (!decoded) {
      emit.emit("decoded", "decoded none", {{"value", nullptr}});
      return kExitResourceBound;
    }
    emit.emit("decoded", "decoded " + std::to_string(*decoded), {{"value", *decoded}});
    return kExitOk;
  } catch (const SizeExceeded& e) {
    report_error(err, cfg, e.what());
    return kExitResourceBound;
  }
}

int cmd_epr(std::istream& formulas, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::size_t> lines;
  std::vector<epr::Formula> parsed;
  std::vector<std::pair<std::size_t, std::string>> parse_errors;
  std::string line;
  std::size_t number = 0;
  while (std::getline(formulas, line)) {
    ++number;
    if (trim(line).empty()) continue;
    try {
      parsed.push_back(epr::parse_formula(line));
      lines.push_back(number);
    } catch (const epr::FormulaError& e) {
      parse_errors.emplace_back(number, e.what());
    }
  }
  const auto decisions = batch::decide_all(parsed, batch::Execution::Parallel);

  // Merge verdicts and parse errors back into line order.
  Emitter emit(out, cfg.output);
  int code = kExitOk;
  std::size_t d = 0;
  std::size_t e = 0;
  while (d < decisions.size() || e < parse_errors.size()) {
    if (e < parse_errors.size() && (d == decisions.size() || parse_errors[e].first < lines[d])) {
      const auto& [n, msg] = parse_errors[e++];
      err << "line " << n << ": " << msg << '\n';
      emit.emit("verdict", std::to_string(n) + " ERROR", {{"line", n}, {"verdict", "ERROR"}, {"message", msg}});
      code = kExitInputError;
      continue;
    }
    const std::size_t n = lines[d];
    const auto& outcome = decisions[d++];
    if (!outcome.decision) {
      err << "line " << n << ": " << outcome.error << '\n';
      emit.emit("verdict", std::to_string(n) + " TOOLARGE", {{"line", n}, {"verdict", "TOOLARGE"}});
      if (code == kExitOk) code = kExitResourceBound;
      continue;
    }
    const auto verdict = epr::verdict_name(outcome.decision->verdict);
    json payload{{"line", n}, {"verdict", verdict}};
    if (outcome.decision->verdict == epr::Verdict::OutOfClass) payload["reason"] = outcome.decision->reason;
    emit.emit("verdict", std::to_string(n) + " " + std::string(verdict), payload);
  }
  return code;
}

int cmd_repl(const CliConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err, bool interactive) {
  NamingProfile profile = NamingProfile::from_kind(cfg.profile);
  bool trace = cfg.trace;
  Emitter emit(out, cfg.output);
  std::string raw_line;
  while (true) {
    if (interactive) out << "> " << std::flush;
    if (!std::getline(in, raw_line)) break;
    const std::string line = trim(raw_line);
    if (line.empty()) continue;
    try {
      if (line == ":quit" || line == ":q") break;
      if (line == ":help") {
        out << ":def Name = <expr>   define a combinator for this session\n"
               ":trace on|off        show reduction steps\n"
               ":quit                leave\n"
               "<expr>               normalize and print\n";
        continue;
      }
      if (line.rfind(":trace", 0) == 0) {
        const std::string arg = trim(std::string_view(line).substr(6));
        if (arg != "on" && arg != "off") {
          report_error(err, cfg, "usage: :trace on|off");
          continue;
        }
        trace = arg == "on";
        continue;
      }
      if (line.rfind(":def", 0) == 0) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
          report_error(err, cfg, "usage: :def Name = <expr>");
          continue;
        }
        const std::string name = trim(std::string_view(line).substr(4, eq - 4));
        const Term body = parse(std::string_view(line).substr(eq + 1), profile);
        if (profile.define(name, body)) err << "warning: redefined " << name << '\n';
        continue;
      }
      if (line.front() == ':') {
        report_error(err, cfg, "unknown command " + line);
        continue;
      }
      reduce_term(parse(line, profile), cfg, trace, emit, err);
    } catch (const ParseError& e) {
      report_error(err, cfg, e.what(), e.position());
    } catch (const std::exception& e) {
      report_error(err, cfg, e.what());
    }
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_steps, bool interactive) {
  CliConfig cfg;
  if (env_max_steps) {
    auto v = parse_count(*env_max_steps);
    if (!v || *v == 0) {
      err << "error: BAUSTEINE_MAX_STEPS must be a positive integer\n";
      return kExitInputError;
    }
    cfg.max_steps = *v;
  }

  CLI::App app{"Combinatory logic workbench: S/K reduction, abstraction, Church encodings and EPR decisions",
               "bausteine"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string strategy = "normal";
  std::string profile = "modern";
  std::string output = "plain";
  app.add_option("--strategy", strategy, "Reduction strategy")->check(CLI::IsMember({"normal", "applicative"}));
  app.add_option("--max-steps", cfg.max_steps, "Step bound (env BAUSTEINE_MAX_STEPS)")->check(CLI::PositiveNumber);
  app.add_option("--profile", profile, "Naming profile")->check(CLI::IsMember({"modern", "schoenfinkel"}));
  app.add_flag("--trace", cfg.trace, "Print every reduction step");
  app.add_flag("--detect-cycles", cfg.detect_cycles, "Stop when a term repeats");
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"plain", "json-lines"}));

  std::string expr;
  auto* reduce = app.add_subcommand("reduce", "Normalize a term");
  reduce->add_option("expr", expr, "Term to reduce")->required();

  std::vector<std::string> abstract_args;
  std::string alg = "optimized";
  auto* abstract_cmd = app.add_subcommand("abstract", "Eliminate variables: abstract <var>... <expr>");
  abstract_cmd->add_option("args", abstract_args, "Variables followed by the term")->required()->expected(2, -1);
  abstract_cmd->add_option("--alg", alg, "Abstraction algorithm")->check(CLI::IsMember({"naive", "optimized"}));

  auto* verify = app.add_subcommand("verify-identities", "Check the combinator zoo and the golden identities");

  std::size_t arity = 0;
  auto* transforms = app.add_subcommand("transforms", "Enumerate the transforms of an n-ary function");
  transforms->add_option("n", arity, "Arity")->required();

  std::string church_op;
  std::vector<std::string> church_operands;
  auto* church_cmd = app.add_subcommand("church", "Church numeral arithmetic: church add|mul m n, church encode n");
  church_cmd->add_option("op", church_op, "add, mul or encode")->required();
  church_cmd->add_option("operands", church_operands, "Natural numbers")->required();

  std::string epr_path;
  auto* epr_cmd = app.add_subcommand("epr", "Decide one formula per line of a file (- for stdin)");
  epr_cmd->add_option("file", epr_path, "Formula file")->required();

  auto* repl = app.add_subcommand("repl", "Interactive session");

  std::vector<std::string> argv_storage{"bausteine"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  cfg.strategy = strategy == "applicative" ? Strategy::ApplicativeOrder : Strategy::NormalOrder;
  cfg.profile = profile == "schoenfinkel" ? ProfileKind::Schoenfinkel : ProfileKind::Modern;
  cfg.output = output == "json-lines" ? OutputFormat::JsonLines : OutputFormat::Plain;

  if (reduce->parsed()) return cmd_reduce(expr, cfg, out, err);
  if (abstract_cmd->parsed()) {
    const std::vector<std::string> vars(abstract_args.begin(), abstract_args.end() - 1);
    return cmd_abstract(vars, abstract_args.back(),
                        alg == "naive" ? AbstractionAlgorithm::Naive : AbstractionAlgorithm::Optimized, cfg, out, err);
  }
  if (verify->parsed()) return cmd_verify_identities(cfg, out, err);
  if (transforms->parsed()) return cmd_transforms(arity, cfg, out, err);
  if (church_cmd->parsed()) return cmd_church(church_op, church_operands, cfg, out, err);
  if (epr_cmd->parsed()) {
    if (epr_path == "-") return cmd_epr(in, cfg, out, err);
    std::ifstream file(epr_path);
    if (!file) {
      report_error(err, cfg, "cannot open " + epr_path);
      return kExitInputError;
    }
    return cmd_epr(file, cfg, out, err);
  }
  if (repl->parsed()) return cmd_repl(cfg, in, out, err, interactive);
  return kExitInputError;
}

}  // namespace bausteine::cli
