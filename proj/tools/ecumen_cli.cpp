// Command-line front end. Exit codes: 0 verdict true, 1 verdict false, 2 usage or input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ecumen/base.hpp"
#include "ecumen/formula.hpp"
#include "ecumen/prover.hpp"
#include "ecumen/semantics.hpp"
#include "ecumen/simulation.hpp"
#include "ecumen/suite.hpp"
#include "ecumen/universe.hpp"

using namespace ecumen;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  std::string universe;
  std::string base_file;
  std::string proof_file;
  std::string kind = "strong";
  std::string strategy = "degree";
  std::string vocab;
  std::string assume;
  bool trace = false;
  std::string text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// "A, B |- C" or just "C".
std::pair<std::vector<Formula>, Formula> parse_sequent(const std::string& text) {
  std::vector<Formula> ctx;
  std::string goal = text;
  auto turnstile = text.find("|-");
  if (turnstile != std::string::npos) {
    std::string lhs = text.substr(0, turnstile);
    goal = text.substr(turnstile + 2);
    std::string cur;
    for (char c : lhs + ",") {
      if (c != ',') {
        cur += c;
        continue;
      }
      if (cur.find_first_not_of(" \t") != std::string::npos) ctx.push_back(parse(cur));
      cur.clear();
    }
  }
  return {ctx, parse(goal)};
}

std::string sequent_text(const std::vector<Formula>& ctx, const Formula& a) {
  return (ctx.empty() ? "" : render_list(ctx) + " ") + "|- " + render(a);
}

UniverseConfig universe_for(const Opts& o, const std::vector<Formula>& fs) {
  if (!o.universe.empty()) return parse_universe_config(o.universe);
  UniverseConfig cfg;
  std::set<std::string> names;
  for (const auto& f : fs)
    for (const auto& a : atoms(f)) names.insert(a);
  cfg.vocab.assign(names.begin(), names.end());
  if (cfg.vocab.empty()) cfg.vocab = {"p"};
  return cfg;
}

void print_universe(std::ostream& os, const Universe& u) {
  os << "universe: " << render_config(u.config()) << "\n";
  os << "fingerprint: " << u.fingerprint() << "\n";
  os << "bases: " << u.size() << "\n";
}

std::vector<Basic> vocab_of(const Opts& o, const Base& s) {
  if (!o.vocab.empty()) return split_list(o.vocab);
  std::vector<Basic> out;
  for (const auto& b : s.basics())
    if (b != kBot) out.push_back(b);
  return out;
}

Base load_base(const Opts& o) {
  if (o.base_file.empty()) throw UsageError("--base FILE is required");
  return parse_base(read_file(o.base_file));
}

int cmd_parse(const Opts& o, std::ostream& os) {
  Formula f = parse(o.text);
  os << "input: " << o.text << "\n";
  os << "formula: " << render(f) << "\n";
  os << "complexity: " << complexity(f) << "\n";
  os << "intuitionistic: " << (is_intuitionistic(f) ? "yes" : "no") << "\n";
  os << "translation: " << render(dn_translate(f)) << "\n";
  return 0;
}

int cmd_derive(const Opts& o, std::ostream& os) {
  Base s = load_base(o);
  std::set<Basic> ctx;
  for (const auto& a : split_list(o.assume)) ctx.insert(a);
  const Basic goal = o.text;
  os << "base: " << render_base_inline(s) << "\n";
  os << "goal: ";
  for (const auto& a : ctx) os << a << " ";
  os << "|- " << goal << "\n";
  auto w = derive_witness(s, ctx, goal);
  os << "verdict: " << (w ? "derivable" : "not derivable") << "\n";
  if (!w) return 1;
  os << render_derivation(*w) << "\n";
  return 0;
}

int cmd_check_base(const Opts& o, std::ostream& os) {
  Base s = load_base(o);
  const auto vocab = vocab_of(o, s);
  const bool consistent = is_consistent(s);
  os << "rules: " << s.size() << "\n" << render_base(s);
  os << "consistent: " << (consistent ? "yes" : "no") << "\n";
  os << "bot-complete: " << (is_bot_complete(s, vocab) ? "yes" : "no") << "\n";
  return consistent ? 0 : 1;
}

int cmd_bot_complete(const Opts& o, std::ostream& os) {
  Base s = load_base(o);
  const auto vocab = vocab_of(o, s);
  Base full = bot_complete(s, vocab);
  os << "vocab: ";
  for (std::size_t i = 0; i < vocab.size(); ++i) os << (i ? "," : "") << vocab[i];
  os << "\n" << render_base(full);
  const bool ok = is_consistent(full) && is_bot_complete(full, vocab);
  os << "consistent and bot-complete: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_decide(const Opts& o, std::ostream& os) {
  auto [ctx, a] = parse_sequent(o.text);
  os << "sequent: " << sequent_text(ctx, a) << "\n";
  os << "kind: " << o.kind << "\n";
  const JudgementKind kind = parse_kind(o.kind);
  std::vector<Formula> all = ctx;
  all.push_back(a);
  Universe u(universe_for(o, all));
  if (kind == JudgementKind::Strong) {
    const bool exact = decide_strong(ctx, a);
    const bool in_u = strong_valid_in_universe(u, ctx, a);
    os << "verdict: " << (exact ? "valid" : "not valid") << " [exact via prover]\n";
    print_universe(os, u);
    os << "universe verdict: " << (in_u ? "valid" : "not valid") << " [universe-relative]\n";
    if (exact != in_u) os << "disagreement: prover and universe differ; the prover is authoritative\n";
    return exact ? 0 : 1;
  }
  print_universe(os, u);
  auto cx = find_weak_counterexample(u, ctx, a, kind);
  os << "verdict: " << (cx ? "not valid" : "valid") << " [universe-relative]\n";
  if (cx) {
    os << "witness: " << u.describe(cx->base) << "\n";
    if (o.trace) os << render_trace(u, cx->trace);
    return 1;
  }
  return 0;
}

int cmd_check_proof(const Opts& o, std::ostream& os) {
  if (o.proof_file.empty()) throw UsageError("--proof FILE is required");
  NDProof p = parse_proof(read_file(o.proof_file));
  try {
    NDSequent s = check_nd(p);
    os << "proof: ok\n";
    os << "sequent: " << sequent_text(s.open, s.conclusion) << "\n";
    return 0;
  } catch (const NDError& e) {
    os << "proof: rejected\n";
    os << "rule: " << e.rule() << "\n";
    os << "path: " << e.path() << "\n";
    os << "error: " << e.what() << "\n";
    return 1;
  }
}

int cmd_universe_check(const Opts& o, std::ostream& os) {
  UniverseConfig cfg = o.universe.empty() ? default_config() : parse_universe_config(o.universe);
  Universe u(cfg);
  print_universe(os, u);
  os << "pool: " << u.pool().size() << "\n";
  for (const auto& r : u.pool()) os << "  " << render_rule(r) << "\n";
  // Derivability facts must persist along every cover.
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const BaseId s = static_cast<BaseId>(i);
    for (BaseId t : u.covers(s)) {
      ++pairs;
      for (std::size_t b = 0; b < u.basics().size(); ++b) {
        if ((u.proves(s, b) && !u.proves(t, b)) || (u.refutes(s, b) && !u.refutes(t, b))) {
          os << "monotonicity: violated at " << u.describe(s) << " -> " << u.describe(t) << "\n";
          return 1;
        }
      }
    }
  }
  os << "monotonicity: ok (" << pairs << " covers)\n";
  return 0;
}

int cmd_counterexample(const Opts& o, std::ostream& os) {
  auto [ctx, a] = parse_sequent(o.text);
  const JudgementKind kind = parse_kind(o.kind);
  std::vector<Formula> all = ctx;
  all.push_back(a);
  Universe u(universe_for(o, all));
  os << "sequent: " << sequent_text(ctx, a) << "\n";
  os << "kind: " << to_string(kind) << "\n";
  print_universe(os, u);
  auto cx = find_weak_counterexample(u, ctx, a, kind);
  if (!cx) {
    os << "counterexample: none [universe-relative]\n";
    return 0;
  }
  os << "counterexample: " << u.describe(cx->base) << " [universe-relative]\n";
  os << render_trace(u, cx->trace);
  return 1;
}

int cmd_simulate(const Opts& o, std::ostream& os) {
  auto [ctx, a] = parse_sequent(o.text);
  const Strategy s = parse_strategy(o.strategy);
  os << "sequent: " << sequent_text(ctx, a) << "\n";
  os << "strategy: " << o.strategy << "\n";
  if (!decide_strong(ctx, a)) {
    os << "verdict: not valid [exact via prover]\n";
    return 1;
  }
  RoundTrip rt = completeness_roundtrip(ctx, a, s);
  os << "verdict: valid [exact via prover]\n";
  os << "case: " << (rt.inconsistent_case ? "inconsistent context" : "consistent context") << "\n";
  os << "N rules: " << rt.n.base.size() << "\n" << render_N(rt.n);
  os << "steps: " << rt.stats.steps << "\n";
  if (!rt.stats.phase_degrees.empty()) {
    os << "phase degrees:";
    for (int d : rt.stats.phase_degrees) os << " " << d;
    os << "\n";
  }
  os << "normal derivation:\n"
     << render_derivation(rt.normalized, [&](const AtomicRule& r) { return rule_label(rt.n, r); }) << "\n";
  os << "proof:\n" << render_proof(rt.proof) << "\n";
  NDSequent chk = check_nd(rt.proof);
  os << "checked: " << sequent_text(chk.open, chk.conclusion) << "\n";
  return 0;
}

int cmd_paper_suite(const Opts& o, std::ostream& os) {
  UniverseConfig cfg = o.universe.empty() ? default_config() : parse_universe_config(o.universe);
  Universe u(cfg);
  print_universe(os, u);
  auto lines = weak_suite(u);
  auto contrast = contrast_suite(u);
  lines.insert(lines.end(), contrast.begin(), contrast.end());
  os << render_suite(lines);
  for (const auto& l : lines)
    if (!l.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ecumenical base-extension semantics toolkit"};
  app.require_subcommand(1);
  Opts o;

  auto add_universe = [&](CLI::App* c) {
    c->add_option("--universe", o.universe, "universe config, e.g. vocab=p,q;max_premises=1;max_discharge=1");
  };
  auto* parse_c = app.add_subcommand("parse", "parse and render a formula");
  parse_c->add_option("formula", o.text)->required();

  auto* derive_c = app.add_subcommand("derive", "derive a basic sentence in a base");
  derive_c->add_option("goal", o.text)->required();
  derive_c->add_option("--base", o.base_file)->required();
  derive_c->add_option("--assume", o.assume, "comma-separated assumptions");

  auto* check_base_c = app.add_subcommand("check-base", "consistency and bot-completeness of a base");
  check_base_c->add_option("--base", o.base_file)->required();
  check_base_c->add_option("--vocab", o.vocab);

  auto* bot_c = app.add_subcommand("bot-complete", "bot-completion of a base");
  bot_c->add_option("--base", o.base_file)->required();
  bot_c->add_option("--vocab", o.vocab);

  auto* decide_c = app.add_subcommand("decide", "decide a sequent");
  decide_c->add_option("sequent", o.text)->required();
  decide_c->add_option("--kind", o.kind)->check(CLI::IsMember({"local", "global", "strong"}));
  decide_c->add_flag("--trace", o.trace);
  add_universe(decide_c);

  auto* proof_c = app.add_subcommand("check-proof", "check a natural deduction proof");
  proof_c->add_option("--proof", o.proof_file)->required();

  auto* uc_c = app.add_subcommand("universe-check", "build a universe and check it");
  add_universe(uc_c);

  auto* cx_c = app.add_subcommand("counterexample", "find a base refuting a sequent");
  cx_c->add_option("sequent", o.text)->required();
  cx_c->add_option("--kind", o.kind)->check(CLI::IsMember({"local", "global", "strong"}));
  cx_c->add_flag("--trace", o.trace);
  add_universe(cx_c);

  auto* sim_c = app.add_subcommand("simulate", "completeness round trip through an atomic base");
  sim_c->add_option("sequent", o.text)->required();
  sim_c->add_option("--strategy", o.strategy)->check(CLI::IsMember({"degree", "innermost"}));

  auto* suite_c = app.add_subcommand("paper-suite", "run the theorem suite");
  add_universe(suite_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::ostringstream os;
  int rc = 2;
  try {
    if (*parse_c) rc = cmd_parse(o, os);
    else if (*derive_c) rc = cmd_derive(o, os);
    else if (*check_base_c) rc = cmd_check_base(o, os);
    else if (*bot_c) rc = cmd_bot_complete(o, os);
    else if (*decide_c) rc = cmd_decide(o, os);
    else if (*proof_c) rc = cmd_check_proof(o, os);
    else if (*uc_c) rc = cmd_universe_check(o, os);
    else if (*cx_c) rc = cmd_counterexample(o, os);
    else if (*sim_c) rc = cmd_simulate(o, os);
    else if (*suite_c) rc = cmd_paper_suite(o, os);
  } catch (const ParseError& e) {
    std::cout << os.str();
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cout << os.str();
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << os.str();
  return rc;
}
