// Redex detection and reduction steps for derivations over N.
#include <algorithm>
#include <map>

#include "ecumen/simulation.hpp"

namespace ecumen {

Strategy parse_strategy(std::string_view s) {
  if (s == "degree") return Strategy::Degree;
  if (s == "innermost") return Strategy::Innermost;
  throw std::invalid_argument("unknown strategy: " + std::string(s));
}

std::string render_redex(const Redex& r) {
  std::string path = "root";
  for (auto i : r.path) path += "." + std::to_string(i);
  return std::string(r.kind == RedexKind::MaximumFormula ? "maximum-formula" : "maximum-segment") + " " + r.vertex +
         " degree=" + std::to_string(r.degree) + " length=" + std::to_string(r.length) +
         (r.from_bot ? " from-bot" : "") + " at " + path;
}

Derivation subderivation(const Derivation& d, const std::vector<std::size_t>& path) {
  const Derivation* cur = &d;
  for (auto i : path) {
    if (i >= cur->children.size()) throw std::out_of_range("subderivation: bad path");
    cur = &cur->children[i];
  }
  return *cur;
}

Derivation canonicalize(const Derivation& d, const NBase& n) {
  if (d.assumption) return d;
  auto it = n.by_key.find(d.rule.key());
  if (it == n.by_key.end()) throw std::out_of_range("rule not in N: " + render_rule(d.rule));
  const AtomicRule& stored = n.base.rules()[it->second];
  Derivation out;
  out.assumption = false;
  out.conclusion = d.conclusion;
  out.rule = stored;
  std::vector<bool> used(d.children.size(), false);
  for (const auto& p : stored.premises) {
    for (std::size_t j = 0; j < d.rule.premises.size(); ++j) {
      if (used[j] || !(d.rule.premises[j] == p)) continue;
      used[j] = true;
      out.children.push_back(canonicalize(d.children[j], n));
      out.labels.push_back(d.labels.empty() ? 0 : d.labels[j]);
      break;
    }
  }
  return out;
}

namespace {

void relabel_rec(Derivation& d, std::map<int, int>& env, int& next) {
  if (d.assumption) {
    auto it = env.find(d.label);
    if (d.label != 0 && it != env.end()) d.label = it->second;
    return;
  }
  if (d.labels.size() < d.children.size()) d.labels.resize(d.children.size(), 0);
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    const int old = d.labels[i];
    if (old == 0) {
      relabel_rec(d.children[i], env, next);
      continue;
    }
    const int fresh = ++next;
    auto prev = env.find(old);
    std::optional<int> saved;
    if (prev != env.end()) saved = prev->second;
    env[old] = fresh;
    relabel_rec(d.children[i], env, next);
    if (saved) env[old] = *saved;
    else env.erase(old);
    d.labels[i] = fresh;
  }
}

struct Thread {
  std::size_t length = 0;
  bool from_bot = false;
};

// Longest thread from an elimination's major premise upward through or-elim
// conclusions that begins with an introduction or bot-elim.
std::optional<Thread> thread(const Derivation& m, const NBase& n) {
  if (m.assumption) return std::nullopt;
  const RuleTag& t = n.tag(m.rule);
  if (is_intro(t.schema)) return Thread{1, false};
  if (t.schema == Schema::BotElim) return Thread{1, true};
  if (t.schema != Schema::OrElim) return std::nullopt;
  std::optional<Thread> best;
  for (std::size_t i = 1; i < m.children.size(); ++i) {
    auto sub = thread(m.children[i], n);
    if (!sub) continue;
    Thread th{sub->length + 1, sub->from_bot};
    if (!best || th.length > best->length) best = th;
  }
  return best;
}

std::optional<Redex> redex_at(const Derivation& e, const NBase& n) {
  if (e.assumption || e.children.empty()) return std::nullopt;
  if (is_intro(n.tag(e.rule).schema)) return std::nullopt;
  const Derivation& m = e.children[0];
  auto th = thread(m, n);
  if (!th) return std::nullopt;
  Redex r;
  r.kind = th->length == 1 && !th->from_bot ? RedexKind::MaximumFormula : RedexKind::MaximumSegment;
  r.vertex = m.conclusion;
  r.degree = degree_of(n.alpha, m.conclusion);
  r.length = th->length;
  r.from_bot = th->from_bot;
  return r;
}

// Post-order: a redex is listed after every redex inside its subtree.
void collect(const Derivation& d, const NBase& n, std::vector<std::size_t>& path, std::vector<Redex>& out) {
  for (std::size_t i = 0; i < d.children.size(); ++i) {
    path.push_back(i);
    collect(d.children[i], n, path, out);
    path.pop_back();
  }
  if (auto r = redex_at(d, n)) {
    r->path = path;
    out.push_back(std::move(*r));
  }
}

void substitute(Derivation& d, int label, const Derivation& repl) {
  if (d.assumption) {
    if (label != 0 && d.label == label) d = repl;
    return;
  }
  for (auto& c : d.children) substitute(c, label, repl);
}

Derivation bot_elim(Derivation pi, const Basic& target, const NBase& n) {
  if (target == kBot) return pi;
  // Looked up by shape: the rule may be stored under an or-intro tag.
  const AtomicRule r = AtomicRule::make({premise({}, Basic(kBot))}, target);
  if (!n.base.contains(r)) throw std::logic_error("N has no bot-elim into " + target);
  return Derivation::apply(r, {std::move(pi)});
}

Derivation contract(const Derivation& e, const NBase& n) {
  const RuleTag& te = n.tag(e.rule);
  const Derivation& m = e.children[0];
  const RuleTag& tm = n.tag(m.rule);

  if (tm.schema == Schema::BotElim) {
    if (te.schema != Schema::OrElim) return bot_elim(m.children[0], e.conclusion, n);
    // Feed bot-elim into the left case instead of concluding q by bot-elim:
    // a bot-elim into q could open a segment of higher degree than this one.
    const Basic left = e.rule.premises[1].discharge.empty() ? Basic(kBot) : e.rule.premises[1].discharge[0];
    Derivation body = e.children[1];
    substitute(body, e.labels[1], bot_elim(m.children[0], left, n));
    return body;
  }

  if (tm.schema == Schema::OrElim) {
    auto r = n.find(Schema::OrElim, tm.source, e.conclusion);
    if (!r) throw std::logic_error("N has no or-elim into " + e.conclusion);
    std::vector<Derivation> kids{m.children[0]};
    for (std::size_t i = 1; i < 3; ++i) {
      Derivation branch = e;
      branch.children[0] = m.children[i];
      kids.push_back(std::move(branch));
    }
    return Derivation::apply(*r, std::move(kids), {0, m.labels[1], m.labels[2]});
  }

  switch (te.schema) {
    case Schema::AndElimL:
      return m.children[0];
    case Schema::AndElimR:
      return m.children[1];
    case Schema::ImpElim:
    case Schema::ClassElim: {
      Derivation body = m.children[0];
      substitute(body, m.labels[0], e.children[1]);
      return body;
    }
    case Schema::OrElim: {
      const std::size_t branch = tm.schema == Schema::OrIntL ? 1 : 2;
      Derivation body = e.children[branch];
      substitute(body, e.labels[branch], m.children[0]);
      return body;
    }
    default:
      throw std::logic_error("no reduction for " + schema_name(te.schema));
  }
}

Derivation* at(Derivation& d, const std::vector<std::size_t>& path) {
  Derivation* cur = &d;
  for (auto i : path) {
    if (i >= cur->children.size()) return nullptr;
    cur = &cur->children[i];
  }
  return cur;
}

}  // namespace

Derivation relabel(const Derivation& d) {
  Derivation out = d;
  std::map<int, int> env;
  int next = 0;
  relabel_rec(out, env, next);
  return out;
}

std::vector<Redex> find_redexes(const Derivation& d, const NBase& n) {
  std::vector<Redex> out;
  std::vector<std::size_t> path;
  collect(d, n, path, out);
  return out;
}

int derivation_degree(const Derivation& d, const NBase& n) {
  int deg = 0;
  for (const auto& r : find_redexes(d, n)) deg = std::max(deg, r.degree);
  return deg;
}

bool is_normal(const Derivation& d, const NBase& n) { return find_redexes(d, n).empty(); }

Derivation reduce_once(const Derivation& d, const Redex& r, const NBase& n) {
  Derivation out = d;
  Derivation* e = at(out, r.path);
  if (!e) throw StaleRedex("stale redex: path does not exist");
  auto now = redex_at(*e, n);
  if (!now || now->vertex != r.vertex) throw StaleRedex("stale redex: " + render_redex(r));
  *e = contract(*e, n);
  return relabel(out);
}

Derivation normalize(const Derivation& d, const NBase& n, Strategy s, NormalizeStats* stats, std::size_t max_steps) {
  Derivation cur = relabel(canonicalize(d, n));
  NormalizeStats local;
  NormalizeStats& st = stats ? *stats : local;
  st = NormalizeStats{};
  int phase = -1;
  for (;;) {
    std::vector<Redex> rs = find_redexes(cur, n);
    if (rs.empty()) break;
    if (st.steps >= max_steps) throw std::runtime_error("normalize: step limit reached");
    const Redex* pick = &rs.front();
    if (s == Strategy::Degree) {
      int deg = 0;
      for (const auto& r : rs) deg = std::max(deg, r.degree);
      if (deg != phase) {
        phase = deg;
        st.phase_degrees.push_back(deg);
      }
      std::size_t secondary = 0;
      for (const auto& r : rs)
        if (r.degree == deg) secondary += r.length;
      st.secondary.push_back(secondary);
      pick = &*std::find_if(rs.begin(), rs.end(), [&](const Redex& r) { return r.degree == deg; });
    }
    cur = reduce_once(cur, *pick, n);
    ++st.steps;
  }
  if (s == Strategy::Degree) st.phase_degrees.push_back(0);
  return cur;
}

}  // namespace ecumen
