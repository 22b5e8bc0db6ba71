#include "ecumen/base.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ecumen/formula.hpp"

namespace ecumen {

Premise premise(std::vector<Basic> discharge, Basic conclusion) {
  std::sort(discharge.begin(), discharge.end());
  discharge.erase(std::unique(discharge.begin(), discharge.end()), discharge.end());
  return {std::move(discharge), std::move(conclusion)};
}

AtomicRule AtomicRule::make(std::vector<Premise> premises, Basic c) {
  for (auto& p : premises) p = premise(std::move(p.discharge), std::move(p.conclusion));
  return {std::move(premises), std::move(c)};
}

static std::string render_premise(const Premise& p) {
  std::string out = "(";
  if (p.discharge.empty()) out += ' ';
  for (const auto& b : p.discharge) out += b + ' ';
  out += "|- " + p.conclusion + ")";
  return out;
}

std::string render_rule(const AtomicRule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) out += ", ";
    out += render_premise(r.premises[i]);
  }
  if (!out.empty()) out += ' ';
  out += "=> " + r.conclusion;
  return out;
}

std::string AtomicRule::key() const {
  std::vector<std::string> ps;
  for (const auto& p : premises) ps.push_back(render_premise(p));
  std::sort(ps.begin(), ps.end());
  std::string out;
  for (const auto& s : ps) out += s + ",";
  return out + "=>" + conclusion;
}

namespace {

// Basic names in base files may also carry the reserved '_' sigil and '.'
// used by generated atoms.
bool basic_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '^';
}

class RuleLexer {
 public:
  explicit RuleLexer(std::string_view s) : s_(s) {}

  AtomicRule rule() {
    std::vector<Premise> ps;
    skip();
    if (!at("=>")) {
      ps.push_back(prem());
      while (eat(",")) ps.push_back(prem());
    }
    expect("=>");
    Basic c = basic();
    skip();
    if (pos_ != s_.size()) fail("end of line");
    return AtomicRule::make(std::move(ps), std::move(c));
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(std::string_view t) {
    skip();
    return s_.substr(pos_, t.size()) == t;
  }
  bool eat(std::string_view t) {
    if (!at(t)) return false;
    pos_ += t.size();
    return true;
  }
  void expect(std::string_view t) {
    if (!eat(t)) fail(std::string("'") + std::string(t) + "'");
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(pos_, {what}, pos_ < s_.size() ? std::string(1, s_[pos_]) : "end of line");
  }
  Basic basic() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && basic_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("basic sentence");
    return Basic(s_.substr(start, pos_ - start));
  }
  Premise prem() {
    expect("(");
    std::vector<Basic> dis;
    while (!at("|-")) dis.push_back(basic());
    expect("|-");
    Basic c = basic();
    expect(")");
    return premise(std::move(dis), std::move(c));
  }
};

}  // namespace

AtomicRule parse_rule(std::string_view line) { return RuleLexer(line).rule(); }

Base::Base(const std::vector<AtomicRule>& rules) {
  for (const auto& r : rules) add(r);
}

bool Base::add(const AtomicRule& r) {
  if (!keys_.insert(r.key()).second) return false;
  rules_.push_back(r);
  return true;
}

bool Base::contains(const AtomicRule& r) const { return keys_.count(r.key()) > 0; }

std::set<Basic> Base::basics() const {
  std::set<Basic> out;
  for (const auto& r : rules_) {
    out.insert(r.conclusion);
    for (const auto& p : r.premises) {
      out.insert(p.conclusion);
      out.insert(p.discharge.begin(), p.discharge.end());
    }
  }
  return out;
}

Base parse_base(std::string_view text) {
  Base s;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t nl = text.find('\n', offset);
    std::string_view line = text.substr(offset, nl == std::string_view::npos ? nl : nl - offset);
    std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) {
      try {
        s.add(parse_rule(line));
      } catch (const ParseError& e) {
        throw ParseError(offset + e.offset(), e.expected(), "malformed rule");
      }
    }
    if (nl == std::string_view::npos) break;
    offset = nl + 1;
  }
  return s;
}

std::string render_base(const Base& s) {
  std::string out;
  for (const auto& r : s.rules()) out += render_rule(r) + "\n";
  return out;
}

std::string render_base_inline(const Base& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += "; ";
    out += render_rule(s.rules()[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------- derivability

namespace {

constexpr std::size_t kMaxBasics = 256;

struct Mask {
  std::array<std::uint64_t, kMaxBasics / 64> w{};
  void set(std::size_t i) { w[i / 64] |= 1ULL << (i % 64); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1ULL; }
  Mask operator|(const Mask& o) const {
    Mask m;
    for (std::size_t i = 0; i < w.size(); ++i) m.w[i] = w[i] | o.w[i];
    return m;
  }
  bool operator==(const Mask& o) const { return w == o.w; }
};

struct SeqKey {
  Mask ctx;
  int goal;
  bool operator==(const SeqKey& o) const { return goal == o.goal && ctx == o.ctx; }
};

struct SeqHash {
  std::size_t operator()(const SeqKey& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.goal) * 0x9e3779b97f4a7c15ULL;
    for (auto x : k.ctx.w) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Demand-driven least fixpoint over sequents (ctx, goal), reachable from the
// query by reading rules backwards. Horn propagation with premise counters.
class Saturator {
 public:
  Saturator(const Base& s, const std::set<Basic>& context, const Basic& goal) : s_(s) {
    intern(kBotName());
    for (const auto& b : s.basics()) intern(b);
    intern(goal);
    for (const auto& r : s.rules()) {
      RuleInfo info;
      info.conclusion = index_.at(r.conclusion);
      for (const auto& p : r.premises) {
        Mask m;
        for (const auto& d : p.discharge) m.set(index_.at(d));
        info.premises.emplace_back(m, index_.at(p.conclusion));
      }
      by_conclusion_[info.conclusion].push_back(rules_.size());
      rules_.push_back(std::move(info));
    }
    Mask ctx;
    for (const auto& c : context) {
      auto it = index_.find(c);
      if (it != index_.end()) ctx.set(it->second);
    }
    root_ = node({ctx, index_.at(goal)});
    solve();
  }

  bool holds() const { return nodes_[root_].truth; }

  Derivation witness() const {
    std::map<Basic, int> env;
    int next = 0;
    return build(root_, env, next);
  }

 private:
  static const Basic& kBotName() {
    static const Basic b(kBot);
    return b;
  }

  struct RuleInfo {
    std::vector<std::pair<Mask, int>> premises;
    int conclusion;
  };
  struct Alt {
    int node;
    std::size_t rule;
    std::vector<int> premise_nodes;
    std::size_t pending;
  };
  struct SeqNode {
    SeqKey key;
    bool truth = false;
    int just = -1;  // alt index, -1 for reflexivity
    std::vector<int> watchers;  // alts that need this node
  };

  const Base& s_;
  std::map<Basic, int> index_;
  std::vector<Basic> names_;
  std::vector<RuleInfo> rules_;
  std::map<int, std::vector<std::size_t>> by_conclusion_;
  std::vector<SeqNode> nodes_;
  std::vector<Alt> alts_;
  std::unordered_map<SeqKey, int, SeqHash> lookup_;
  std::deque<int> expand_;
  int root_ = 0;

  void intern(const Basic& b) {
    if (index_.count(b)) return;
    if (names_.size() >= kMaxBasics) throw std::length_error("too many basic sentences");
    index_[b] = static_cast<int>(names_.size());
    names_.push_back(b);
  }

  int node(const SeqKey& k) {
    auto it = lookup_.find(k);
    if (it != lookup_.end()) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(SeqNode{k});
    lookup_.emplace(k, id);
    expand_.push_back(id);
    return id;
  }

  void solve() {
    std::deque<int> fired;
    while (!expand_.empty()) {
      int id = expand_.front();
      expand_.pop_front();
      SeqKey k = nodes_[id].key;
      if (k.ctx.test(static_cast<std::size_t>(k.goal))) {
        mark(id, -1, fired);
        continue;
      }
      auto it = by_conclusion_.find(k.goal);
      if (it == by_conclusion_.end()) continue;
      for (std::size_t ri : it->second) {
        Alt a{id, ri, {}, 0};
        for (const auto& [m, g] : rules_[ri].premises) a.premise_nodes.push_back(node({k.ctx | m, g}));
        int ai = static_cast<int>(alts_.size());
        alts_.push_back(a);
        std::size_t pending = 0;
        for (int pn : alts_[ai].premise_nodes) {
          if (!nodes_[pn].truth) {
            ++pending;
            nodes_[pn].watchers.push_back(ai);
          }
        }
        alts_[ai].pending = pending;
        if (pending == 0) mark(id, ai, fired);
      }
      propagate(fired);
    }
    propagate(fired);
  }

  void mark(int id, int just, std::deque<int>& fired) {
    if (nodes_[id].truth) return;
    nodes_[id].truth = true;
    nodes_[id].just = just;
    fired.push_back(id);
  }

  void propagate(std::deque<int>& fired) {
    while (!fired.empty()) {
      int id = fired.front();
      fired.pop_front();
      for (int ai : nodes_[id].watchers) {
        Alt& a = alts_[ai];
        if (a.pending > 0 && --a.pending == 0) mark(a.node, ai, fired);
      }
      nodes_[id].watchers.clear();
    }
  }

  Derivation build(int id, std::map<Basic, int>& env, int& next) const {
    const SeqNode& n = nodes_[id];
    const Basic& goal = names_[static_cast<std::size_t>(n.key.goal)];
    if (n.just < 0) {
      auto it = env.find(goal);
      return Derivation::assume(goal, it == env.end() ? 0 : it->second);
    }
    const Alt& a = alts_[static_cast<std::size_t>(n.just)];
    const AtomicRule& r = s_.rules()[a.rule];
    std::vector<Derivation> kids;
    std::vector<int> labels;
    for (std::size_t i = 0; i < r.premises.size(); ++i) {
      const Premise& p = r.premises[i];
      int label = 0;
      std::map<Basic, int> saved;
      if (!p.discharge.empty()) {
        label = ++next;
        for (const auto& d : p.discharge) {
          auto it = env.find(d);
          saved[d] = it == env.end() ? 0 : it->second;
          env[d] = label;
        }
      }
      kids.push_back(build(a.premise_nodes[i], env, next));
      for (const auto& [d, old] : saved) {
        if (old == 0)
          env.erase(d);
        else
          env[d] = old;
      }
      labels.push_back(label);
    }
    return Derivation::apply(r, std::move(kids), std::move(labels));
  }
};

}  // namespace

bool derives(const Base& s, const std::set<Basic>& context, const Basic& goal) {
  if (context.count(goal)) return true;
  return Saturator(s, context, goal).holds();
}

Derivation Derivation::assume(Basic b, int label) {
  Derivation d;
  d.assumption = true;
  d.conclusion = std::move(b);
  d.label = label;
  return d;
}

Derivation Derivation::apply(AtomicRule r, std::vector<Derivation> children, std::vector<int> labels) {
  Derivation d;
  d.assumption = false;
  d.conclusion = r.conclusion;
  if (labels.empty()) labels.assign(r.premises.size(), 0);
  d.rule = std::move(r);
  d.labels = std::move(labels);
  d.children = std::move(children);
  return d;
}

std::size_t Derivation::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

std::optional<Derivation> derive_witness(const Base& s, const std::set<Basic>& context,
                                         const Basic& goal) {
  Saturator sat(s, context, goal);
  if (!sat.holds()) return std::nullopt;
  return sat.witness();
}

// ---------------------------------------------------------------- checking

namespace {

void check_rec(const Base& s, const Derivation& d, std::map<int, std::vector<Basic>>& env,
               std::set<Basic>& open) {
  if (d.assumption) {
    if (d.label == 0) {
      open.insert(d.conclusion);
      return;
    }
    auto it = env.find(d.label);
    if (it == env.end())
      throw DerivationError(DerivationError::Code::IllScopedDischarge,
                            "ill-scoped discharge: label " + std::to_string(d.label) +
                                " is not bound by an ancestor");
    if (!std::binary_search(it->second.begin(), it->second.end(), d.conclusion))
      throw DerivationError(DerivationError::Code::IllScopedDischarge,
                            "ill-scoped discharge: label " + std::to_string(d.label) +
                                " cannot discharge " + d.conclusion);
    return;
  }
  if (!s.contains(d.rule))
    throw DerivationError(DerivationError::Code::UnknownRule, "unknown rule: " + render_rule(d.rule));
  const auto& ps = d.rule.premises;
  if (d.conclusion != d.rule.conclusion || d.children.size() != ps.size() || d.labels.size() != ps.size())
    throw DerivationError(DerivationError::Code::PremiseMismatch,
                          "premise mismatch at rule " + render_rule(d.rule));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (d.children[i].conclusion != ps[i].conclusion)
      throw DerivationError(DerivationError::Code::PremiseMismatch,
                            "premise mismatch at rule " + render_rule(d.rule) + ": premise " +
                                std::to_string(i + 1) + " concludes " + d.children[i].conclusion);
    int label = d.labels[i];
    if (label != 0) {
      if (ps[i].discharge.empty() || env.count(label))
        throw DerivationError(DerivationError::Code::IllScopedDischarge,
                              "ill-scoped discharge: bad binder label " + std::to_string(label));
      env[label] = ps[i].discharge;
    }
    check_rec(s, d.children[i], env, open);
    if (label != 0) env.erase(label);
  }
}

void render_rec(const Derivation& d, const RuleNamer& name, std::string& out) {
  if (d.assumption) {
    out += "(assume " + d.conclusion;
    if (d.label) out += " " + std::to_string(d.label);
    out += ")";
    return;
  }
  out += "(" + (name ? name(d.rule) : std::string("rule")) + " " + d.conclusion;
  if (std::any_of(d.labels.begin(), d.labels.end(), [](int l) { return l != 0; })) {
    out += " :discharge";
    for (int l : d.labels) out += l ? " " + std::to_string(l) : std::string(" -");
  }
  for (const auto& c : d.children) {
    out += " ";
    render_rec(c, name, out);
  }
  out += ")";
}

}  // namespace

AtomicSequent check_derivation(const Base& s, const Derivation& d) {
  std::map<int, std::vector<Basic>> env;
  AtomicSequent out;
  check_rec(s, d, env, out.open);
  out.conclusion = d.conclusion;
  return out;
}

std::string render_derivation(const Derivation& d, const RuleNamer& name) {
  std::string out;
  render_rec(d, name, out);
  return out;
}

// ---------------------------------------------------------------- base ops

bool is_consistent(const Base& s) { return !derives(s, {}, Basic(kBot)); }

bool extends(const Base& s, const Base& s2) {
  return std::all_of(s.rules().begin(), s.rules().end(),
                     [&](const AtomicRule& r) { return s2.contains(r); });
}

Base add_axiom(const Base& s, const Basic& p) {
  Base out = s;
  out.add(AtomicRule::axiom(p));
  return out;
}

Base bot_complete(const Base& s, const std::vector<Basic>& vocab) {
  if (!is_consistent(s)) throw std::invalid_argument("bot_complete: base is inconsistent");
  std::set<Basic> known(vocab.begin(), vocab.end());
  known.insert(Basic(kBot));
  for (const auto& b : s.basics())
    if (!known.count(b)) throw std::invalid_argument("bot_complete: atom outside vocabulary: " + b);
  Base cur = s;
  for (const auto& p : vocab) {
    if (!derives(cur, {p}, Basic(kBot))) cur = add_axiom(cur, p);
  }
  return cur;
}

bool is_bot_complete(const Base& s, const std::vector<Basic>& vocab) {
  return std::all_of(vocab.begin(), vocab.end(), [&](const Basic& p) {
    return derives(s, {}, p) || derives(s, {p}, Basic(kBot));
  });
}

}  // namespace ecumen
