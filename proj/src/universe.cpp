#include "ecumen/universe.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ecumen/formula.hpp"

namespace ecumen {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string s) {
  auto sp = [](char c) { return c == ' ' || c == '\t' || c == '\n'; };
  while (!s.empty() && sp(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && sp(s[i])) ++i;
  return s.substr(i);
}

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    int x = std::stoi(v, &used);
    if (used != v.size() || x < 0) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("universe config: bad value for " + key + ": " + v);
  }
}

void subsets_upto(const std::vector<Basic>& items, std::size_t k, std::size_t from,
                  std::vector<Basic>& cur, std::vector<std::vector<Basic>>& out) {
  out.push_back(cur);
  if (cur.size() == k) return;
  for (std::size_t i = from; i < items.size(); ++i) {
    cur.push_back(items[i]);
    subsets_upto(items, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

UniverseConfig parse_universe_config(std::string_view text) {
  UniverseConfig cfg;
  for (auto& part : split(text, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("universe config: expected key=value: " + part);
    std::string key = trim(part.substr(0, eq));
    std::string val = trim(part.substr(eq + 1));
    if (key == "vocab") {
      cfg.vocab.clear();
      for (auto& a : split(val, ',')) {
        a = trim(a);
        if (!is_atom_name(a)) throw std::invalid_argument("universe config: bad atom: " + a);
        cfg.vocab.push_back(a);
      }
    } else if (key == "max_premises") {
      cfg.max_premises = to_int(key, val);
    } else if (key == "max_discharge") {
      cfg.max_discharge = to_int(key, val);
    } else if (key == "pool_cap") {
      cfg.pool_cap = static_cast<std::size_t>(to_int(key, val));
    } else if (key == "bot") {
      cfg.include_bot_conclusions = to_int(key, val) != 0;
    } else if (key == "extra") {
      for (auto& r : split(val, '/'))
        if (!trim(r).empty()) cfg.extra_rules.push_back(parse_rule(trim(r)));
    } else {
      throw std::invalid_argument("universe config: unknown key: " + key);
    }
  }
  return cfg;
}

std::string render_config(const UniverseConfig& cfg) {
  std::string out = "vocab=";
  for (std::size_t i = 0; i < cfg.vocab.size(); ++i) out += (i ? "," : "") + cfg.vocab[i];
  out += ";max_premises=" + std::to_string(cfg.max_premises);
  out += ";max_discharge=" + std::to_string(cfg.max_discharge);
  out += ";pool_cap=" + std::to_string(cfg.pool_cap);
  out += ";bot=" + std::string(cfg.include_bot_conclusions ? "1" : "0");
  if (!cfg.extra_rules.empty()) {
    out += ";extra=";
    for (std::size_t i = 0; i < cfg.extra_rules.size(); ++i)
      out += (i ? "/" : "") + render_rule(cfg.extra_rules[i]);
  }
  return out;
}

// Premise positions range over vocabulary atoms and bot only appears as a
// conclusion. A premise whose conclusion is among its own discharges, and a
// premise-free copy of the conclusion, make the rule trivial; both are
// skipped.
std::vector<AtomicRule> generate_pool(const UniverseConfig& cfg) {
  const Basic bot(kBot);
  std::vector<Basic> vocab = cfg.vocab;
  std::sort(vocab.begin(), vocab.end());
  vocab.erase(std::unique(vocab.begin(), vocab.end()), vocab.end());

  std::vector<Basic> conclusions = vocab;
  if (cfg.include_bot_conclusions) conclusions.push_back(bot);

  std::vector<Premise> cands;
  for (const auto& a : vocab) {
    std::vector<Basic> others;
    for (const auto& b : vocab)
      if (b != a) others.push_back(b);
    std::vector<std::vector<Basic>> ds;
    std::vector<Basic> cur;
    subsets_upto(others, static_cast<std::size_t>(cfg.max_discharge), 0, cur, ds);
    for (auto& d : ds) cands.push_back(premise(d, a));
  }

  Base acc;
  for (const auto& p : vocab) {
    acc.add(AtomicRule::axiom(p));
    acc.add(AtomicRule::make({premise({}, p)}, bot));
  }
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!pick.empty()) {
      for (const auto& c : conclusions) {
        bool trivial = false;
        std::vector<Premise> ps;
        for (std::size_t i : pick) {
          if (cands[i].discharge.empty() && cands[i].conclusion == c) trivial = true;
          ps.push_back(cands[i]);
        }
        if (!trivial) acc.add(AtomicRule::make(ps, c));
      }
    }
    if (pick.size() == static_cast<std::size_t>(cfg.max_premises)) return;
    for (std::size_t i = from; i < cands.size(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  for (const auto& r : cfg.extra_rules) acc.add(r);

  std::vector<AtomicRule> out = acc.rules();
  std::sort(out.begin(), out.end(), [](const AtomicRule& a, const AtomicRule& b) {
    return render_rule(a) < render_rule(b);
  });
  return out;
}

Universe::Universe(UniverseConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.vocab.empty()) throw std::invalid_argument("universe: empty vocabulary");
  std::set<Basic> allowed(cfg_.vocab.begin(), cfg_.vocab.end());
  allowed.insert(Basic(kBot));
  for (const auto& r : cfg_.extra_rules) {
    for (const auto& b : Base({r}).basics())
      if (!allowed.count(b)) throw std::invalid_argument("universe: extra rule mentions " + b);
  }
  pool_ = generate_pool(cfg_);
  if (pool_.size() > cfg_.pool_cap || pool_.size() > 30)
    throw PoolTooLarge("pool-too-large: " + std::to_string(pool_.size()) + " rules exceed cap " +
                       std::to_string(cfg_.pool_cap));

  basics_.assign(allowed.begin(), allowed.end());
  basics_.erase(std::find(basics_.begin(), basics_.end(), Basic(kBot)));
  basics_.push_back(Basic(kBot));

  // Consistent sets are closed under subsets, so a depth-first walk can
  // prune every superset of an inconsistent set.
  std::vector<std::uint32_t> found;
  std::function<void(std::uint32_t, std::size_t)> walk = [&](std::uint32_t m, std::size_t from) {
    found.push_back(m);
    for (std::size_t i = from; i < pool_.size(); ++i) {
      std::uint32_t m2 = m | (1u << i);
      Base s;
      for (std::size_t j = 0; j < pool_.size(); ++j)
        if (m2 & (1u << j)) s.add(pool_[j]);
      if (is_consistent(s)) walk(m2, i + 1);
    }
  };
  walk(0, 0);
  auto lex_key = [](std::uint32_t m) {
    std::vector<int> v;
    for (int i = 0; i < 32; ++i)
      if (m & (1u << i)) v.push_back(i);
    return v;
  };
  std::sort(found.begin(), found.end(), [&](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return lex_key(a) < lex_key(b);
  });
  masks_ = found;
  for (std::size_t i = 0; i < masks_.size(); ++i) by_mask_[masks_[i]] = static_cast<BaseId>(i);

  covers_.resize(masks_.size());
  proves_.assign(masks_.size() * basics_.size(), 0);
  refutes_.assign(masks_.size() * basics_.size(), 0);
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    for (std::size_t r = 0; r < pool_.size(); ++r) {
      if (masks_[i] & (1u << r)) continue;
      auto it = by_mask_.find(masks_[i] | (1u << r));
      if (it != by_mask_.end()) covers_[i].push_back(it->second);
    }
    Base s = base(static_cast<BaseId>(i));
    for (std::size_t b = 0; b < basics_.size(); ++b) {
      proves_[idx(static_cast<BaseId>(i), b)] = derives(s, {}, basics_[b]);
      refutes_[idx(static_cast<BaseId>(i), b)] = derives(s, {basics_[b]}, Basic(kBot));
    }
  }

  std::string text = render_config(cfg_) + "\n";
  for (const auto& r : pool_) text += render_rule(r) + "\n";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  fingerprint_ = buf;
}

std::optional<std::size_t> Universe::basic_index(const Basic& b) const {
  auto it = std::find(basics_.begin(), basics_.end(), b);
  if (it == basics_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basics_.begin());
}

Base Universe::base(BaseId id) const {
  Base s;
  std::uint32_t m = mask(id);
  for (std::size_t j = 0; j < pool_.size(); ++j)
    if (m & (1u << j)) s.add(pool_[j]);
  return s;
}

std::optional<BaseId> Universe::find_mask(std::uint32_t m) const {
  auto it = by_mask_.find(m);
  if (it == by_mask_.end()) return std::nullopt;
  return it->second;
}

std::optional<BaseId> Universe::find(const Base& s) const {
  std::uint32_t m = 0;
  for (const auto& r : s.rules()) {
    auto it = std::find_if(pool_.begin(), pool_.end(),
                           [&](const AtomicRule& p) { return p.key() == r.key(); });
    if (it == pool_.end()) return std::nullopt;
    m |= 1u << static_cast<std::size_t>(it - pool_.begin());
  }
  return find_mask(m);
}

std::vector<BaseId> Universe::extensions_of(BaseId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= size()) throw std::out_of_range("unknown base id");
  std::vector<BaseId> out;
  for (std::size_t i = 0; i < masks_.size(); ++i)
    if (is_extension(id, static_cast<BaseId>(i))) out.push_back(static_cast<BaseId>(i));
  return out;
}

std::string Universe::describe(BaseId id) const { return render_base_inline(base(id)); }

std::optional<Universe::Vec> Universe::memo_get(const std::string& key) const {
  std::lock_guard<std::mutex> lock(memo_mu_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return std::nullopt;
  return it->second;
}

void Universe::memo_put(const std::string& key, const Vec& v) const {
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.emplace(key, v);
}

}  // namespace ecumen
