#include "ecumen/suite.hpp"

#include <array>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "ecumen/generate.hpp"
#include "ecumen/prover.hpp"
#include "ecumen/semantics.hpp"

namespace ecumen {

UniverseConfig default_config() {
  UniverseConfig cfg;
  cfg.vocab = {"p", "q"};
  cfg.max_premises = 1;
  cfg.max_discharge = 1;
  // Needed for a base where ~p and ~~p both yield q without q holding.
  cfg.extra_rules.push_back(parse_rule("(p |- bot) => q"));
  return cfg;
}

namespace {

using Fs = std::vector<Formula>;

class Checker {
 public:
  explicit Checker(const Universe& u) : u_(u) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      bases_.push_back(static_cast<BaseId>(i));
      exts_.push_back(u.extensions_of(static_cast<BaseId>(i)));
    }
  }

  const std::vector<BaseId>& bases() const { return bases_; }
  const std::vector<BaseId>& exts(BaseId s) const { return exts_[static_cast<std::size_t>(s)]; }

  bool local(BaseId s, const Formula& a) const { return at_base(lookup('L', nullptr, a), s); }
  bool global(BaseId s, const Formula& a) const { return at_base(lookup('G', nullptr, a), s); }
  bool local_in(BaseId s, const Formula& g, const Formula& a) const { return at_base(lookup('L', &g, a), s); }
  bool global_in(BaseId s, const Formula& g, const Formula& a) const { return at_base(lookup('G', &g, a), s); }

  // Runs prop on every case and records the first failure.
  template <typename Case>
  SuiteLine all(std::string name, const std::vector<Case>& cases, const std::function<bool(const Case&)>& prop,
                const std::function<std::string(const Case&)>& show) const {
    SuiteLine line{std::move(name), true, ""};
    std::size_t n = 0;
    for (const auto& c : cases) {
      ++n;
      if (!prop(c)) {
        line.pass = false;
        line.detail = "fails at " + show(c);
        return line;
      }
    }
    line.detail = std::to_string(n) + " cases";
    return line;
  }

  std::string at(BaseId s) const { return "S=" + u_.describe(s); }

 private:
  struct Key {
    char kind;
    std::uint64_t ctx, a;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.ctx * 1000003u + k.a) ^ static_cast<std::size_t>(k.kind);
    }
  };

  static bool at_base(const std::vector<char>& v, BaseId s) { return v[static_cast<std::size_t>(s)] != 0; }

  const std::vector<char>& lookup(char kind, const Formula* g, const Formula& a) const {
    Key k{kind, g ? g->id() + 1 : 0, a.id()};
    for (const auto& [rk, rv] : recent_)
      if (rv && rk == k) return *rv;
    auto it = cache_.find(k);
    if (it == cache_.end()) {
      Fs ctx;
      if (g) ctx.push_back(*g);
      auto v = kind == 'L' ? weak_local_all(u_, ctx, a) : weak_global_all(u_, ctx, a);
      it = cache_.emplace(k, std::move(v)).first;
    }
    recent_[next_recent_++ % recent_.size()] = {k, &it->second};
    return it->second;
  }

  const Universe& u_;
  std::vector<BaseId> bases_;
  std::vector<std::vector<BaseId>> exts_;
  mutable std::unordered_map<Key, std::vector<char>, KeyHash> cache_;
  // Cases run formula-major, so a handful of recent vectors serve most lookups.
  mutable std::array<std::pair<Key, const std::vector<char>*>, 8> recent_{};
  mutable std::size_t next_recent_ = 0;
};

struct SF {
  BaseId s;
  Formula a;
};
struct SFF {
  BaseId s;
  Formula a, b;
};

std::vector<SF> cross(const std::vector<BaseId>& bs, const Fs& fs) {
  std::vector<SF> out;
  out.reserve(bs.size() * fs.size());
  for (const auto& f : fs)
    for (auto s : bs) out.push_back({s, f});
  return out;
}

std::vector<SFF> cross2(const std::vector<BaseId>& bs, const Fs& fs) {
  std::vector<SFF> out;
  out.reserve(bs.size() * fs.size() * fs.size());
  for (const auto& a : fs)
    for (const auto& b : fs)
      for (auto s : bs) out.push_back({s, a, b});
  return out;
}

// Pairs each formula with f(formula) once, then crosses with the bases.
std::vector<SFF> cross_with(const std::vector<BaseId>& bs, const Fs& fs, const std::function<Formula(const Formula&)>& f) {
  std::vector<SFF> out;
  out.reserve(bs.size() * fs.size());
  for (const auto& a : fs) {
    const Formula b = f(a);
    for (auto s : bs) out.push_back({s, a, b});
  }
  return out;
}

Fs only_intuitionistic(const Fs& fs) {
  Fs out;
  for (const auto& f : fs)
    if (is_intuitionistic(f)) out.push_back(f);
  return out;
}

}  // namespace

std::vector<SuiteLine> weak_suite(const Universe& u, std::size_t max_connectives, std::size_t pair_connectives) {
  Checker c(u);
  const auto& vocab = u.config().vocab;
  EnumOptions eo;
  eo.atoms = vocab;
  eo.max_connectives = max_connectives;
  const Fs all = enumerate_formulas(eo);
  eo.max_connectives = pair_connectives;
  const Fs small = enumerate_formulas(eo);
  const Fs ints = only_intuitionistic(all);
  const Fs small_ints = only_intuitionistic(small);
  Fs atoms_bot;
  for (const auto& p : vocab) atoms_bot.push_back(Formula::atom(p));
  atoms_bot.push_back(Formula::bot());
  const Formula bot = Formula::bot();
  const Formula p = Formula::atom(vocab.front());
  const Formula pc = Formula::basic_c(vocab.front());

  auto show1 = [&](const SF& x) { return c.at(x.s) + " A=" + render(x.a); };
  auto show2 = [&](const SFF& x) { return c.at(x.s) + " A=" + render(x.a) + " B=" + render(x.b); };
  const auto per_base_all = cross(c.bases(), all);
  const auto per_base_small2 = cross2(c.bases(), small);

  std::vector<SuiteLine> out;

  out.push_back(c.all<BaseId>(
      "Lemma bot", c.bases(),
      [&](const BaseId& s) { return !c.local(s, bot) && !c.local(s, Formula::basic_c(kBot)); },
      [&](const BaseId& s) { return c.at(s); }));

  out.push_back(c.all<SF>(
      "Thm intimpliesclasatom", cross(c.bases(), atoms_bot),
      [&](const SF& x) { return c.local_in(x.s, x.a, Formula::classical_of(x.a)); }, show1));

  Fs compounds;
  for (const auto& f : all)
    if (!f.is_basic() && f.kind() != Kind::Classical) compounds.push_back(f);
  out.push_back(c.all<SFF>(
      "Thm intimpliesclas", cross_with(c.bases(), compounds, [](const Formula& a) { return Formula::classical(a); }),
      [&](const SFF& x) { return c.local_in(x.s, x.a, x.b); }, [&](const SFF& x) { return show1({x.s, x.a}); }));

  // Intuitionistic formulas are monotonic, so local and global agree.
  std::vector<SFF> collapse;
  for (const auto& a : ints)
    for (auto s : c.bases()) collapse.push_back({s, Formula(), a});
  for (const auto& g : small_ints)
    for (const auto& a : small_ints)
      for (auto s : c.bases()) collapse.push_back({s, g, a});
  out.push_back(c.all<SFF>(
      "Thm monotoniccollapse", collapse,
      [&](const SFF& x) {
        if (!x.a.valid()) return c.local(x.s, x.b) == c.global(x.s, x.b);
        return c.local_in(x.s, x.a, x.b) == c.global_in(x.s, x.a, x.b);
      },
      [&](const SFF& x) { return c.at(x.s) + " G=" + (x.a.valid() ? render(x.a) : "") + " A=" + render(x.b); }));

  {
    SuiteLine line{"Thm monotonicity", true, ""};
    auto v = check_monotonic(u, pc);
    AtomicRule refute = AtomicRule::make({premise({}, vocab.front())}, Basic(kBot));
    auto empty = u.find(Base());
    auto single = u.find(Base({refute}));
    if (!v || !empty || !single || v->first != *empty || v->second != *single) {
      line.pass = false;
      line.detail = "p^c: expected violation ({}, {" + render_rule(refute) + "})";
      if (v) line.detail += ", got (" + u.describe(v->first) + ", " + u.describe(v->second) + ")";
    } else {
      std::size_t n = 0;
      for (const auto& f : ints) {
        ++n;
        if (auto w = check_monotonic(u, f)) {
          line.pass = false;
          line.detail = render(f) + " violates at (" + u.describe(w->first) + ", " + u.describe(w->second) + ")";
          break;
        }
      }
      if (line.pass)
        line.detail = "p^c violation (" + u.describe(v->first) + ", " + u.describe(v->second) + "); " +
                      std::to_string(n) + " intuitionistic formulas monotonic";
    }
    out.push_back(line);
  }

  out.push_back(c.all<SFF>(
      "Lemma localimpliesglobal", per_base_small2,
      [&](const SFF& x) { return !c.local_in(x.s, x.a, x.b) || c.global_in(x.s, x.a, x.b); }, show2));

  out.push_back(c.all<SF>(
      "Lemma globaltheoremimplieslocaltheorem", per_base_all,
      [&](const SF& x) { return !c.global(x.s, x.a) || c.local(x.s, x.a); }, show1));

  out.push_back(c.all<SFF>(
      "Lemma newsimplification", cross_with(c.bases(), all, [](const Formula& a) { return Formula::neg(a); }),
      [&](const SFF& x) {
        for (auto t : c.exts(x.s))
          if (c.local(t, x.a)) return true;
        for (auto t : c.exts(x.s))
          if (!c.local(t, x.b)) return false;
        return true;
      },
      [&](const SFF& x) { return show1({x.s, x.a}); }));

  out.push_back(c.all<SFF>(
      "Lemma globalmodusponens", per_base_small2,
      [&](const SFF& x) { return !(c.global(x.s, x.a) && c.global_in(x.s, x.a, x.b)) || c.global(x.s, x.b); },
      show2));

  out.push_back(c.all<SFF>(
      "Lemma mon", per_base_small2,
      [&](const SFF& x) {
        if (!c.local(x.s, x.a) || !c.global_in(x.s, x.a, x.b)) return true;
        for (auto t : c.exts(x.s))
          if (!c.local(t, x.a)) return true;  // not S-monotonic
        return c.local(x.s, x.b) && c.global(x.s, x.b);
      },
      show2));

  Fs atoms;
  for (const auto& a : vocab) atoms.push_back(Formula::atom(a));
  out.push_back(c.all<SF>(
      "Lemma neg", cross(c.bases(), atoms),
      [&](const SF& x) {
        const bool d = derives(u.base(x.s), {x.a.name()}, Basic(kBot));
        return d == c.local_in(x.s, x.a, bot) && d == c.global_in(x.s, x.a, bot) &&
               d == c.local(x.s, Formula::neg(x.a));
      },
      show1));

  out.push_back(c.all<SF>(
      "Corollary class-iff-not-int", cross(c.bases(), atoms),
      [&](const SF& x) { return c.local(x.s, Formula::classical_of(x.a)) == !c.local_in(x.s, x.a, bot); }, show1));

  out.push_back(c.all<SF>(
      "Lemma p^c-implies-extension", per_base_all,
      [&](const SF& x) {
        bool some = false;
        for (auto t : c.exts(x.s)) some = some || c.local(t, x.a);
        return !c.local_in(x.s, x.a, bot) == some;
      },
      show1));

  out.push_back(c.all<SFF>(
      "Lemma sameextensionsproperty", per_base_small2,
      [&](const SFF& x) {
        const bool la = c.local(x.s, x.a), lb = c.local(x.s, x.b);
        for (auto t : c.exts(x.s))
          if (c.local(t, x.a) != la || c.local(t, x.b) != lb) return true;  // hypothesis fails
        for (auto t : c.exts(x.s)) {
          const bool l = c.local_in(t, x.a, x.b), g = c.global_in(t, x.a, x.b);
          const bool plain = !c.local(t, x.a) || c.local(t, x.b);
          if (l != g || g != plain) return false;
        }
        return true;
      },
      show2));

  {
    std::vector<SF> cases;
    for (auto s : c.bases()) {
      Base full = bot_complete(u.base(s), vocab);
      auto id = u.find(full);
      if (!id) {
        out.push_back({"Lemma maximalconsistentpersistency", false,
                       "bot-completion of " + u.describe(s) + " is not in the universe"});
        cases.clear();
        break;
      }
      for (const auto& f : all) cases.push_back({*id, f});
    }
    if (!cases.empty()) {
      out.push_back(c.all<SF>(
          "Lemma maximalconsistentpersistency", cases,
          [&](const SF& x) {
            const bool here = c.local(x.s, x.a);
            for (auto t : c.exts(x.s))
              if (c.local(t, x.a) != here) return false;
            return true;
          },
          show1));
    }
  }

  // Theorems stated for A^i and A^c of an arbitrary A.
  Fs bodies;
  for (const auto& f : all)
    if (f.kind() != Kind::Classical && f.kind() != Kind::BasicC && !f.is_bot()) bodies.push_back(f);
  auto cls = [](const Formula& a) { return Formula::classical_of(a); };
  auto nn = [](const Formula& a) { return Formula::neg(Formula::neg(a)); };

  out.push_back(c.all<Formula>(
      "Thm twoglobalequivalences", bodies,
      [&](const Formula& a) { return weak_valid(u, {cls(a)}, nn(a)) && weak_valid(u, {nn(a)}, cls(a)); },
      [&](const Formula& a) { return "A=" + render(a); }));

  {
    SuiteLine line{"Thm Acai", false, ""};
    auto empty = u.find(Base());
    if (empty) {
      line.pass = !c.local_in(*empty, pc, nn(p));
      line.detail = line.pass ? "p^c does not locally entail ~~p at S={}" : "p^c locally entails ~~p at S={}";
    }
    out.push_back(line);
  }

  std::vector<SFF> ic;
  ic.reserve(c.bases().size() * bodies.size());
  for (const auto& a : bodies) {
    const Formula g = nn(a), k = cls(a);
    for (auto s : c.bases()) ic.push_back({s, g, k});
  }
  out.push_back(c.all<SFF>(
      "Thm ic", ic, [&](const SFF& x) { return c.local_in(x.s, x.a, x.b); },
      [&](const SFF& x) { return c.at(x.s) + " A=" + render(x.b); }));

  out.push_back(c.all<SFF>(
      "Thm mp",
      cross_with(c.bases(), bodies, [&](const Formula& a) { return Formula::disj(cls(a), Formula::neg(a)); }),
      [&](const SFF& x) { return c.local(x.s, x.b); }, [&](const SFF& x) { return show1({x.s, x.a}); }));

  Fs small_bodies;
  for (const auto& f : small)
    if (f.kind() != Kind::Classical && f.kind() != Kind::BasicC && !f.is_bot()) small_bodies.push_back(f);
  std::vector<SFF> pl;
  pl.reserve(c.bases().size() * small_bodies.size() * small_bodies.size());
  for (const auto& a : small_bodies)
    for (const auto& b : small_bodies) {
      const Formula f = Formula::imp(Formula::imp(Formula::imp(a, b), a), cls(a));
      for (auto s : c.bases()) pl.push_back({s, a, f});
    }
  out.push_back(c.all<SFF>(
      "Thm pl", pl, [&](const SFF& x) { return c.local(x.s, x.b); },
      [&](const SFF& x) { return c.at(x.s) + " " + render(x.b); }));

  {
    const Formula np = Formula::neg(p);
    const Formula cc = Formula::disj(np, nn(p));
    const Fs gamma = {Formula::disj(np, pc), Formula::imp(np, cc), Formula::imp(pc, cc)};
    SuiteLine line{"Proposition or-elim failure", false, ""};
    auto empty = u.find(Base());
    bool premises = true;
    for (const auto& g : gamma) premises = premises && weak_valid(u, {}, g);
    const bool refuted = empty && !weak_global(u, *empty, gamma, cc);
    line.pass = premises && refuted;
    line.detail = std::string("premises ") + (premises ? "valid" : "not all valid") + "; " + render_list(gamma) +
                  " |- " + render(cc) + (refuted ? " refuted at S={}" : " holds at S={}");
    out.push_back(line);
  }
  return out;
}

std::vector<SuiteLine> contrast_suite(const Universe& u) {
  std::vector<SuiteLine> out;
  const Formula p = Formula::atom("p"), q = Formula::atom("q");
  const Formula lem = Formula::disj(Formula::basic_c("p"), Formula::neg(p));
  {
    const bool strong = decide_strong({}, lem);
    const bool weak = weak_valid(u, {}, lem);
    out.push_back({"strong rejects p^c | ~p", !strong, strong ? "prover accepts" : "prover rejects"});
    out.push_back({"weak accepts p^c | ~p", weak, weak ? "valid in universe" : "refuted in universe"});
  }
  {
    const Formula peirce = parse("((p -> q) -> p) -> p^c");
    const bool ok = decide_strong({}, peirce);
    out.push_back({"strong accepts ecumenical Peirce", ok, render(peirce)});
  }
  for (const Formula& a : {p, Formula::conj(p, q), Formula::imp(p, q), Formula::disj(p, q)}) {
    const Formula ac = Formula::classical_of(a);
    const Formula nn = Formula::neg(Formula::neg(a));
    const bool l = decide_strong({}, Formula::imp(ac, nn));
    const bool r = decide_strong({}, Formula::imp(nn, ac));
    out.push_back({"strong accepts " + render(ac) + " <-> " + render(nn), l && r,
                   std::string("-> ") + (l ? "yes" : "no") + ", <- " + (r ? "yes" : "no")});
  }
  return out;
}

std::string render_suite(const std::vector<SuiteLine>& lines) {
  std::ostringstream os;
  for (const auto& l : lines) os << (l.pass ? "PASS " : "FAIL ") << l.name << " (" << l.detail << ")\n";
  return os.str();
}

}  // namespace ecumen
