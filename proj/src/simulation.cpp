#include "ecumen/simulation.hpp"

#include <algorithm>
#include <random>

#include "ecumen/generate.hpp"

namespace ecumen {

std::set<Formula> gamma_star(const std::vector<Formula>& ctx, const Formula& a) {
  std::set<Formula> out;
  auto add = [&](const Formula& f) {
    for (const auto& s : subformulas(f)) out.insert(s);
  };
  for (const auto& f : ctx) add(f);
  add(a);
  std::vector<Formula> classical;
  for (const auto& f : out)
    if (f.is_classical()) classical.push_back(f);
  for (const auto& f : classical) add(Formula::neg(intuitionistic_version(f)));
  return out;
}

// ---------------------------------------------------------------- alpha

namespace {

void code(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::BasicI:
      out += f.name();
      return;
    case Kind::BasicC:
      out += "C.";
      out += f.name();
      return;
    case Kind::Classical:
      out += "K.";
      code(f.inner(), out);
      return;
    case Kind::And:
    case Kind::Or:
    case Kind::Imp:
      out += f.kind() == Kind::And ? "A." : f.kind() == Kind::Or ? "O." : "I.";
      code(f.left(), out);
      out += ".";
      code(f.right(), out);
      return;
  }
}

}  // namespace

Basic fresh_atom(const Formula& f) {
  std::string out = "_";
  code(f, out);
  return out;
}

const Basic& AlphaMap::atom(const Formula& f) const {
  auto it = forward.find(f);
  if (it == forward.end()) throw std::out_of_range("alpha: formula not in domain: " + render(f));
  return it->second;
}

Formula AlphaMap::formula(const Basic& b) const {
  if (b == kBot) return Formula::bot();
  auto it = backward.find(b);
  if (it != backward.end()) return it->second;
  return Formula::atom(b);
}

AlphaMap make_alpha(const std::set<Formula>& gs) {
  AlphaMap m;
  for (const auto& f : gs) {
    Basic b = f.kind() == Kind::BasicI ? f.name() : fresh_atom(f);
    m.forward.emplace(f, b);
    m.backward.emplace(b, f);
  }
  return m;
}

// ---------------------------------------------------------------- N

std::string schema_name(Schema s) {
  switch (s) {
    case Schema::ImpInt: return "imp-int";
    case Schema::ImpElim: return "imp-elim";
    case Schema::OrIntL: return "or-int-l";
    case Schema::OrIntR: return "or-int-r";
    case Schema::OrElim: return "or-elim";
    case Schema::AndInt: return "and-int";
    case Schema::AndElimL: return "and-elim-l";
    case Schema::AndElimR: return "and-elim-r";
    case Schema::ClassInt: return "class-int";
    case Schema::ClassElim: return "class-elim";
    case Schema::BotElim: return "bot-elim";
  }
  return "?";
}

bool is_intro(Schema s) {
  switch (s) {
    case Schema::ImpInt:
    case Schema::OrIntL:
    case Schema::OrIntR:
    case Schema::AndInt:
    case Schema::ClassInt:
      return true;
    default:
      return false;
  }
}

const RuleTag& NBase::tag(const AtomicRule& r) const {
  auto it = by_key.find(r.key());
  if (it == by_key.end()) throw std::out_of_range("rule not in N: " + render_rule(r));
  return tags[it->second];
}

std::optional<AtomicRule> NBase::find(Schema s, const Formula& source, const Basic& q) const {
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const RuleTag& t = tags[i];
    if (t.schema == s && t.source == source && t.q == q) return base.rules()[i];
  }
  return std::nullopt;
}

const std::vector<std::size_t>& NBase::concluding(const Basic& b) const {
  static const std::vector<std::size_t> none;
  auto it = by_conclusion.find(b);
  return it == by_conclusion.end() ? none : it->second;
}

NBase build_N(const std::set<Formula>& gs, const AlphaMap& alpha, std::vector<Basic> vocab) {
  NBase n;
  n.alpha = alpha;
  std::set<Basic> range;
  for (const auto& [f, b] : alpha.forward) range.insert(b);
  range.insert(Basic(kBot));
  if (vocab.empty()) {
    vocab.assign(range.begin(), range.end());
  } else {
    std::set<Basic> given(vocab.begin(), vocab.end());
    for (const auto& b : range)
      if (!given.count(b)) throw std::invalid_argument("build_N: vocabulary misses " + b);
    vocab.assign(given.begin(), given.end());
  }
  n.vocab = vocab;

  const Basic bot(kBot);
  auto p = [&](const Formula& f) { return alpha.atom(f); };
  auto add = [&](AtomicRule r, Schema s, const Formula& src, const Basic& q = {}) {
    if (n.base.add(r)) {
      n.by_key.emplace(r.key(), n.tags.size());
      n.by_conclusion[r.conclusion].push_back(n.tags.size());
      n.tags.push_back({s, src, q});
    }
  };

  for (const auto& d : gs) {
    switch (d.kind()) {
      case Kind::BasicI:
        break;
      case Kind::Imp:
        add(AtomicRule::make({premise({p(d.left())}, p(d.right()))}, p(d)), Schema::ImpInt, d);
        add(AtomicRule::make({premise({}, p(d)), premise({}, p(d.left()))}, p(d.right())), Schema::ImpElim, d);
        break;
      case Kind::And:
        add(AtomicRule::make({premise({}, p(d.left())), premise({}, p(d.right()))}, p(d)), Schema::AndInt, d);
        add(AtomicRule::make({premise({}, p(d))}, p(d.left())), Schema::AndElimL, d);
        add(AtomicRule::make({premise({}, p(d))}, p(d.right())), Schema::AndElimR, d);
        break;
      case Kind::Or:
        add(AtomicRule::make({premise({}, p(d.left()))}, p(d)), Schema::OrIntL, d);
        add(AtomicRule::make({premise({}, p(d.right()))}, p(d)), Schema::OrIntR, d);
        for (const auto& q : vocab)
          add(AtomicRule::make({premise({}, p(d)), premise({p(d.left())}, q), premise({p(d.right())}, q)}, q),
              Schema::OrElim, d, q);
        break;
      case Kind::BasicC:
      case Kind::Classical: {
        const Formula neg = Formula::neg(intuitionistic_version(d));
        add(AtomicRule::make({premise({p(neg)}, bot)}, p(d)), Schema::ClassInt, d);
        add(AtomicRule::make({premise({}, p(d)), premise({}, p(neg))}, bot), Schema::ClassElim, d);
        break;
      }
    }
  }
  // No bot-elim into bot: it would be an identity step.
  for (const auto& q : vocab)
    if (q != bot) add(AtomicRule::make({premise({}, bot)}, q), Schema::BotElim, Formula(), q);
  return n;
}

std::string rule_label(const NBase& n, const AtomicRule& r) {
  const RuleTag& t = n.tag(r);
  std::string s = schema_name(t.schema);
  if (t.source.valid()) s += "[" + render(t.source) + "]";
  if (!t.q.empty()) s += "[" + t.q + "]";
  return s;
}

std::string render_N(const NBase& n) {
  std::string out;
  for (std::size_t i = 0; i < n.tags.size(); ++i) {
    const RuleTag& t = n.tags[i];
    out += "# schema=" + schema_name(t.schema);
    out += ", formula=" + (t.source.valid() ? render(t.source) : std::string("-"));
    out += ", q=" + (t.q.empty() ? std::string("-") : t.q) + "\n";
    out += render_rule(n.base.rules()[i]) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------- degree

int formula_degree(const Formula& f) {
  switch (f.kind()) {
    case Kind::BasicI:
      return 0;
    case Kind::BasicC:
      return 2;
    case Kind::Classical:
      return formula_degree(f.inner()) + 2;
    default:
      return formula_degree(f.left()) + formula_degree(f.right()) + 1;
  }
}

int degree_of(const AlphaMap& alpha, const Basic& atom) {
  if (atom == kBot) return 0;
  auto it = alpha.backward.find(atom);
  if (it == alpha.backward.end()) throw std::out_of_range("degree_of: atom outside range of alpha: " + atom);
  return formula_degree(it->second);
}

// ---------------------------------------------------------------- back to ND

namespace {

std::string nd_label(int l) { return l == 0 ? std::string() : "u" + std::to_string(l); }

NDProof to_nd_rec(const Derivation& d, const NBase& n) {
  const AlphaMap& a = n.alpha;
  if (d.assumption) return NDProof::assume(a.formula(d.conclusion), nd_label(d.label));
  const RuleTag& t = n.tag(d.rule);
  std::vector<NDProof> kids;
  for (const auto& c : d.children) kids.push_back(to_nd_rec(c, n));
  auto label_for = [&](std::size_t i) { return d.labels.empty() ? 0 : d.labels[i]; };

  switch (t.schema) {
    case Schema::ImpInt:
      return NDProof::make(NDRule::ImpIntro, t.source, std::move(kids), {nd_label(label_for(0))});
    case Schema::ImpElim:
      return NDProof::make(NDRule::ImpElim, t.source.right(), std::move(kids));
    case Schema::AndInt:
      return NDProof::make(NDRule::AndIntro, t.source, std::move(kids));
    case Schema::AndElimL:
      return NDProof::make(NDRule::AndElimL, t.source.left(), std::move(kids));
    case Schema::AndElimR:
      return NDProof::make(NDRule::AndElimR, t.source.right(), std::move(kids));
    case Schema::OrIntL:
      return NDProof::make(NDRule::OrIntroL, t.source, std::move(kids));
    case Schema::OrIntR:
      return NDProof::make(NDRule::OrIntroR, t.source, std::move(kids));
    case Schema::OrElim:
      return NDProof::make(NDRule::OrElim, a.formula(t.q), std::move(kids),
                           {nd_label(label_for(1)), nd_label(label_for(2))});
    case Schema::ClassInt:
      return NDProof::make(NDRule::ClassIntro, t.source, std::move(kids), {nd_label(label_for(0))});
    case Schema::ClassElim:
      return NDProof::make(NDRule::ClassElim, Formula::bot(), std::move(kids));
    case Schema::BotElim:
      return NDProof::make(NDRule::BotElim, a.formula(t.q), std::move(kids));
  }
  throw std::logic_error("to_nd: unknown schema");
}

}  // namespace

NDProof to_nd(const Derivation& d, const NBase& n) { return to_nd_rec(canonicalize(d, n), n); }

// ---------------------------------------------------------------- consistency

namespace {

bool ends_in_intro(const Derivation& d, const NBase& n) { return !d.assumption && is_intro(n.tag(d.rule).schema); }

}  // namespace

ConsistencyReport consistency_of_N(const NBase& n, std::size_t samples, unsigned seed) {
  ConsistencyReport rep;
  rep.saturation = !derives(n.base, {}, Basic(kBot));
  // A closed normal derivation must end in an introduction, so no closed
  // normal derivation of bot exists. Sample normal derivations and check that
  // every one ending in an elimination keeps an open assumption.
  std::mt19937 rng(seed);
  rep.structural = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const Basic goal = n.vocab[rng() % n.vocab.size()];
    Derivation d = random_n_derivation(n, goal, 4, rng);
    Derivation nf = normalize(d, n, Strategy::Degree);
    ++rep.sampled;
    AtomicSequent s = check_derivation(n.base, nf);
    if (s.open.empty() && !ends_in_intro(nf, n)) rep.structural = false;
    if (s.open.empty() && s.conclusion == kBot) rep.structural = false;
  }
  return rep;
}

// ---------------------------------------------------------------- round trip

namespace {

Derivation replace_axioms(const Derivation& d) {
  if (d.assumption) return d;
  if (d.rule.is_axiom()) return Derivation::assume(d.conclusion);
  Derivation out = d;
  for (auto& c : out.children) c = replace_axioms(c);
  return out;
}

}  // namespace

RoundTrip completeness_roundtrip(const std::vector<Formula>& ctx, const Formula& a, Strategy s) {
  if (!decide_strong(ctx, a)) throw std::invalid_argument("completeness_roundtrip: sequent is not derivable");
  RoundTrip rt;
  const std::set<Formula> gs = gamma_star(ctx, a);
  const AlphaMap alpha = make_alpha(gs);
  rt.n = build_N(gs, alpha);

  Base b = rt.n.base;
  for (const auto& f : ctx) b.add(AtomicRule::axiom(alpha.atom(f)));

  Basic target = alpha.atom(a);
  rt.inconsistent_case = !is_consistent(b);
  if (rt.inconsistent_case) target = Basic(kBot);
  std::optional<Derivation> w = derive_witness(b, {}, target);
  if (!w) throw std::logic_error("completeness_roundtrip: no atomic derivation of " + target);
  rt.atomic = relabel(replace_axioms(*w));
  check_derivation(rt.n.base, rt.atomic);

  rt.normalized = normalize(rt.atomic, rt.n, s, &rt.stats);
  NDProof p = to_nd(rt.normalized, rt.n);
  if (rt.inconsistent_case) p = NDProof::make(NDRule::BotElim, a, {std::move(p)});
  rt.proof = std::move(p);

  NDSequent seq = check_nd(rt.proof);
  if (seq.conclusion != a) throw std::logic_error("completeness_roundtrip: wrong conclusion");
  for (const auto& f : seq.open)
    if (std::find(ctx.begin(), ctx.end(), f) == ctx.end())
      throw std::logic_error("completeness_roundtrip: stray open assumption " + render(f));
  return rt;
}

}  // namespace ecumen
