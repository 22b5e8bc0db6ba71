#include <doctest.h>

#include <random>

#include "ecumen/generate.hpp"
#include "ecumen/semantics.hpp"
#include "ecumen/simulation.hpp"

using namespace ecumen;

namespace {

struct Setup {
  std::set<Formula> gs;
  AlphaMap alpha;
  NBase n;
};

Setup setup(const std::vector<Formula>& ctx, const Formula& a) {
  Setup s;
  s.gs = gamma_star(ctx, a);
  s.alpha = make_alpha(s.gs);
  s.n = build_N(s.gs, s.alpha);
  return s;
}

Derivation apply(const NBase& n, Schema sc, const Formula& src, std::vector<Derivation> kids,
                 std::vector<int> labels = {}, const Basic& q = {}) {
  auto r = n.find(sc, src, q);
  REQUIRE(r.has_value());
  return Derivation::apply(*r, std::move(kids), std::move(labels));
}

Derivation hyp(const Basic& b, int label = 0) { return Derivation::assume(b, label); }

std::set<Basic> open_of(const NBase& n, const Derivation& d) { return check_derivation(n.base, d).open; }

}  // namespace

TEST_CASE("gamma_star") {
  CHECK(gamma_star({}, parse("p")) == std::set<Formula>{parse("p")});
  CHECK(gamma_star({}, parse("p^c")) == std::set<Formula>{parse("p^c"), parse("p"), parse("~p"), parse("bot")});
  CHECK(gamma_star({parse("~~p")}, parse("p^c")) ==
        std::set<Formula>{parse("~~p"), parse("~p"), parse("p"), parse("bot"), parse("p^c")});
}

TEST_CASE("alpha mapping") {
  const auto gs = gamma_star({}, parse("(p -> q)^c & p^c"));
  const AlphaMap a = make_alpha(gs);
  CHECK(a.atom(parse("p")) == "p");
  CHECK(a.atom(parse("p^c")) == "_C.p");
  CHECK(a.atom(parse("(p -> q)^c")) == "_K.I.p.q");
  CHECK(a.atom(parse("~(p -> q)")) == "_I.I.p.q.bot");
  std::set<Basic> seen;
  for (const auto& f : gs) {
    CHECK(seen.insert(a.atom(f)).second);
    CHECK(a.formula(a.atom(f)) == f);
    if (f.kind() != Kind::BasicI) CHECK_FALSE(is_atom_name(a.atom(f)));
  }
}

TEST_CASE("build_N for p^c") {
  const Setup s = setup({}, parse("p^c"));
  const std::string text = render_N(s.n);
  CHECK(text ==
        "# schema=class-int, formula=p^c, q=-\n"
        "(_I.p.bot |- bot) => _C.p\n"
        "# schema=class-elim, formula=p^c, q=-\n"
        "( |- _C.p), ( |- _I.p.bot) => bot\n"
        "# schema=imp-int, formula=~p, q=-\n"
        "(p |- bot) => _I.p.bot\n"
        "# schema=imp-elim, formula=~p, q=-\n"
        "( |- _I.p.bot), ( |- p) => bot\n"
        "# schema=bot-elim, formula=-, q=_C.p\n"
        "( |- bot) => _C.p\n"
        "# schema=bot-elim, formula=-, q=_I.p.bot\n"
        "( |- bot) => _I.p.bot\n"
        "# schema=bot-elim, formula=-, q=p\n"
        "( |- bot) => p\n");
  CHECK(is_consistent(s.n.base));
}

TEST_CASE("build_N for an atom has only bot-elim") {
  const Setup s = setup({}, parse("p"));
  REQUIRE(s.n.base.size() == 1);
  CHECK(render_rule(s.n.base.rules()[0]) == "( |- bot) => p");
  CHECK_THROWS_AS(build_N(s.gs, s.alpha, {"p"}), std::invalid_argument);
}

TEST_CASE("degrees") {
  const auto gs = gamma_star({}, parse("q^c | (q & r)"));
  const AlphaMap a = make_alpha(gs);
  CHECK(degree_of(a, "q") == 0);
  CHECK(degree_of(a, a.atom(parse("q^c"))) == 2);
  CHECK(degree_of(a, a.atom(parse("q & r"))) == 1);
  CHECK(degree_of(a, a.atom(parse("~q"))) == 1);
  CHECK(degree_of(a, "bot") == 0);
  CHECK_THROWS(degree_of(a, "zz"));
  CHECK(formula_degree(parse("(p & q)^c")) == 3);
}

TEST_CASE("classical redex reduces by substitution") {
  const Setup s = setup({}, parse("p^c"));
  const Formula pc = parse("p^c"), np = parse("~p");
  Derivation pi1 = apply(s.n, Schema::ImpElim, np, {hyp("_I.p.bot", 1), hyp("p")});
  Derivation intro = apply(s.n, Schema::ClassInt, pc, {pi1}, {1});
  Derivation d = apply(s.n, Schema::ClassElim, pc, {intro, hyp("_I.p.bot")});
  check_derivation(s.n.base, d);

  auto rs = find_redexes(d, s.n);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].kind == RedexKind::MaximumFormula);
  CHECK(rs[0].vertex == "_C.p");
  CHECK(rs[0].degree == 2);
  CHECK(render_redex(rs[0]) == "maximum-formula _C.p degree=2 length=1 at root");
  CHECK(derivation_degree(d, s.n) == 2);

  Derivation r = reduce_once(d, rs[0], s.n);
  CHECK(is_normal(r, s.n));
  AtomicSequent seq = check_derivation(s.n.base, r);
  CHECK(seq.conclusion == "bot");
  CHECK(seq.open == std::set<Basic>{"_I.p.bot", "p"});
  CHECK(render_derivation(r, [&](const AtomicRule& x) { return rule_label(s.n, x); }) ==
        render_derivation(apply(s.n, Schema::ImpElim, np, {hyp("_I.p.bot"), hyp("p")}),
                          [&](const AtomicRule& x) { return rule_label(s.n, x); }));

  NormalizeStats st;
  Derivation nf = normalize(d, s.n, Strategy::Degree, &st);
  CHECK(st.steps == 1);
  CHECK(st.phase_degrees == std::vector<int>{2, 0});
  CHECK(is_normal(nf, s.n));
}

TEST_CASE("conjunction segment through or-elim") {
  const Setup s = setup({parse("p | q"), parse("p & q")}, parse("p"));
  const Formula pq = parse("p & q"), porq = parse("p | q");
  const Basic conj = s.alpha.atom(pq), disj = s.alpha.atom(porq);
  Derivation left = apply(s.n, Schema::AndInt, pq, {hyp("p", 1), hyp("q")});
  Derivation right = apply(s.n, Schema::AndInt, pq, {hyp("p"), hyp("q", 2)});
  Derivation seg = apply(s.n, Schema::OrElim, porq, {hyp(disj), left, right}, {0, 1, 2}, conj);
  Derivation d = apply(s.n, Schema::AndElimL, pq, {seg});
  const auto before = open_of(s.n, d);

  auto rs = find_redexes(d, s.n);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].kind == RedexKind::MaximumSegment);
  CHECK(rs[0].vertex == conj);
  CHECK(rs[0].length == 2);
  CHECK_FALSE(rs[0].from_bot);

  // The permutative step moves the elimination into both cases.
  Derivation perm = reduce_once(d, rs[0], s.n);
  CHECK(s.n.tag(perm.rule).schema == Schema::OrElim);
  CHECK(perm.conclusion == "p");
  CHECK(s.n.tag(perm.children[1].rule).schema == Schema::AndElimL);
  CHECK(s.n.tag(perm.children[2].rule).schema == Schema::AndElimL);
  CHECK(find_redexes(perm, s.n).size() == 2);

  for (Strategy st : {Strategy::Degree, Strategy::Innermost}) {
    Derivation nf = normalize(d, s.n, st);
    CHECK(is_normal(nf, s.n));
    AtomicSequent seq = check_derivation(s.n.base, nf);
    CHECK(seq.conclusion == "p");
    for (const auto& o : seq.open) CHECK(before.count(o) == 1);
  }
  CHECK_THROWS_AS(reduce_once(perm, rs[0], s.n), StaleRedex);
}

TEST_CASE("bot-elim feeding a conjunction elimination") {
  const Setup s = setup({parse("p & q")}, parse("p"));
  const Formula pq = parse("p & q");
  const Basic conj = s.alpha.atom(pq);
  auto be = AtomicRule::make({premise({}, "bot")}, conj);
  Derivation d = apply(s.n, Schema::AndElimL, pq, {Derivation::apply(be, {hyp("bot")})});
  auto rs = find_redexes(d, s.n);
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].from_bot);
  Derivation r = reduce_once(d, rs[0], s.n);
  CHECK(render_rule(r.rule) == "( |- bot) => p");
  CHECK(r.children[0].assumption);
  CHECK(is_normal(r, s.n));
}

TEST_CASE("subderivations") {
  const Setup s = setup({}, parse("p^c"));
  Derivation pi1 = apply(s.n, Schema::ImpElim, parse("~p"), {hyp("_I.p.bot", 1), hyp("p")});
  Derivation intro = apply(s.n, Schema::ClassInt, parse("p^c"), {pi1}, {1});
  CHECK(render_derivation(subderivation(intro, {})) == render_derivation(intro));
  CHECK(subderivation(intro, {0, 1}).assumption);
  CHECK(subderivation(intro, {0, 1}).conclusion == "p");
  CHECK_THROWS_AS(subderivation(intro, {3}), std::out_of_range);
}

TEST_CASE("consistency of N") {
  for (const auto& [ctx, a] : std::vector<std::pair<std::vector<Formula>, Formula>>{
           {{}, parse("p^c")}, {{parse("p")}, parse("q")}, {{parse("p | q")}, parse("(q | p)^c")}}) {
    const Setup s = setup(ctx, a);
    const ConsistencyReport rep = consistency_of_N(s.n, 64, 5);
    CHECK(rep.saturation);
    CHECK(rep.structural);
    CHECK(rep.sampled == 64);
  }
}

TEST_CASE("completeness round trips") {
  struct Case {
    std::vector<Formula> ctx;
    Formula a;
    bool inconsistent;
  };
  const std::vector<Case> cases{
      {{parse("~~p")}, parse("p^c"), false},
      {{parse("p & q")}, parse("q & p"), false},
      {{parse("p"), parse("~p")}, parse("q^c"), true},
  };
  for (const auto& c : cases) {
    for (Strategy st : {Strategy::Degree, Strategy::Innermost}) {
      RoundTrip rt = completeness_roundtrip(c.ctx, c.a, st);
      CHECK(rt.inconsistent_case == c.inconsistent);
      NDSequent seq = check_nd(rt.proof);
      CHECK(seq.conclusion == c.a);
      for (const auto& o : seq.open) CHECK(std::find(c.ctx.begin(), c.ctx.end(), o) != c.ctx.end());
      CHECK(is_normal(rt.normalized, rt.n));
      if (c.inconsistent) CHECK(rt.proof.rule == NDRule::BotElim);
    }
  }
  CHECK_THROWS_AS(completeness_roundtrip({}, parse("p | ~p")), std::invalid_argument);
}

TEST_CASE("property: reductions preserve conclusions and never open assumptions") {
  std::mt19937 rng(21);
  const std::vector<std::string> atoms{"p", "q"};
  std::size_t steps = 0;
  for (int i = 0; i < 60; ++i) {
    const Formula a = random_formula(rng, atoms, 3, 0.3);
    const Setup s = setup({}, a);
    const Basic goal = s.n.vocab[rng() % s.n.vocab.size()];
    Derivation d = random_n_derivation(s.n, goal, 5, rng);
    for (int k = 0; k < 40; ++k) {
      auto rs = find_redexes(d, s.n);
      if (rs.empty()) break;
      const auto before = check_derivation(s.n.base, d);
      Derivation r = reduce_once(d, rs[rng() % rs.size()], s.n);
      const auto after = check_derivation(s.n.base, r);
      REQUIRE(after.conclusion == before.conclusion);
      for (const auto& o : after.open) REQUIRE(before.open.count(o) == 1);
      d = r;
      ++steps;
    }
    if (is_normal(d, s.n)) {
      std::vector<std::size_t> path;
      const Derivation* cur = &d;
      while (!cur->assumption && !cur->children.empty()) {
        CHECK(is_normal(subderivation(d, path), s.n));
        path.push_back(0);
        cur = &cur->children[0];
      }
    }
  }
  CHECK(steps > 100);
}

TEST_CASE("property: prepcomplete inside a universe over N") {
  // Universe pool: N plus an axiom and a refutation for every mapped atom.
  const Setup s = setup({}, parse("p^c"));
  UniverseConfig cfg;
  for (const auto& b : s.n.vocab)
    if (b != kBot) cfg.vocab.push_back(b);
  cfg.max_premises = 0;
  cfg.max_discharge = 0;
  cfg.extra_rules = s.n.base.rules();
  Universe u(cfg);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const BaseId id = static_cast<BaseId>(i);
    const Base b = u.base(id);
    if (!extends(s.n.base, b)) continue;
    for (const auto& f : s.gs) {
      CHECK_MESSAGE(strong_sat(u, id, {}, f) == derives(b, {}, s.alpha.atom(f)), render(f) << " at " << u.describe(id));
      ++checked;
    }
  }
  CHECK(checked > 0);
}
