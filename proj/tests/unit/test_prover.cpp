#include <doctest.h>

#include <random>

#include "ecumen/generate.hpp"
#include "ecumen/prover.hpp"
#include "kripke_oracle.hpp"

using namespace ecumen;

namespace {

const Formula p = Formula::atom("p");
const Formula np = parse("~p");
const Formula nnp = parse("~~p");
const Formula pc = parse("p^c");
const Formula bot = Formula::bot();

// ~~p |- p^c
NDProof dn_to_classical() {
  NDProof body = NDProof::make(NDRule::ImpElim, bot, {NDProof::assume(nnp), NDProof::assume(np, "u1")});
  return NDProof::make(NDRule::ClassIntro, pc, {body}, {"u1"});
}

// Replaces every classical subformula B^c by ~~B.
Formula unclassical(const Formula& f) {
  switch (f.kind()) {
    case Kind::BasicI:
      return f;
    case Kind::BasicC:
      return Formula::neg(Formula::neg(Formula::atom(f.name())));
    case Kind::Classical:
      return Formula::neg(Formula::neg(unclassical(f.inner())));
    case Kind::And:
      return Formula::conj(unclassical(f.left()), unclassical(f.right()));
    case Kind::Or:
      return Formula::disj(unclassical(f.left()), unclassical(f.right()));
    case Kind::Imp:
      return Formula::imp(unclassical(f.left()), unclassical(f.right()));
  }
  return f;
}

}  // namespace

TEST_CASE("check_nd on the classical introduction example") {
  NDSequent s = check_nd(dn_to_classical());
  CHECK(s.conclusion == pc);
  CHECK(s.open == std::vector<Formula>{nnp});
}

TEST_CASE("classical elimination concludes bot") {
  NDProof e = NDProof::make(NDRule::ClassElim, bot, {NDProof::assume(pc), NDProof::assume(np)});
  NDSequent s = check_nd(e);
  CHECK(s.conclusion == bot);
  CHECK(s.open.size() == 2);
}

TEST_CASE("check_nd rejects mismatches") {
  NDProof bad = NDProof::make(NDRule::AndIntro, parse("p & q"), {NDProof::assume(p), NDProof::assume(p)});
  try {
    check_nd(bad);
    FAIL("expected NDError");
  } catch (const NDError& e) {
    CHECK(e.rule() == "and-intro");
  }
  // Label used outside its binder.
  NDProof loose = NDProof::make(NDRule::ImpIntro, parse("p -> p"), {NDProof::assume(p, "u9")}, {"u1"});
  CHECK_THROWS_AS(check_nd(loose), NDError);
  // Bound label with the wrong formula.
  NDProof wrong = NDProof::make(NDRule::ImpIntro, parse("p -> p"), {NDProof::assume(p, "u1")}, {"u1"});
  CHECK_NOTHROW(check_nd(wrong));
  NDProof wrong2 = NDProof::make(NDRule::ImpIntro, parse("q -> p"), {NDProof::assume(p, "u1")}, {"u1"});
  CHECK_THROWS_AS(check_nd(wrong2), NDError);
}

TEST_CASE("proof text round trip") {
  const NDProof pr = dn_to_classical();
  const std::string text = render_proof(pr);
  CHECK(text ==
        "(class-intro \"p^c\" :discharge u1\n"
        "  (imp-elim \"bot\"\n"
        "    (assume \"~~p\")\n"
        "    (assume \"~p\" u1)))");
  CHECK(parse_proof(text) == pr);
  CHECK(render_proof(parse_proof(text)) == text);
  CHECK_THROWS(parse_proof("(and-intro \"p\""));
}

TEST_CASE("decide_ipc") {
  CHECK(decide_ipc({{}, parse("p -> p")}));
  CHECK_FALSE(decide_ipc({{}, parse("p | ~p")}));
  CHECK(decide_ipc({{}, parse("((p -> q) -> p) -> ~~p")}));
  CHECK_THROWS(decide_ipc({{}, parse("p^c")}));
}

TEST_CASE("decide_strong") {
  CHECK(decide_strong({nnp}, pc));
  CHECK_FALSE(decide_strong({}, parse("p^c | ~p")));
  CHECK(decide_strong({}, parse("((p -> q) -> p) -> p^c")));
}

TEST_CASE("soundness_spotcheck") {
  Universe u(parse_universe_config("vocab=p;max_premises=1;max_discharge=1"));
  CHECK(soundness_spotcheck(u, dn_to_classical()));
  NDProof vac = NDProof::make(NDRule::ImpIntro, parse("bot -> bot"), {NDProof::assume(bot, "u1")}, {"u1"});
  CHECK(soundness_spotcheck(u, vac));
  CHECK(soundness_spotcheck(u, NDProof::assume(p)));
}

TEST_CASE("property: decide_ipc agrees with the Kripke oracle up to two connectives") {
  EnumOptions eo;
  eo.max_connectives = 2;
  eo.classical = false;
  std::size_t n = 0;
  for (const auto& f : enumerate_formulas(eo)) {
    REQUIRE_MESSAGE(decide_ipc({{}, f}) == oracle::kripke_valid({}, f), render(f));
    ++n;
  }
  CHECK(n == 516);
}

TEST_CASE("property: checked random proofs are strongly valid") {
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    NDProof pr = random_nd_proof(rng, {"p", "q"}, 5);
    NDSequent s = check_nd(pr);
    REQUIRE_MESSAGE(decide_strong(s.open, s.conclusion), render_proof(pr));
    REQUIRE(parse_proof(render_proof(pr)) == pr);
  }
}

TEST_CASE("property: classical subformulas can be read as double negations") {
  EnumOptions eo;
  eo.max_connectives = 2;
  for (const auto& f : enumerate_formulas(eo)) CHECK(decide_strong({}, f) == decide_strong({}, unclassical(f)));
  for (const auto& f : enumerate_formulas(eo)) {
    if (f.is_classical()) continue;
    CHECK(decide_strong({f}, Formula::classical_of(f)));
  }
}
