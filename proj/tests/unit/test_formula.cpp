#include <doctest.h>

#include <random>

#include "ecumen/formula.hpp"
#include "ecumen/generate.hpp"

using namespace ecumen;

namespace {
const Formula p = Formula::atom("p");
const Formula q = Formula::atom("q");
const Formula bot = Formula::bot();
}  // namespace

TEST_CASE("parse desugars negation and classical markers") {
  CHECK(parse("p^c -> ~~p") == Formula::imp(Formula::basic_c("p"), Formula::neg(Formula::neg(p))));
  CHECK(parse("(p & q)^c") == Formula::classical(Formula::conj(p, q)));
  CHECK(parse("bot") == bot);
  CHECK(parse("p^i") == p);
  CHECK(parse("(p)^c") == Formula::basic_c("p"));
  CHECK(parse("bot^c") == Formula::basic_c("bot"));
}

TEST_CASE("parse precedence and associativity") {
  CHECK(parse("p -> q -> p") == Formula::imp(p, Formula::imp(q, p)));
  CHECK(parse("p | q & p") == Formula::disj(p, Formula::conj(q, p)));
  CHECK(parse("p & q | q & p -> bot") ==
        Formula::imp(Formula::disj(Formula::conj(p, q), Formula::conj(q, p)), bot));
  CHECK(parse("p <-> q") == Formula::conj(Formula::imp(p, q), Formula::imp(q, p)));
}

TEST_CASE("parse errors carry an offset") {
  try {
    parse("p & ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse("((p & q)^c)^c"), ParseError);
  CHECK_THROWS_AS(parse("P"), ParseError);
  CHECK_THROWS_AS(parse("_C.p"), ParseError);
}

TEST_CASE("render uses the abbreviations") {
  CHECK(render(Formula::classical(Formula::conj(p, q))) == "(p & q)^c");
  CHECK(render(Formula::neg(p)) == "~p");
  CHECK(render(Formula::basic_c("p")) == "p^c");
}

TEST_CASE("complexity counts operators other than bot") {
  CHECK(complexity(p) == 0);
  CHECK(complexity(Formula::basic_c("p")) == 1);
  CHECK(complexity(Formula::neg(p)) == 1);
  CHECK(complexity(parse("(p & q)^c")) == 2);
}

TEST_CASE("subformulas of classical nodes include the intuitionistic version") {
  CHECK(subformulas(p) == std::set<Formula>{p});
  CHECK(subformulas(parse("p^c -> q")) == std::set<Formula>{parse("p^c -> q"), parse("p^c"), p, q});
  CHECK(subformulas(parse("(p & q)^c")) == std::set<Formula>{parse("(p & q)^c"), parse("p & q"), p, q});
}

TEST_CASE("double negation translation") {
  CHECK(dn_translate(parse("p^c")) == parse("(p -> bot) -> bot"));
  CHECK(dn_translate(parse("(p & q)^c")) == parse("~~(p & q)"));
  CHECK(dn_translate(parse("p | q")) == parse("p | q"));
}

TEST_CASE("is_intuitionistic") {
  CHECK(is_intuitionistic(parse("~~p")));
  CHECK_FALSE(is_intuitionistic(parse("p^c")));
  CHECK_FALSE(is_intuitionistic(parse("p -> q^c")));
}

TEST_CASE("classical wrapper rejects nesting and basics") {
  CHECK_THROWS(Formula::classical(Formula::classical(Formula::conj(p, q))));
  CHECK_THROWS(Formula::classical(p));
}

TEST_CASE("hash consing gives pointer equality") {
  CHECK(parse("p & (q | ~p)").raw() == Formula::conj(p, Formula::disj(q, Formula::neg(p))).raw());
}

TEST_CASE("property: render round trip on every small formula") {
  EnumOptions eo;
  eo.max_connectives = 2;
  for (const auto& f : enumerate_formulas(eo)) REQUIRE(parse(render(f)) == f);
}

TEST_CASE("property: random formulas round trip and translations") {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = random_formula(rng, {"p", "q", "r"}, 4, 0.3);
    REQUIRE(parse(render(f)) == f);
    const Formula t = dn_translate(f);
    CHECK(is_intuitionistic(t));
    CHECK(dn_translate(t) == t);
    const auto subs = subformulas(f);
    for (const auto& g : subs) {
      const auto inner = subformulas(g);
      for (const auto& h : inner) CHECK(subs.count(h) == 1);
    }
    if (f.kind() == Kind::Classical) CHECK(complexity(f) == complexity(f.inner()) + 1);
  }
}

TEST_CASE("structural order is a strict total order") {
  EnumOptions eo;
  eo.max_connectives = 1;
  const auto fs = enumerate_formulas(eo);
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    CHECK(fs[i] < fs[i + 1]);
    CHECK_FALSE(fs[i + 1] < fs[i]);
  }
}
