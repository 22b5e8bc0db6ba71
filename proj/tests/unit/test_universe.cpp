#include <doctest.h>

#include "ecumen/suite.hpp"
#include "ecumen/universe.hpp"
#include "ecumen/formula.hpp"

using namespace ecumen;

namespace {

UniverseConfig tiny() {
  UniverseConfig cfg;
  cfg.vocab = {"p"};
  cfg.max_premises = 0;
  cfg.max_discharge = 0;
  return cfg;
}

}  // namespace

TEST_CASE("three-base universe over one atom") {
  Universe u(tiny());
  REQUIRE(u.pool().size() == 2);
  CHECK(render_rule(u.pool()[0]) == "( |- p) => bot");
  CHECK(render_rule(u.pool()[1]) == "=> p");
  CHECK(u.size() == 3);
  auto empty = u.find(Base());
  auto ax = u.find(Base({parse_rule("=> p")}));
  auto ref = u.find(Base({parse_rule("( |- p) => bot")}));
  REQUIRE(empty);
  REQUIRE(ax);
  REQUIRE(ref);
  CHECK_FALSE(u.find(Base({parse_rule("=> p"), parse_rule("( |- p) => bot")})).has_value());
  CHECK(u.extensions_of(*ax) == std::vector<BaseId>{*ax});
  CHECK(u.extensions_of(*empty).size() == 3);
}

TEST_CASE("config text round trip") {
  UniverseConfig cfg = parse_universe_config("vocab=p,q;max_premises=1;max_discharge=1;pool_cap=20;extra=(p |- bot) => q");
  CHECK(cfg.vocab == std::vector<Basic>{"p", "q"});
  CHECK(cfg.pool_cap == 20);
  REQUIRE(cfg.extra_rules.size() == 1);
  CHECK(render_config(parse_universe_config(render_config(cfg))) == render_config(cfg));
  CHECK_THROWS(parse_universe_config("colour=red"));
  CHECK_THROWS(parse_universe_config("vocab=p;max_premises=x"));
}

TEST_CASE("pool cap") {
  UniverseConfig cfg;
  cfg.vocab = {"p", "q", "r"};
  cfg.max_premises = 1;
  cfg.max_discharge = 1;
  CHECK(generate_pool(cfg).size() > 16);
  CHECK_THROWS_AS(Universe{cfg}, PoolTooLarge);
}

TEST_CASE("default universe") {
  Universe u(default_config());
  CHECK(u.pool().size() == 13);
  CHECK(u.size() == 983);
  // Required witnesses: axioms and refutations of each atom.
  for (const auto& a : {"p", "q"}) {
    CHECK(Base(u.pool()).contains(AtomicRule::axiom(a)));
    CHECK(Base(u.pool()).contains(AtomicRule::make({premise({}, a)}, Basic(kBot))));
  }
  CHECK(u.fingerprint() == Universe(default_config()).fingerprint());
  CHECK(u.fingerprint() != Universe(tiny()).fingerprint());
}

TEST_CASE("property: extension order and persistence of derivability") {
  Universe u(default_config());
  const auto empty = u.find(Base());
  REQUIRE(empty);
  CHECK(u.extensions_of(*empty).size() == u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const BaseId s = static_cast<BaseId>(i);
    CHECK(is_consistent(u.base(s)));
    CHECK(u.is_extension(*empty, s));
    CHECK(u.is_extension(s, s));
    for (BaseId t : u.covers(s)) {
      CHECK(u.is_extension(s, t));
      CHECK_FALSE(u.is_extension(t, s));
      for (std::size_t b = 0; b < u.basics().size(); ++b) {
        if (u.proves(s, b)) CHECK(u.proves(t, b));
        if (u.refutes(s, b)) CHECK(u.refutes(t, b));
      }
    }
  }
}
