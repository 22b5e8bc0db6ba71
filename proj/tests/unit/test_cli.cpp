#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(ECUMEN_CLI_PATH) + " " + args + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string("/tmp/ecumen_cli_test_") + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("decide exit codes and provenance") {
  Run yes = run("decide " + quote("p^c <-> ~~p"));
  CHECK(yes.code == 0);
  CHECK(has(yes, "[exact via prover]"));
  CHECK(has(yes, "fingerprint: "));

  Run no = run("decide " + quote("p^c | ~p"));
  CHECK(no.code == 1);
  CHECK(has(no, "verdict: not valid [exact via prover]"));
  CHECK(has(no, "disagreement:"));

  Run weak = run("decide " + quote("p^c | ~p") + " --kind global");
  CHECK(weak.code == 0);
  CHECK(has(weak, "[universe-relative]"));
  CHECK(has(weak, "universe: vocab=p;max_premises=1;max_discharge=1"));
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run("decide " + quote("p &")).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("decide " + quote("p") + " --kind sideways").code == 2);
  CHECK(run("decide " + quote("q") + " --universe " + quote("vocab=p")).code == 2);
}

TEST_CASE("parse command") {
  Run r = run("parse " + quote("(p & q)^c"));
  CHECK(r.code == 0);
  CHECK(has(r, "formula: (p & q)^c"));
  CHECK(has(r, "complexity: 2"));
  CHECK(has(r, "translation: ~~(p & q)"));
}

TEST_CASE("base commands") {
  const std::string base = temp_file("base.txt", "( |- p) => bot\n(q |- p) => r\n( |- q) => p\n");
  Run d = run("derive r --base " + base);
  CHECK(d.code == 0);
  CHECK(has(d, "verdict: derivable"));
  CHECK(run("derive s --base " + base).code == 1);

  Run c = run("check-base --base " + base);
  CHECK(c.code == 0);
  CHECK(has(c, "consistent: yes"));

  Run b = run("bot-complete --base " + base + " --vocab p,q,r");
  CHECK(b.code == 0);
  CHECK(has(b, "consistent and bot-complete: yes"));

  const std::string bad = temp_file("bad.txt", "=> p\n( |- p) => bot\n");
  CHECK(run("check-base --base " + bad).code == 1);
  CHECK(run("bot-complete --base " + bad).code == 2);
}

TEST_CASE("check-proof") {
  const std::string ok = temp_file("ok.proof",
                                   "(class-intro \"p^c\" :discharge u1\n"
                                   "  (imp-elim \"bot\"\n"
                                   "    (assume \"~~p\")\n"
                                   "    (assume \"~p\" u1)))\n");
  Run r = run("check-proof --proof " + ok);
  CHECK(r.code == 0);
  CHECK(has(r, "sequent: ~~p |- p^c"));

  const std::string bad = temp_file("bad.proof", "(and-intro \"p & q\" (assume \"p\") (assume \"p\"))\n");
  Run b = run("check-proof --proof " + bad);
  CHECK(b.code == 1);
  CHECK(has(b, "rule: and-intro"));
}

TEST_CASE("counterexample and universe-check") {
  Run cx = run("counterexample " + quote("p^c |- ~~p") + " --kind local");
  CHECK(cx.code == 1);
  CHECK(has(cx, "counterexample: {}"));
  Run none = run("counterexample " + quote("p^c |- ~~p") + " --kind global");
  CHECK(none.code == 0);

  Run u = run("universe-check --universe " + quote("vocab=p;max_premises=0;max_discharge=0"));
  CHECK(u.code == 0);
  CHECK(has(u, "bases: 3"));
  CHECK(has(u, "monotonicity: ok"));
}

TEST_CASE("simulate") {
  Run r = run("simulate " + quote("~~p |- p^c") + " --strategy innermost");
  CHECK(r.code == 0);
  CHECK(has(r, "checked: ~~p |- p^c"));
  CHECK(has(r, "# schema=class-int"));
  CHECK(run("simulate " + quote("p | ~p")).code == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  const std::string args = "counterexample " + quote("~p | ~~p") + " --kind local --universe " +
                           quote("vocab=p,q;max_premises=1;max_discharge=0");
  CHECK(run(args).out == run(args).out);
}
