#include "ecumen/prover.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "ecumen/semantics.hpp"

namespace ecumen {

namespace {

const std::vector<std::pair<NDRule, std::string>>& rule_names() {
  static const std::vector<std::pair<NDRule, std::string>> names = {
      {NDRule::Assume, "assume"},         {NDRule::ImpIntro, "imp-intro"},   {NDRule::ImpElim, "imp-elim"},
      {NDRule::OrIntroL, "or-intro-l"},   {NDRule::OrIntroR, "or-intro-r"},  {NDRule::OrElim, "or-elim"},
      {NDRule::AndIntro, "and-intro"},    {NDRule::AndElimL, "and-elim-l"},  {NDRule::AndElimR, "and-elim-r"},
      {NDRule::BotElim, "bot-elim"},      {NDRule::ClassIntro, "class-intro"}, {NDRule::ClassElim, "class-elim"},
  };
  return names;
}

std::size_t binder_count(NDRule r) {
  switch (r) {
    case NDRule::ImpIntro:
    case NDRule::ClassIntro:
      return 1;
    case NDRule::OrElim:
      return 2;
    default:
      return 0;
  }
}

}  // namespace

std::string rule_name(NDRule r) {
  for (const auto& [k, n] : rule_names())
    if (k == r) return n;
  return "?";
}

NDRule rule_from_name(std::string_view s) {
  for (const auto& [k, n] : rule_names())
    if (n == s) return k;
  throw std::invalid_argument("unknown proof rule: " + std::string(s));
}

NDProof NDProof::assume(Formula f, std::string label) {
  NDProof p;
  p.rule = NDRule::Assume;
  p.conclusion = f;
  p.label = std::move(label);
  return p;
}

NDProof NDProof::make(NDRule r, Formula conclusion, std::vector<NDProof> children, std::vector<std::string> discharge) {
  NDProof p;
  p.rule = r;
  p.conclusion = conclusion;
  p.children = std::move(children);
  p.discharge = std::move(discharge);
  if (p.discharge.empty()) p.discharge.assign(binder_count(r), "");
  return p;
}

std::size_t NDProof::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

std::size_t NDProof::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

bool NDProof::operator==(const NDProof& o) const {
  return rule == o.rule && conclusion == o.conclusion && label == o.label && discharge == o.discharge &&
         children == o.children;
}

// ---------------------------------------------------------------- checking

namespace {

struct Checker {
  std::map<std::string, Formula> env;
  std::set<Formula> open;

  [[noreturn]] void fail(const NDProof& p, const std::string& path, const std::string& msg) {
    throw NDError(rule_name(p.rule), path, msg);
  }

  void expect(bool ok, const NDProof& p, const std::string& path, const std::string& msg) {
    if (!ok) fail(p, path, "schema mismatch: " + msg);
  }

  void child(const NDProof& p, std::size_t i, const std::string& path, const std::string& label, Formula bound) {
    std::string sub = path + "." + std::to_string(i);
    if (label.empty()) {
      run(p.children[i], sub);
      return;
    }
    if (env.count(label)) fail(p, path, "ill-scoped discharge: label " + label + " is already bound");
    env.emplace(label, bound);
    run(p.children[i], sub);
    env.erase(label);
  }

  void run(const NDProof& p, const std::string& path) {
    if (!p.conclusion.valid()) fail(p, path, "missing conclusion");
    if (p.rule == NDRule::Assume) {
      if (!p.children.empty()) fail(p, path, "schema mismatch: assumption with premises");
      if (p.label.empty()) {
        open.insert(p.conclusion);
        return;
      }
      auto it = env.find(p.label);
      if (it == env.end()) fail(p, path, "ill-scoped discharge: label " + p.label + " has no binder above it");
      if (it->second != p.conclusion)
        fail(p, path, "ill-scoped discharge: label " + p.label + " binds " + render(it->second));
      return;
    }
    static const std::map<NDRule, std::size_t> arity = {
        {NDRule::ImpIntro, 1}, {NDRule::ImpElim, 2},  {NDRule::OrIntroL, 1},   {NDRule::OrIntroR, 1},
        {NDRule::OrElim, 3},   {NDRule::AndIntro, 2}, {NDRule::AndElimL, 1},   {NDRule::AndElimR, 1},
        {NDRule::BotElim, 1},  {NDRule::ClassIntro, 1}, {NDRule::ClassElim, 2},
    };
    expect(p.children.size() == arity.at(p.rule), p, path, "wrong number of premises");
    expect(p.discharge.size() == binder_count(p.rule), p, path, "wrong number of discharge labels");
    const Formula c = p.conclusion;
    auto prem = [&](std::size_t i) { return p.children[i].conclusion; };
    switch (p.rule) {
      case NDRule::ImpIntro:
        expect(c.kind() == Kind::Imp, p, path, "conclusion is not an implication");
        expect(prem(0) == c.right(), p, path, "premise is not the consequent");
        child(p, 0, path, p.discharge[0], c.left());
        return;
      case NDRule::ImpElim:
        expect(prem(0).valid() && prem(0).kind() == Kind::Imp && prem(0).right() == c, p, path,
               "major premise is not an implication with this consequent");
        expect(prem(1) == prem(0).left(), p, path, "minor premise is not the antecedent");
        child(p, 0, path, "", {});
        child(p, 1, path, "", {});
        return;
      case NDRule::OrIntroL:
      case NDRule::OrIntroR:
        expect(c.kind() == Kind::Or, p, path, "conclusion is not a disjunction");
        expect(prem(0) == (p.rule == NDRule::OrIntroL ? c.left() : c.right()), p, path, "premise is not a disjunct");
        child(p, 0, path, "", {});
        return;
      case NDRule::OrElim:
        expect(prem(0).valid() && prem(0).kind() == Kind::Or, p, path, "major premise is not a disjunction");
        expect(prem(1) == c && prem(2) == c, p, path, "minor premises differ from the conclusion");
        child(p, 0, path, "", {});
        child(p, 1, path, p.discharge[0], prem(0).left());
        child(p, 2, path, p.discharge[1], prem(0).right());
        return;
      case NDRule::AndIntro:
        expect(c.kind() == Kind::And && prem(0) == c.left() && prem(1) == c.right(), p, path,
               "premises do not match the conjuncts");
        child(p, 0, path, "", {});
        child(p, 1, path, "", {});
        return;
      case NDRule::AndElimL:
      case NDRule::AndElimR:
        expect(prem(0).valid() && prem(0).kind() == Kind::And &&
                   (p.rule == NDRule::AndElimL ? prem(0).left() : prem(0).right()) == c,
               p, path, "premise is not a conjunction with this conjunct");
        child(p, 0, path, "", {});
        return;
      case NDRule::BotElim:
        expect(prem(0).valid() && prem(0).is_bot(), p, path, "premise is not bot");
        child(p, 0, path, "", {});
        return;
      case NDRule::ClassIntro:
        expect(c.is_classical(), p, path, "conclusion is not classical");
        expect(prem(0).valid() && prem(0).is_bot(), p, path, "premise is not bot");
        child(p, 0, path, p.discharge[0], Formula::neg(intuitionistic_version(c)));
        return;
      case NDRule::ClassElim:
        expect(c.is_bot(), p, path, "conclusion is not bot");
        expect(prem(0).valid() && prem(0).is_classical(), p, path, "major premise is not classical");
        expect(prem(1) == Formula::neg(intuitionistic_version(prem(0))), p, path,
               "minor premise is not the negated intuitionistic version");
        child(p, 0, path, "", {});
        child(p, 1, path, "", {});
        return;
      case NDRule::Assume:
        return;
    }
  }
};

}  // namespace

NDSequent check_nd(const NDProof& p) {
  Checker c;
  c.run(p, "root");
  return {std::vector<Formula>(c.open.begin(), c.open.end()), p.conclusion};
}

// ---------------------------------------------------------------- text form

namespace {

void render_rec(const NDProof& p, int indent, std::string& out) {
  out += "(" + rule_name(p.rule) + " \"" + render(p.conclusion) + "\"";
  if (p.rule == NDRule::Assume) {
    if (!p.label.empty()) out += " " + p.label;
    out += ")";
    return;
  }
  if (!p.discharge.empty()) {
    out += " :discharge";
    for (const auto& l : p.discharge) out += " " + (l.empty() ? std::string("-") : l);
  }
  for (const auto& c : p.children) {
    out += "\n" + std::string(static_cast<std::size_t>(indent + 1) * 2, ' ');
    render_rec(c, indent + 1, out);
  }
  out += ")";
}

class ProofParser {
 public:
  explicit ProofParser(std::string_view s) : s_(s) {}

  NDProof run() {
    NDProof p = node();
    skip();
    if (pos_ != s_.size()) fail({"end of input"});
    return p;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip();
    throw ParseError(pos_, std::move(expected), pos_ < s_.size() ? std::string(1, s_[pos_]) : "end of input");
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail({std::string(1, c)});
    ++pos_;
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '(' &&
           s_[pos_] != ')' && s_[pos_] != '"')
      ++pos_;
    if (start == pos_) fail({"word"});
    return std::string(s_.substr(start, pos_ - start));
  }
  Formula quoted() {
    expect('"');
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '"') ++pos_;
    if (pos_ == s_.size()) fail({"\""});
    std::string_view body = s_.substr(start, pos_ - start);
    ++pos_;
    try {
      return parse(body);
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), e.expected(), "bad formula");
    } catch (const std::invalid_argument& e) {
      throw ParseError(start, {"formula"}, e.what());
    }
  }
  NDProof node() {
    expect('(');
    NDRule r;
    std::size_t at = pos_;
    try {
      r = rule_from_name(word());
    } catch (const std::invalid_argument&) {
      pos_ = at;
      fail({"rule name"});
    }
    Formula c = quoted();
    if (r == NDRule::Assume) {
      std::string label;
      if (!peek(')')) label = word();
      expect(')');
      return NDProof::assume(c, label);
    }
    std::vector<std::string> dis;
    skip();
    if (s_.substr(pos_, 10) == ":discharge") {
      pos_ += 10;
      while (!peek('(') && !peek(')')) {
        std::string w = word();
        dis.push_back(w == "-" ? std::string() : w);
      }
    }
    std::vector<NDProof> kids;
    while (peek('(')) kids.push_back(node());
    expect(')');
    NDProof p = NDProof::make(r, c, std::move(kids), dis);
    if (!dis.empty()) p.discharge = dis;
    return p;
  }
};

}  // namespace

std::string render_proof(const NDProof& p) {
  std::string out;
  render_rec(p, 0, out);
  return out;
}

NDProof parse_proof(std::string_view text) { return ProofParser(text).run(); }

bool decide_strong(const std::vector<Formula>& ctx, const Formula& a) {
  SequentGoal g;
  for (const auto& c : ctx) g.context.push_back(dn_translate(c));
  g.goal = dn_translate(a);
  return decide_ipc(g);
}

bool soundness_spotcheck(const Universe& u, const NDProof& p) {
  NDSequent s = check_nd(p);
  return strong_valid_in_universe(u, s.open, s.conclusion);
}

}  // namespace ecumen
