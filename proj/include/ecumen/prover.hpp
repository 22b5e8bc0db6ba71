#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ecumen/formula.hpp"
#include "ecumen/universe.hpp"

namespace ecumen {

enum class NDRule {
  Assume,
  ImpIntro,
  ImpElim,
  OrIntroL,
  OrIntroR,
  OrElim,
  AndIntro,
  AndElimL,
  AndElimR,
  BotElim,
  ClassIntro,
  ClassElim,
};

std::string rule_name(NDRule r);
NDRule rule_from_name(std::string_view s);

struct NDProof {
  NDRule rule = NDRule::Assume;
  Formula conclusion;
  std::string label;  // assumptions: binder label, empty when open
  // Binder labels: one for imp-intro and class-intro, two for or-elim.
  // An empty entry binds nothing.
  std::vector<std::string> discharge;
  std::vector<NDProof> children;

  static NDProof assume(Formula f, std::string label = "");
  static NDProof make(NDRule r, Formula conclusion, std::vector<NDProof> children,
                      std::vector<std::string> discharge = {});
  std::size_t depth() const;
  std::size_t size() const;
  bool operator==(const NDProof& o) const;
};

struct NDSequent {
  std::vector<Formula> open;  // structurally sorted, no duplicates
  Formula conclusion;
};

class NDError : public std::runtime_error {
 public:
  NDError(std::string rule, std::string path, const std::string& msg)
      : std::runtime_error(rule + " at " + path + ": " + msg), rule_(std::move(rule)), path_(std::move(path)) {}
  const std::string& rule() const { return rule_; }
  const std::string& path() const { return path_; }

 private:
  std::string rule_;
  std::string path_;
};

NDSequent check_nd(const NDProof& p);

// Nested text, one node per parenthesis group, children indented on their
// own lines. parse_proof(render_proof(p)) == p and the text round-trips.
std::string render_proof(const NDProof& p);
NDProof parse_proof(std::string_view text);

struct SequentGoal {
  std::vector<Formula> context;
  Formula goal;
};

// Intuitionistic provability via a contraction-free sequent calculus.
bool decide_ipc(const SequentGoal& g);
bool decide_strong(const std::vector<Formula>& ctx, const Formula& a);
bool soundness_spotcheck(const Universe& u, const NDProof& p);

}  // namespace ecumen
