#pragma once

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecumen {

// A basic sentence: an atom name or "bot".
using Basic = std::string;

struct Premise {
  std::vector<Basic> discharge;  // sorted, unique
  Basic conclusion;
  bool operator==(const Premise&) const = default;
};

struct AtomicRule {
  std::vector<Premise> premises;
  Basic conclusion;

  static AtomicRule axiom(Basic c) { return {{}, std::move(c)}; }
  static AtomicRule make(std::vector<Premise> premises, Basic c);
  bool is_axiom() const { return premises.empty(); }
  // Identity up to premise order.
  std::string key() const;
  bool operator==(const AtomicRule&) const = default;
};

Premise premise(std::vector<Basic> discharge, Basic conclusion);

std::string render_rule(const AtomicRule& r);
AtomicRule parse_rule(std::string_view line);

class Base {
 public:
  Base() = default;
  explicit Base(const std::vector<AtomicRule>& rules);

  // Returns false when an equal rule (up to premise order) is present.
  bool add(const AtomicRule& r);
  bool contains(const AtomicRule& r) const;
  const std::vector<AtomicRule>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  std::set<Basic> basics() const;

 private:
  std::vector<AtomicRule> rules_;
  std::set<std::string> keys_;
};

// One rule per line; blank lines and '#' comments are skipped.
Base parse_base(std::string_view text);
std::string render_base(const Base& s);
std::string render_base_inline(const Base& s);

bool derives(const Base& s, const std::set<Basic>& context, const Basic& goal);

struct Derivation {
  bool assumption = true;
  Basic conclusion;
  int label = 0;  // assumptions: binder label, 0 when open
  AtomicRule rule;
  std::vector<int> labels;  // rule nodes: one binder label per premise, 0 for none
  std::vector<Derivation> children;

  static Derivation assume(Basic b, int label = 0);
  static Derivation apply(AtomicRule r, std::vector<Derivation> children, std::vector<int> labels = {});
  std::size_t size() const;
};

std::optional<Derivation> derive_witness(const Base& s, const std::set<Basic>& context,
                                         const Basic& goal);

struct AtomicSequent {
  std::set<Basic> open;
  Basic conclusion;
};

class DerivationError : public std::runtime_error {
 public:
  enum class Code { UnknownRule, PremiseMismatch, IllScopedDischarge };
  DerivationError(Code c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

AtomicSequent check_derivation(const Base& s, const Derivation& d);

using RuleNamer = std::function<std::string(const AtomicRule&)>;
std::string render_derivation(const Derivation& d, const RuleNamer& name = {});

bool is_consistent(const Base& s);
bool extends(const Base& s, const Base& s2);
Base add_axiom(const Base& s, const Basic& p);
Base bot_complete(const Base& s, const std::vector<Basic>& vocab);
bool is_bot_complete(const Base& s, const std::vector<Basic>& vocab);

}  // namespace ecumen
