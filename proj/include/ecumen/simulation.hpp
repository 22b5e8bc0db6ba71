#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecumen/base.hpp"
#include "ecumen/formula.hpp"
#include "ecumen/prover.hpp"

namespace ecumen {

std::set<Formula> gamma_star(const std::vector<Formula>& ctx, const Formula& a);

struct AlphaMap {
  std::map<Formula, Basic> forward;
  std::map<Basic, Formula> backward;

  const Basic& atom(const Formula& f) const;
  // Inverse image; bot maps to bot and unmapped atoms pass through.
  Formula formula(const Basic& b) const;
  bool mapped(const Basic& b) const { return backward.count(b) > 0; }
};

// Reserved-sigil name for a formula that is not an intuitionistic basic.
Basic fresh_atom(const Formula& f);
AlphaMap make_alpha(const std::set<Formula>& gs);

enum class Schema { ImpInt, ImpElim, OrIntL, OrIntR, OrElim, AndInt, AndElimL, AndElimR, ClassInt, ClassElim, BotElim };

std::string schema_name(Schema s);
bool is_intro(Schema s);

struct RuleTag {
  Schema schema;
  Formula source;  // invalid for BotElim
  Basic q;         // OrElim and BotElim only
};

struct NBase {
  Base base;
  std::vector<RuleTag> tags;  // parallel to base.rules()
  std::vector<Basic> vocab;
  AlphaMap alpha;

  const RuleTag& tag(const AtomicRule& r) const;
  std::optional<AtomicRule> find(Schema s, const Formula& source, const Basic& q = {}) const;
  const std::vector<std::size_t>& concluding(const Basic& b) const;

  std::map<std::string, std::size_t> by_key;
  std::map<Basic, std::vector<std::size_t>> by_conclusion;
};

// Empty vocab means range(alpha) plus bot. Throws when vocab misses one of those.
NBase build_N(const std::set<Formula>& gs, const AlphaMap& alpha, std::vector<Basic> vocab = {});
std::string render_N(const NBase& n);
std::string rule_label(const NBase& n, const AtomicRule& r);

int formula_degree(const Formula& f);
int degree_of(const AlphaMap& alpha, const Basic& atom);

enum class RedexKind { MaximumFormula, MaximumSegment };

struct Redex {
  RedexKind kind;
  std::vector<std::size_t> path;  // the elimination whose major premise is the vertex
  Basic vertex;
  int degree = 0;
  std::size_t length = 1;  // longest maximum thread through or-elim minor premises
  bool from_bot = false;   // segment begins with bot-elim
};

std::string render_redex(const Redex& r);

std::vector<Redex> find_redexes(const Derivation& d, const NBase& n);
int derivation_degree(const Derivation& d, const NBase& n);
bool is_normal(const Derivation& d, const NBase& n);
Derivation subderivation(const Derivation& d, const std::vector<std::size_t>& path);

class StaleRedex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Derivation reduce_once(const Derivation& d, const Redex& r, const NBase& n);

enum class Strategy { Degree, Innermost };
Strategy parse_strategy(std::string_view s);

struct NormalizeStats {
  std::size_t steps = 0;
  // Derivation degree at the start of each degree-directed phase, then the
  // final degree.
  std::vector<int> phase_degrees;
  // Total length of the maximal-degree segments before each step.
  std::vector<std::size_t> secondary;
};

Derivation normalize(const Derivation& d, const NBase& n, Strategy s, NormalizeStats* stats = nullptr,
                     std::size_t max_steps = 200000);

// Rewrites every rule to its stored premise order.
Derivation canonicalize(const Derivation& d, const NBase& n);

// Fresh binder labels, numbered in depth-first order.
Derivation relabel(const Derivation& d);

struct ConsistencyReport {
  bool saturation = false;  // bot is not derivable from no assumptions
  bool structural = false;  // sampled normal derivations behave as the argument predicts
  std::size_t sampled = 0;
  bool consistent() const { return saturation && structural; }
};

ConsistencyReport consistency_of_N(const NBase& n, std::size_t samples = 64, unsigned seed = 1);

struct RoundTrip {
  NDProof proof;
  bool inconsistent_case = false;
  NBase n;
  Derivation atomic;      // after axiom replacement
  Derivation normalized;  // after normalization
  NormalizeStats stats;
};

RoundTrip completeness_roundtrip(const std::vector<Formula>& ctx, const Formula& a, Strategy s = Strategy::Degree);

// Maps a derivation over N back to natural deduction.
NDProof to_nd(const Derivation& d, const NBase& n);

}  // namespace ecumen
