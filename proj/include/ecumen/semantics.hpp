#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecumen/formula.hpp"
#include "ecumen/universe.hpp"

namespace ecumen {

enum class JudgementKind { WeakLocal, WeakGlobal, Strong };

std::string to_string(JudgementKind k);
JudgementKind parse_kind(std::string_view s);

struct EvalOptions {
  // Evaluate the weak disjunction clause with global instead of local
  // consequence. Off by default.
  bool global_disjunction = false;
};

// What a trace node asserts. Cons kinds carry a nonempty context.
enum class TraceKind { WeakAt, WeakLocalCons, WeakGlobalCons, StrongAt, StrongCons };

struct EvalTrace {
  TraceKind kind;
  BaseId base;
  std::vector<Formula> context;
  Formula conclusion;
  std::string clause;
  bool result = false;
  std::optional<BaseId> witness;
  std::vector<EvalTrace> children;

  std::size_t depth() const;
};

std::string render_trace(const Universe& u, const EvalTrace& t, int indent = 0);

// Empty context means the bare assertion at S.
bool weak_local(const Universe& u, BaseId s, const std::vector<Formula>& ctx, const Formula& a,
                EvalTrace* trace = nullptr, const EvalOptions& opt = {});
bool weak_global(const Universe& u, BaseId s, const std::vector<Formula>& ctx, const Formula& a,
                 EvalTrace* trace = nullptr, const EvalOptions& opt = {});
bool weak_valid(const Universe& u, const std::vector<Formula>& ctx, const Formula& a,
                const EvalOptions& opt = {});
bool strong_sat(const Universe& u, BaseId s, const std::vector<Formula>& ctx, const Formula& a,
                EvalTrace* trace = nullptr);
bool strong_valid_in_universe(const Universe& u, const std::vector<Formula>& ctx, const Formula& a);

// Truth values at every base of u, indexed by BaseId.
std::vector<char> weak_local_all(const Universe& u, const std::vector<Formula>& ctx, const Formula& a,
                                 const EvalOptions& opt = {});
std::vector<char> weak_global_all(const Universe& u, const std::vector<Formula>& ctx, const Formula& a,
                                  const EvalOptions& opt = {});
std::vector<char> strong_sat_all(const Universe& u, const std::vector<Formula>& ctx, const Formula& a);

// Re-evaluates the assertion a trace node makes.
bool evaluate_trace_node(const Universe& u, const EvalTrace& t, const EvalOptions& opt = {});

std::optional<std::pair<BaseId, BaseId>> check_monotonic(const Universe& u, const Formula& a,
                                                         const EvalOptions& opt = {});

struct Counterexample {
  BaseId base;
  EvalTrace trace;
};

std::optional<Counterexample> find_weak_counterexample(const Universe& u, const std::vector<Formula>& ctx,
                                                       const Formula& a, JudgementKind kind,
                                                       const EvalOptions& opt = {});

// Throws std::invalid_argument when a formula mentions an atom outside the
// universe vocabulary.
void require_vocab(const Universe& u, const std::vector<Formula>& fs);

}  // namespace ecumen
