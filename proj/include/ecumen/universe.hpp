#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ecumen/base.hpp"

namespace ecumen {

struct UniverseConfig {
  std::vector<Basic> vocab;
  int max_premises = 1;
  int max_discharge = 1;
  bool include_bot_conclusions = true;
  std::vector<AtomicRule> extra_rules;
  std::size_t pool_cap = 16;
};

// "vocab=p,q;max_premises=1;max_discharge=1;pool_cap=16;bot=1"
UniverseConfig parse_universe_config(std::string_view text);
std::string render_config(const UniverseConfig& cfg);

// Generated candidate rules plus extras, deduplicated, in lexicographic order
// of their serialization. Not capped.
std::vector<AtomicRule> generate_pool(const UniverseConfig& cfg);

class PoolTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BaseId = int;

class Universe {
 public:
  explicit Universe(UniverseConfig cfg);

  const UniverseConfig& config() const { return cfg_; }
  const std::vector<AtomicRule>& pool() const { return pool_; }
  std::size_t size() const { return masks_.size(); }
  // Vocabulary atoms followed by bot.
  const std::vector<Basic>& basics() const { return basics_; }
  std::size_t bot_index() const { return basics_.size() - 1; }
  std::optional<std::size_t> basic_index(const Basic& b) const;

  std::uint32_t mask(BaseId id) const { return masks_.at(static_cast<std::size_t>(id)); }
  Base base(BaseId id) const;
  std::optional<BaseId> find(const Base& s) const;
  std::optional<BaseId> find_mask(std::uint32_t m) const;
  // Consistent bases with exactly one more pool rule.
  const std::vector<BaseId>& covers(BaseId id) const { return covers_.at(static_cast<std::size_t>(id)); }
  std::vector<BaseId> extensions_of(BaseId id) const;
  bool is_extension(BaseId s, BaseId s2) const { return (mask(s) & ~mask(s2)) == 0; }

  // derives(S, {}, b) and derives(S, {b}, bot) for b in basics().
  bool proves(BaseId id, std::size_t b) const { return proves_[idx(id, b)] != 0; }
  bool refutes(BaseId id, std::size_t b) const { return refutes_[idx(id, b)] != 0; }

  std::string fingerprint() const { return fingerprint_; }
  std::string describe(BaseId id) const;

  // Evaluation cache shared by the semantic evaluators.
  using Vec = std::vector<char>;
  std::optional<Vec> memo_get(const std::string& key) const;
  void memo_put(const std::string& key, const Vec& v) const;

 private:
  std::size_t idx(BaseId id, std::size_t b) const {
    return static_cast<std::size_t>(id) * basics_.size() + b;
  }

  UniverseConfig cfg_;
  std::vector<AtomicRule> pool_;
  std::vector<Basic> basics_;
  std::vector<std::uint32_t> masks_;
  std::unordered_map<std::uint32_t, BaseId> by_mask_;
  std::vector<std::vector<BaseId>> covers_;
  std::vector<char> proves_;
  std::vector<char> refutes_;
  std::string fingerprint_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<std::string, Vec> memo_;
};

}  // namespace ecumen
