#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecumen {

// Name of the falsum basic sentence. Atoms are any other names.
inline constexpr std::string_view kBot = "bot";

enum class Kind : std::uint8_t { BasicI, BasicC, And, Or, Imp, Classical };

struct Node;

// Hash-consed, immutable formula handle. Structurally equal formulas share
// one node, so equality is pointer comparison.
class Formula {
 public:
  Formula() = default;

  static Formula basic_i(std::string_view name);
  static Formula basic_c(std::string_view name);
  static Formula atom(std::string_view name) { return basic_i(name); }
  static Formula bot() { return basic_i(kBot); }
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula imp(Formula l, Formula r);
  static Formula neg(Formula a) { return imp(a, bot()); }
  // Wraps a compound formula. Throws on basics and on nesting.
  static Formula classical(Formula inner);
  // The ^c of a formula: BasicC for basics, Classical for compounds.
  static Formula classical_of(Formula a);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;
  const std::string& name() const;  // basics only
  Formula left() const;
  Formula right() const;
  Formula inner() const;  // Classical only

  bool is_basic() const;
  bool is_bot() const;  // BasicI(bot)
  bool is_neg() const;  // Imp(x, bot)
  bool is_classical() const;  // BasicC or Classical
  std::uint64_t id() const;
  std::size_t hash() const;

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  bool operator!=(const Formula& o) const { return node_ != o.node_; }
  // Structural total order, independent of construction history.
  bool operator<(const Formula& o) const;

  const Node* raw() const { return node_; }

 private:
  explicit Formula(const Node* n) : node_(n) {}
  static Formula make(Kind k, std::string_view name, const Node* l, const Node* r);
  const Node* node_ = nullptr;
};

struct Node {
  Kind kind;
  std::string name;
  const Node* l = nullptr;
  const Node* r = nullptr;
  std::uint64_t id = 0;
  std::size_t hash = 0;
};

int compare(const Formula& a, const Formula& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

// Surface syntax. Accepts "<->" as sugar for a conjunction of implications.
Formula parse(std::string_view text);
std::string render(const Formula& f);

bool is_atom_name(std::string_view s);

std::size_t complexity(const Formula& f);
std::set<Formula> subformulas(const Formula& f);
Formula dn_translate(const Formula& f);
bool is_intuitionistic(const Formula& f);
// Atom names occurring in f, falsum excluded.
std::set<std::string> atoms(const Formula& f);

// A^i of a classical formula (identity on anything else).
Formula intuitionistic_version(const Formula& f);
// A^c of any formula; identity on classical formulas.
Formula classical_version(const Formula& f);

Formula iff(Formula a, Formula b);

std::string render_list(const std::vector<Formula>& fs);

}  // namespace ecumen

template <>
struct std::hash<ecumen::Formula> {
  std::size_t operator()(const ecumen::Formula& f) const noexcept { return f.hash(); }
};
