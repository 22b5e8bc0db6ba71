#include "ecumen/formula.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace ecumen {

namespace {

struct Key {
  Kind kind;
  std::string name;
  const Node* l;
  const Node* r;
  bool operator==(const Key& o) const {
    return kind == o.kind && name == o.name && l == o.l && r == o.r;
  }
};

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(k.name);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(k.kind));
    mix(k.l ? k.l->hash : 0);
    mix(k.r ? k.r->hash : 1);
    return h;
  }
};

struct Table {
  std::mutex mu;
  std::deque<Node> nodes;
  std::unordered_map<Key, const Node*, KeyHash> index;
};

Table& table() {
  static Table* t = new Table();
  return *t;
}

}  // namespace

Formula Formula::make(Kind k, std::string_view name, const Node* l, const Node* r) {
  Key key{k, std::string(name), l, r};
  std::size_t h = KeyHash{}(key);
  Table& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.index.find(key);
  if (it != t.index.end()) return Formula(it->second);
  Node& n = t.nodes.emplace_back();
  n.kind = k;
  n.name = key.name;
  n.l = l;
  n.r = r;
  n.id = t.nodes.size();
  n.hash = h;
  t.index.emplace(std::move(key), &n);
  return Formula(&n);
}

Formula Formula::basic_i(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  return make(Kind::BasicI, name, nullptr, nullptr);
}

Formula Formula::basic_c(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty atom name");
  return make(Kind::BasicC, name, nullptr, nullptr);
}

Formula Formula::conj(Formula l, Formula r) { return make(Kind::And, "", l.node_, r.node_); }
Formula Formula::disj(Formula l, Formula r) { return make(Kind::Or, "", l.node_, r.node_); }
Formula Formula::imp(Formula l, Formula r) { return make(Kind::Imp, "", l.node_, r.node_); }

Formula Formula::classical(Formula inner) {
  if (inner.is_basic()) throw std::invalid_argument("classical wrapper needs a compound formula");
  if (inner.kind() == Kind::Classical) throw std::invalid_argument("nested classical wrapper");
  return make(Kind::Classical, "", inner.node_, nullptr);
}

Formula Formula::classical_of(Formula a) {
  switch (a.kind()) {
    case Kind::BasicI:
      return basic_c(a.name());
    case Kind::BasicC:
    case Kind::Classical:
      throw std::invalid_argument("nested classical wrapper");
    default:
      return classical(a);
  }
}

Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
Formula Formula::left() const { return Formula(node_->l); }
Formula Formula::right() const { return Formula(node_->r); }
Formula Formula::inner() const { return Formula(node_->l); }
bool Formula::is_basic() const { return kind() == Kind::BasicI || kind() == Kind::BasicC; }
bool Formula::is_bot() const { return kind() == Kind::BasicI && node_->name == kBot; }
bool Formula::is_neg() const { return kind() == Kind::Imp && right().is_bot(); }
bool Formula::is_classical() const { return kind() == Kind::BasicC || kind() == Kind::Classical; }
std::uint64_t Formula::id() const { return node_ ? node_->id : 0; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }

int compare(const Formula& a, const Formula& b) {
  if (a == b) return 0;
  if (!a.valid()) return -1;
  if (!b.valid()) return 1;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case Kind::BasicI:
    case Kind::BasicC:
      return a.name() < b.name() ? -1 : 1;
    case Kind::Classical:
      return compare(a.inner(), b.inner());
    default: {
      int c = compare(a.left(), b.left());
      return c != 0 ? c : compare(a.right(), b.right());
    }
  }
}

bool Formula::operator<(const Formula& o) const { return compare(*this, o) < 0; }

// ---------------------------------------------------------------- parsing

static std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected one of {" +
                         join(expected) + "}, found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

bool is_atom_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return s != kBot;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Formula run() {
    Formula f = parse_iff();
    skip();
    if (pos_ != s_.size()) fail({"->", "<->", "|", "&", "end of input"});
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip();
    std::string found = pos_ < s_.size() ? "'" + std::string(1, s_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  Formula parse_iff() {
    Formula a = parse_imp();
    if (eat("<->")) {
      Formula b = parse_imp();
      return iff(a, b);
    }
    return a;
  }

  Formula parse_imp() {
    Formula a = parse_or();
    // "<->" also starts with '<', so only "->" is consumed here.
    if (!peek("<->") && eat("->")) return Formula::imp(a, parse_imp());
    return a;
  }

  Formula parse_or() {
    Formula a = parse_and();
    while (eat("|")) a = Formula::disj(a, parse_and());
    return a;
  }

  Formula parse_and() {
    Formula a = parse_unit();
    while (eat("&")) a = Formula::conj(a, parse_unit());
    return a;
  }

  // Returns 0 for none, 'i' or 'c'.
  char parse_sup() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == 'i' || s_[pos_] == 'c')) return s_[pos_++];
      fail({"i", "c"});
    }
    return 0;
  }

  Formula apply_sup(Formula f, char sup, std::size_t at) {
    if (sup != 'c') return f;
    if (f.is_classical()) throw ParseError(at, {"non-classical formula"}, "nested classical annotation");
    return Formula::classical_of(f);
  }

  Formula parse_unit() {
    skip();
    std::size_t at = pos_;
    if (eat("~")) return Formula::neg(parse_unit());
    if (eat("(")) {
      Formula f = parse_iff();
      if (!eat(")")) fail({")", "->", "<->", "|", "&"});
      return apply_sup(f, parse_sup(), at);
    }
    if (pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'z') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      char sup = parse_sup();
      return sup == 'c' ? Formula::basic_c(name) : Formula::basic_i(name);
    }
    fail({"atom", "bot", "~", "("});
  }
};

enum Level { kImp = 0, kOr = 1, kAnd = 2, kUnit = 3 };

Level level_of(const Formula& f) {
  switch (f.kind()) {
    case Kind::Imp:
      return f.is_neg() ? kUnit : kImp;
    case Kind::Or:
      return kOr;
    case Kind::And:
      return kAnd;
    default:
      return kUnit;
  }
}

void emit(const Formula& f, Level ctx, std::string& out);

void emit_at(const Formula& f, Level ctx, std::string& out) {
  if (level_of(f) < ctx) {
    out += '(';
    emit(f, kImp, out);
    out += ')';
  } else {
    emit(f, ctx, out);
  }
}

void emit(const Formula& f, Level, std::string& out) {
  switch (f.kind()) {
    case Kind::BasicI:
      out += f.name();
      return;
    case Kind::BasicC:
      out += f.name();
      out += "^c";
      return;
    case Kind::Classical:
      out += '(';
      emit(f.inner(), kImp, out);
      out += ")^c";
      return;
    case Kind::And:
      emit_at(f.left(), kAnd, out);
      out += " & ";
      emit_at(f.right(), kUnit, out);
      return;
    case Kind::Or:
      emit_at(f.left(), kOr, out);
      out += " | ";
      emit_at(f.right(), kAnd, out);
      return;
    case Kind::Imp:
      if (f.is_neg()) {
        out += '~';
        emit_at(f.left(), kUnit, out);
        return;
      }
      emit_at(f.left(), kOr, out);
      out += " -> ";
      emit_at(f.right(), kImp, out);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).run(); }

std::string render(const Formula& f) {
  std::string out;
  emit(f, kImp, out);
  return out;
}

std::string render_list(const std::vector<Formula>& fs) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += render(fs[i]);
  }
  return out;
}

// ---------------------------------------------------------------- measures

std::size_t complexity(const Formula& f) {
  switch (f.kind()) {
    case Kind::BasicI:
      return 0;
    case Kind::BasicC:
      return 1;
    case Kind::Classical:
      return complexity(f.inner()) + 1;
    default:
      return complexity(f.left()) + complexity(f.right()) + 1;
  }
}

static void collect_sub(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  switch (f.kind()) {
    case Kind::BasicI:
      return;
    case Kind::BasicC:
      out.insert(Formula::basic_i(f.name()));
      return;
    case Kind::Classical:
      collect_sub(f.inner(), out);
      return;
    default:
      collect_sub(f.left(), out);
      collect_sub(f.right(), out);
  }
}

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collect_sub(f, out);
  return out;
}

Formula dn_translate(const Formula& f) {
  switch (f.kind()) {
    case Kind::BasicI:
      return f;
    case Kind::BasicC:
      return Formula::neg(Formula::neg(Formula::basic_i(f.name())));
    case Kind::Classical:
      return Formula::neg(Formula::neg(dn_translate(f.inner())));
    case Kind::And:
      return Formula::conj(dn_translate(f.left()), dn_translate(f.right()));
    case Kind::Or:
      return Formula::disj(dn_translate(f.left()), dn_translate(f.right()));
    case Kind::Imp:
      return Formula::imp(dn_translate(f.left()), dn_translate(f.right()));
  }
  return f;
}

bool is_intuitionistic(const Formula& f) {
  switch (f.kind()) {
    case Kind::BasicI:
      return true;
    case Kind::BasicC:
    case Kind::Classical:
      return false;
    default:
      return is_intuitionistic(f.left()) && is_intuitionistic(f.right());
  }
}

static void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::BasicI:
    case Kind::BasicC:
      if (f.name() != kBot) out.insert(f.name());
      return;
    case Kind::Classical:
      collect_atoms(f.inner(), out);
      return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

Formula intuitionistic_version(const Formula& f) {
  if (f.kind() == Kind::BasicC) return Formula::basic_i(f.name());
  if (f.kind() == Kind::Classical) return f.inner();
  return f;
}

Formula classical_version(const Formula& f) {
  if (f.is_classical()) return f;
  return Formula::classical_of(f);
}

Formula iff(Formula a, Formula b) { return Formula::conj(Formula::imp(a, b), Formula::imp(b, a)); }

}  // namespace ecumen
