#pragma once
// Test-only evaluator that follows the validity clauses one by one, with
// plain recursion over the extension lists of a universe. It shares nothing
// with the production evaluator beyond the universe's base list.

#include <map>
#include <tuple>
#include <vector>

#include "ecumen/formula.hpp"
#include "ecumen/universe.hpp"

namespace oracle {

class NaiveSemantics {
 public:
  explicit NaiveSemantics(const ecumen::Universe& u) : u_(u) {
    for (std::size_t i = 0; i < u.size(); ++i) exts_.push_back(u.extensions_of(static_cast<ecumen::BaseId>(i)));
    atoms_ = u.config().vocab;
    atoms_.push_back("bot");
  }

  bool derives_atom(ecumen::BaseId s, const std::string& p) const { return ecumen::derives(u_.base(s), {}, p); }
  bool refutes_atom(ecumen::BaseId s, const std::string& p) const {
    return ecumen::derives(u_.base(s), {p}, "bot");
  }

  // Weak: local assertion, local consequence, global consequence.
  bool local(ecumen::BaseId s, const ecumen::Formula& a) {
    auto key = std::make_tuple('w', s, a.id(), std::uint64_t{0});
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = false;
    using ecumen::Kind;
    switch (a.kind()) {
      case Kind::BasicI:
        r = derives_atom(s, a.name());
        break;
      case Kind::BasicC:
        r = !refutes_atom(s, a.name());
        break;
      case Kind::Classical:
        r = !local_cons(s, ecumen::intuitionistic_version(a), ecumen::Formula::bot());
        break;
      case Kind::And:
        r = local(s, a.left()) && local(s, a.right());
        break;
      case Kind::Imp:
        r = global_cons(s, a.left(), a.right());
        break;
      case Kind::Or:
        r = true;
        for (auto t : exts_[static_cast<std::size_t>(s)])
          for (const auto& p : atoms_) {
            const auto pf = ecumen::Formula::atom(p);
            if (local_cons(t, a.left(), pf) && local_cons(t, a.right(), pf) && !local(t, pf)) r = false;
          }
        break;
    }
    memo_[key] = r;
    return r;
  }

  bool local_cons(ecumen::BaseId s, const ecumen::Formula& g, const ecumen::Formula& a) {
    auto key = std::make_tuple('l', s, g.id(), a.id());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = true;
    for (auto t : exts_[static_cast<std::size_t>(s)])
      if (local(t, g) && !local(t, a)) r = false;
    memo_[key] = r;
    return r;
  }

  bool global_cons(ecumen::BaseId s, const ecumen::Formula& g, const ecumen::Formula& a) {
    auto key = std::make_tuple('g', s, g.id(), a.id());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = true;
    for (auto t : exts_[static_cast<std::size_t>(s)]) {
      bool hyp = true;
      for (auto v : exts_[static_cast<std::size_t>(t)]) hyp = hyp && local(v, g);
      if (!hyp) continue;
      for (auto v : exts_[static_cast<std::size_t>(t)])
        if (!local(v, a)) r = false;
    }
    memo_[key] = r;
    return r;
  }

  // Strong satisfaction.
  bool strong(ecumen::BaseId s, const ecumen::Formula& a) {
    auto key = std::make_tuple('s', s, a.id(), std::uint64_t{0});
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = false;
    using ecumen::Kind;
    switch (a.kind()) {
      case Kind::BasicI:
        r = derives_atom(s, a.name());
        break;
      case Kind::BasicC:
        r = true;
        for (auto t : exts_[static_cast<std::size_t>(s)]) r = r && !refutes_atom(t, a.name());
        break;
      case Kind::Classical:
        r = true;
        for (auto t : exts_[static_cast<std::size_t>(s)])
          r = r && !strong_cons(t, ecumen::intuitionistic_version(a), ecumen::Formula::bot());
        break;
      case Kind::And:
        r = strong(s, a.left()) && strong(s, a.right());
        break;
      case Kind::Imp:
        r = strong_cons(s, a.left(), a.right());
        break;
      case Kind::Or:
        r = true;
        for (auto t : exts_[static_cast<std::size_t>(s)])
          for (const auto& p : atoms_) {
            const auto pf = ecumen::Formula::atom(p);
            if (strong_cons(t, a.left(), pf) && strong_cons(t, a.right(), pf) && !strong(t, pf)) r = false;
          }
        break;
    }
    memo_[key] = r;
    return r;
  }

  bool strong_cons(ecumen::BaseId s, const ecumen::Formula& g, const ecumen::Formula& a) {
    auto key = std::make_tuple('t', s, g.id(), a.id());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = true;
    for (auto t : exts_[static_cast<std::size_t>(s)])
      if (strong(t, g) && !strong(t, a)) r = false;
    memo_[key] = r;
    return r;
  }

 private:
  const ecumen::Universe& u_;
  std::vector<std::vector<ecumen::BaseId>> exts_;
  std::vector<std::string> atoms_;
  std::map<std::tuple<char, ecumen::BaseId, std::uint64_t, std::uint64_t>, bool> memo_;
};

}  // namespace oracle
