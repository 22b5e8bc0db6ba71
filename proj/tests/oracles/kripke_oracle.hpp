#pragma once
// Test-only intuitionistic countermodel search over every Kripke model with
// at most three worlds. Deliberately naive: enumerates preorders and monotone
// valuations and evaluates forcing by definition.

#include <set>
#include <string>
#include <vector>

#include "ecumen/formula.hpp"

namespace oracle {

struct Frame {
  int n = 1;
  bool le[3][3] = {};  // le[i][j]: j is accessible from i
};

inline std::vector<Frame> preorders(int max_worlds = 3) {
  std::vector<Frame> out;
  for (int n = 1; n <= max_worlds; ++n) {
    const int pairs = n * n;
    for (int bits = 0; bits < (1 << pairs); ++bits) {
      Frame f;
      f.n = n;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) f.le[i][j] = (bits >> (i * n + j)) & 1;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = f.le[i][i];
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          for (int k = 0; k < n && ok; ++k)
            if (f.le[i][j] && f.le[j][k] && !f.le[i][k]) ok = false;
      if (ok) out.push_back(f);
    }
  }
  return out;
}

// A valuation maps each atom to the set of worlds where it holds (bitmask).
inline bool upward_closed(const Frame& f, int set) {
  for (int i = 0; i < f.n; ++i)
    if ((set >> i) & 1)
      for (int j = 0; j < f.n; ++j)
        if (f.le[i][j] && !((set >> j) & 1)) return false;
  return true;
}

inline bool forces(const Frame& f, const std::vector<std::string>& atoms, const std::vector<int>& val, int w,
                   const ecumen::Formula& a) {
  using ecumen::Kind;
  switch (a.kind()) {
    case Kind::BasicI: {
      if (a.is_bot()) return false;
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (atoms[i] == a.name()) return (val[i] >> w) & 1;
      return false;
    }
    case Kind::And:
      return forces(f, atoms, val, w, a.left()) && forces(f, atoms, val, w, a.right());
    case Kind::Or:
      return forces(f, atoms, val, w, a.left()) || forces(f, atoms, val, w, a.right());
    case Kind::Imp:
      for (int v = 0; v < f.n; ++v)
        if (f.le[w][v] && forces(f, atoms, val, v, a.left()) && !forces(f, atoms, val, v, a.right())) return false;
      return true;
    default:
      throw std::invalid_argument("kripke oracle: classical formula");
  }
}

// True when no model with at most three worlds refutes ctx |- a.
inline bool kripke_valid(const std::vector<ecumen::Formula>& ctx, const ecumen::Formula& a) {
  std::set<std::string> names = ecumen::atoms(a);
  for (const auto& g : ctx)
    for (const auto& n : ecumen::atoms(g)) names.insert(n);
  const std::vector<std::string> atoms(names.begin(), names.end());
  for (const Frame& f : preorders()) {
    std::vector<int> ups;
    for (int s = 0; s < (1 << f.n); ++s)
      if (upward_closed(f, s)) ups.push_back(s);
    std::vector<std::size_t> idx(atoms.size(), 0);
    for (;;) {
      std::vector<int> val;
      for (auto i : idx) val.push_back(ups[i]);
      for (int w = 0; w < f.n; ++w) {
        bool hyps = true;
        for (const auto& g : ctx) hyps = hyps && forces(f, atoms, val, w, g);
        if (hyps && !forces(f, atoms, val, w, a)) return false;
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == ups.size()) idx[k++] = 0;
      if (k == idx.size()) break;
    }
  }
  return true;
}

}  // namespace oracle
