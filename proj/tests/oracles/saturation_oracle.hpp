#pragma once
// Test-only derivability: full bottom-up fixpoint over every (context, goal)
// pair drawn from the relevant basics, iterated until nothing changes.

#include <set>
#include <string>
#include <vector>

#include "ecumen/base.hpp"

namespace oracle {

inline bool naive_derives(const ecumen::Base& s, const std::set<ecumen::Basic>& ctx, const ecumen::Basic& goal) {
  std::set<ecumen::Basic> rel = s.basics();
  rel.insert(ctx.begin(), ctx.end());
  rel.insert(goal);
  rel.insert("bot");
  const std::vector<ecumen::Basic> bs(rel.begin(), rel.end());
  const std::size_t n = bs.size();
  auto index = [&](const ecumen::Basic& b) {
    for (std::size_t i = 0; i < n; ++i)
      if (bs[i] == b) return i;
    return n;
  };
  // holds[mask * n + q]
  std::vector<char> holds((std::size_t{1} << n) * n, 0);
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m)
    for (std::size_t q = 0; q < n; ++q)
      if ((m >> q) & 1) holds[m * n + q] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      for (const auto& r : s.rules()) {
        const std::size_t c = index(r.conclusion);
        if (holds[m * n + c]) continue;
        bool all = true;
        for (const auto& p : r.premises) {
          std::size_t mm = m;
          for (const auto& d : p.discharge) mm |= std::size_t{1} << index(d);
          if (!holds[mm * n + index(p.conclusion)]) {
            all = false;
            break;
          }
        }
        if (all) {
          holds[m * n + c] = 1;
          changed = true;
        }
      }
    }
  }
  std::size_t m = 0;
  for (const auto& c : ctx) m |= std::size_t{1} << index(c);
  return holds[m * n + index(goal)] != 0;
}

}  // namespace oracle
