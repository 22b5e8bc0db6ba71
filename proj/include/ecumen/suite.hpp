#pragma once

#include <string>
#include <vector>

#include "ecumen/universe.hpp"

namespace ecumen {

struct SuiteLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

// vocab {p,q}, one premise, one discharged atom, plus (p |- bot) => q.
UniverseConfig default_config();

// Lemmas and theorems about weak validity, checked over every base of u and
// every formula over u's vocabulary with at most max_connectives connectives.
// Pair properties use formulas with at most pair_connectives connectives.
std::vector<SuiteLine> weak_suite(const Universe& u, std::size_t max_connectives = 2,
                                  std::size_t pair_connectives = 1);

// Strong validity through the prover against weak validity in u.
std::vector<SuiteLine> contrast_suite(const Universe& u);

std::string render_suite(const std::vector<SuiteLine>& lines);

}  // namespace ecumen
