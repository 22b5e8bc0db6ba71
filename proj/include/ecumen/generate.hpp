#pragma once

#include <random>
#include <vector>

#include "ecumen/base.hpp"
#include "ecumen/formula.hpp"
#include "ecumen/prover.hpp"
#include "ecumen/simulation.hpp"

namespace ecumen {

struct EnumOptions {
  std::vector<std::string> atoms{"p", "q"};
  std::size_t max_connectives = 2;
  bool classical = true;  // p^c leaves and (A)^c wrappers
  bool bot = true;
};

// Every formula with at most max_connectives binary connectives or classical
// wrappers, without duplicates, in structural order.
std::vector<Formula> enumerate_formulas(const EnumOptions& opt);

Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms, int depth,
                       double classical_prob = 0.25);

Base random_base(std::mt19937& rng, const std::vector<Basic>& vocab, std::size_t rules, int max_premises = 2,
                 int max_discharge = 1);

// A well-formed proof whose open assumptions are arbitrary leaves.
NDProof random_nd_proof(std::mt19937& rng, const std::vector<std::string>& atoms, int depth);

// A derivation over N concluding goal, biased toward redexes.
Derivation random_n_derivation(const NBase& n, const Basic& goal, int depth, std::mt19937& rng);

}  // namespace ecumen
