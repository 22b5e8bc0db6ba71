#include "ecumen/generate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ecumen {

std::vector<Formula> enumerate_formulas(const EnumOptions& opt) {
  // layer[k]: formulas with exactly k connectives
  std::vector<std::vector<Formula>> layer(opt.max_connectives + 1);
  for (const auto& a : opt.atoms) {
    layer[0].push_back(Formula::atom(a));
    if (opt.classical) layer[0].push_back(Formula::basic_c(a));
  }
  if (opt.bot) layer[0].push_back(Formula::bot());
  for (std::size_t k = 1; k <= opt.max_connectives; ++k) {
    std::set<Formula> seen;
    for (std::size_t i = 0; i < k; ++i) {
      for (const auto& l : layer[i])
        for (const auto& r : layer[k - 1 - i]) {
          seen.insert(Formula::conj(l, r));
          seen.insert(Formula::disj(l, r));
          seen.insert(Formula::imp(l, r));
        }
    }
    if (opt.classical)
      for (const auto& f : layer[k - 1])
        if (!f.is_basic() && f.kind() != Kind::Classical) seen.insert(Formula::classical(f));
    layer[k].assign(seen.begin(), seen.end());
  }
  std::vector<Formula> out;
  for (const auto& l : layer) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  return out;
}

Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms, int depth, double classical_prob) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (depth <= 0 || u(rng) < 0.3) {
    if (u(rng) < 0.1) return Formula::bot();
    const auto& a = atoms[rng() % atoms.size()];
    return u(rng) < classical_prob ? Formula::basic_c(a) : Formula::atom(a);
  }
  Formula l = random_formula(rng, atoms, depth - 1, classical_prob);
  Formula r = random_formula(rng, atoms, depth - 1, classical_prob);
  Formula f;
  switch (rng() % 3) {
    case 0: f = Formula::conj(l, r); break;
    case 1: f = Formula::disj(l, r); break;
    default: f = Formula::imp(l, r); break;
  }
  if (u(rng) < classical_prob / 2) f = Formula::classical(f);
  return f;
}

Base random_base(std::mt19937& rng, const std::vector<Basic>& vocab, std::size_t rules, int max_premises,
                 int max_discharge) {
  std::vector<Basic> concl = vocab;
  concl.push_back(Basic(kBot));
  Base s;
  for (std::size_t tries = 0; s.size() < rules && tries < rules * 20; ++tries) {
    std::vector<Premise> ps;
    const int np = static_cast<int>(rng() % static_cast<unsigned>(max_premises + 1));
    for (int i = 0; i < np; ++i) {
      std::vector<Basic> dis;
      const int nd = static_cast<int>(rng() % static_cast<unsigned>(max_discharge + 1));
      for (int j = 0; j < nd; ++j) dis.push_back(vocab[rng() % vocab.size()]);
      ps.push_back(premise(dis, concl[rng() % concl.size()]));
    }
    s.add(AtomicRule::make(ps, concl[rng() % concl.size()]));
  }
  return s;
}

// ---------------------------------------------------------------- NE_B proofs

namespace {

class ProofGen {
 public:
  ProofGen(std::mt19937& rng, const std::vector<std::string>& atoms) : rng_(rng), atoms_(atoms) {}

  NDProof gen(const Formula& goal, int depth) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (depth <= 1 || u(rng_) < 0.15) return leaf(goal);
    std::vector<int> options;
    switch (goal.kind()) {
      case Kind::And: options.push_back(0); break;
      case Kind::Or: options.push_back(1); break;
      case Kind::Imp: options.push_back(2); break;
      case Kind::BasicC:
      case Kind::Classical: options.push_back(3); break;
      default: break;
    }
    if (!options.empty()) options.push_back(options.front());
    options.insert(options.end(), {4, 5, 6, 7});
    if (goal.is_bot()) options.push_back(8);
    if (!goal.is_bot()) options.push_back(9);
    const Formula small = random_formula(rng_, atoms_, 1, 0.3);
    switch (options[rng_() % options.size()]) {
      case 0:
        return NDProof::make(NDRule::AndIntro, goal, {gen(goal.left(), depth - 1), gen(goal.right(), depth - 1)});
      case 1: {
        const bool left = rng_() % 2 == 0;
        return NDProof::make(left ? NDRule::OrIntroL : NDRule::OrIntroR, goal,
                             {gen(left ? goal.left() : goal.right(), depth - 1)});
      }
      case 2: {
        std::string l = bind(goal.left());
        NDProof body = gen(goal.right(), depth - 1);
        unbind(l);
        return NDProof::make(NDRule::ImpIntro, goal, {std::move(body)}, {l});
      }
      case 3: {
        std::string l = bind(Formula::neg(intuitionistic_version(goal)));
        NDProof body = gen(Formula::bot(), depth - 1);
        unbind(l);
        return NDProof::make(NDRule::ClassIntro, goal, {std::move(body)}, {l});
      }
      case 4:
        return NDProof::make(NDRule::ImpElim, goal,
                             {gen(Formula::imp(small, goal), depth - 1), gen(small, depth - 1)});
      case 5: {
        const bool left = rng_() % 2 == 0;
        Formula c = left ? Formula::conj(goal, small) : Formula::conj(small, goal);
        return NDProof::make(left ? NDRule::AndElimL : NDRule::AndElimR, goal, {gen(c, depth - 1)});
      }
      case 6: {
        const Formula other = random_formula(rng_, atoms_, 1, 0.3);
        NDProof major = gen(Formula::disj(small, other), depth - 1);
        std::string l1 = bind(small);
        NDProof b1 = gen(goal, depth - 1);
        unbind(l1);
        std::string l2 = bind(other);
        NDProof b2 = gen(goal, depth - 1);
        unbind(l2);
        return NDProof::make(NDRule::OrElim, goal, {std::move(major), std::move(b1), std::move(b2)}, {l1, l2});
      }
      case 8: {
        Formula c = small.is_classical() ? small
                    : small.is_bot()     ? Formula::basic_c(atoms_.front())
                                         : Formula::classical_of(small);
        return NDProof::make(NDRule::ClassElim, goal,
                             {gen(c, depth - 1), gen(Formula::neg(intuitionistic_version(c)), depth - 1)});
      }
      default:
        return NDProof::make(NDRule::BotElim, goal, {gen(Formula::bot(), depth - 1)});
    }
  }

 private:
  std::mt19937& rng_;
  const std::vector<std::string>& atoms_;
  std::vector<std::pair<std::string, Formula>> env_;
  int next_ = 0;

  std::string bind(const Formula& f) {
    std::string l = "u" + std::to_string(++next_);
    env_.emplace_back(l, f);
    return l;
  }
  void unbind(const std::string& l) {
    env_.erase(std::remove_if(env_.begin(), env_.end(), [&](const auto& e) { return e.first == l; }), env_.end());
  }
  NDProof leaf(const Formula& goal) {
    std::vector<std::string> hits;
    for (const auto& [l, f] : env_)
      if (f == goal) hits.push_back(l);
    if (!hits.empty() && rng_() % 4 != 0) return NDProof::assume(goal, hits[rng_() % hits.size()]);
    return NDProof::assume(goal);
  }
};

}  // namespace

NDProof random_nd_proof(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  ProofGen g(rng, atoms);
  return g.gen(random_formula(rng, atoms, 2, 0.3), depth);
}

// ---------------------------------------------------------------- N derivations

namespace {

class NGen {
 public:
  NGen(const NBase& n, std::mt19937& rng) : n_(n), rng_(rng) {}

  Derivation gen(const Basic& goal, int depth, bool major) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const auto& cands = n_.concluding(goal);
    if (depth <= 0 || cands.empty() || u(rng_) < 0.1) return leaf(goal);
    std::vector<std::size_t> pool = cands;
    if (major && u(rng_) < 0.7) {
      std::vector<std::size_t> redexy;
      for (auto i : cands) {
        Schema s = n_.tags[i].schema;
        if (is_intro(s) || s == Schema::BotElim || s == Schema::OrElim) redexy.push_back(i);
      }
      if (!redexy.empty()) pool = redexy;
    }
    const std::size_t pick = pool[rng_() % pool.size()];
    const AtomicRule& r = n_.base.rules()[pick];
    const bool elim = !is_intro(n_.tags[pick].schema);
    std::vector<Derivation> kids;
    std::vector<int> labels;
    for (std::size_t i = 0; i < r.premises.size(); ++i) {
      const Premise& p = r.premises[i];
      int label = 0;
      std::map<Basic, int> saved;
      if (!p.discharge.empty()) {
        label = ++next_;
        for (const auto& b : p.discharge) {
          if (env_.count(b)) saved[b] = env_[b];
          env_[b] = label;
        }
      }
      kids.push_back(gen(p.conclusion, depth - 1, elim && i == 0));
      for (const auto& b : p.discharge) {
        if (saved.count(b)) env_[b] = saved[b];
        else env_.erase(b);
      }
      labels.push_back(label);
    }
    return Derivation::apply(r, std::move(kids), std::move(labels));
  }

 private:
  const NBase& n_;
  std::mt19937& rng_;
  std::map<Basic, int> env_;
  int next_ = 0;

  Derivation leaf(const Basic& goal) {
    auto it = env_.find(goal);
    if (it != env_.end() && rng_() % 4 != 0) return Derivation::assume(goal, it->second);
    return Derivation::assume(goal);
  }
};

}  // namespace

Derivation random_n_derivation(const NBase& n, const Basic& goal, int depth, std::mt19937& rng) {
  NGen g(n, rng);
  return relabel(g.gen(goal, depth, false));
}

}  // namespace ecumen
