// Root-first search in Dyckhoff's contraction-free calculus. Invertible
// rules are applied eagerly; the only choice points are disjunction on the
// right and the implication-with-implication-antecedent rule on the left.
#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ecumen/prover.hpp"

namespace ecumen {

namespace {

using Ctx = std::vector<Formula>;

class G4 {
 public:
  bool prove(Ctx ctx, Formula goal) {
    std::sort(ctx.begin(), ctx.end(), [](const Formula& a, const Formula& b) { return a.id() < b.id(); });
    ctx.erase(std::unique(ctx.begin(), ctx.end()), ctx.end());
    std::string key = std::to_string(goal.id());
    for (const auto& f : ctx) key += "," + std::to_string(f.id());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool r = search(ctx, goal);
    memo_.emplace(std::move(key), r);
    return r;
  }

 private:
  std::unordered_map<std::string, bool> memo_;

  static bool has(const Ctx& c, const Formula& f) { return std::find(c.begin(), c.end(), f) != c.end(); }

  static Ctx without(const Ctx& c, std::size_t i, std::initializer_list<Formula> add = {}) {
    Ctx out;
    out.reserve(c.size() + add.size());
    for (std::size_t j = 0; j < c.size(); ++j)
      if (j != i) out.push_back(c[j]);
    out.insert(out.end(), add.begin(), add.end());
    return out;
  }

  bool search(const Ctx& ctx, const Formula& goal) {
    if (has(ctx, Formula::bot()) || has(ctx, goal)) return true;

    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula f = ctx[i];
      switch (f.kind()) {
        case Kind::And:
          return prove(without(ctx, i, {f.left(), f.right()}), goal);
        case Kind::Or:
          return prove(without(ctx, i, {f.left()}), goal) && prove(without(ctx, i, {f.right()}), goal);
        case Kind::Imp: {
          const Formula a = f.left(), b = f.right();
          if (a.is_bot()) return prove(without(ctx, i), goal);
          if (a.kind() == Kind::BasicI && has(ctx, a)) return prove(without(ctx, i, {b}), goal);
          if (a.kind() == Kind::And)
            return prove(without(ctx, i, {Formula::imp(a.left(), Formula::imp(a.right(), b))}), goal);
          if (a.kind() == Kind::Or)
            return prove(without(ctx, i, {Formula::imp(a.left(), b), Formula::imp(a.right(), b)}), goal);
          break;
        }
        default:
          break;
      }
    }

    if (goal.kind() == Kind::And) return prove(ctx, goal.left()) && prove(ctx, goal.right());
    if (goal.kind() == Kind::Imp) {
      Ctx c = ctx;
      c.push_back(goal.left());
      return prove(c, goal.right());
    }

    if (goal.kind() == Kind::Or && (prove(ctx, goal.left()) || prove(ctx, goal.right()))) return true;
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula f = ctx[i];
      if (f.kind() != Kind::Imp || f.left().kind() != Kind::Imp) continue;
      const Formula c = f.left().left(), d = f.left().right(), b = f.right();
      if (prove(without(ctx, i, {Formula::imp(d, b)}), Formula::imp(c, d)) && prove(without(ctx, i, {b}), goal))
        return true;
    }
    return false;
  }
};

}  // namespace

bool decide_ipc(const SequentGoal& g) {
  for (const auto& f : g.context)
    if (!is_intuitionistic(f)) throw std::invalid_argument("decide_ipc: non-intuitionistic input " + render(f));
  if (!is_intuitionistic(g.goal)) throw std::invalid_argument("decide_ipc: non-intuitionistic input " + render(g.goal));
  G4 prover;
  return prover.prove(g.context, g.goal);
}

}  // namespace ecumen
