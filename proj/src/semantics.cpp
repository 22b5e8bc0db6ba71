#include "ecumen/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecumen {

std::string to_string(JudgementKind k) {
  switch (k) {
    case JudgementKind::WeakLocal:
      return "local";
    case JudgementKind::WeakGlobal:
      return "global";
    case JudgementKind::Strong:
      return "strong";
  }
  return "?";
}

JudgementKind parse_kind(std::string_view s) {
  if (s == "local") return JudgementKind::WeakLocal;
  if (s == "global") return JudgementKind::WeakGlobal;
  if (s == "strong") return JudgementKind::Strong;
  throw std::invalid_argument("unknown judgement kind: " + std::string(s));
}

void require_vocab(const Universe& u, const std::vector<Formula>& fs) {
  for (const auto& f : fs)
    for (const auto& a : atoms(f))
      if (!u.basic_index(a)) throw std::invalid_argument("atom-outside-vocab: " + a);
}

namespace {

using Vec = Universe::Vec;

class Eval {
 public:
  Eval(const Universe& u, EvalOptions opt) : u_(u), opt_(opt), n_(u.size()) {}

  Vec box(const Vec& v) const {
    Vec out(n_, 0);
    for (std::size_t k = n_; k-- > 0;) {
      bool ok = v[k] != 0;
      for (BaseId c : u_.covers(static_cast<BaseId>(k))) {
        if (!ok) break;
        ok = out[static_cast<std::size_t>(c)] != 0;
      }
      out[k] = ok;
    }
    return out;
  }

  // ⊩^L_S a
  Vec weak(const Formula& a) {
    return cached("W", {}, a, [&] {
      Vec v(n_, 0);
      switch (a.kind()) {
        case Kind::BasicI: {
          std::size_t b = index(a.name());
          for (std::size_t i = 0; i < n_; ++i) v[i] = u_.proves(static_cast<BaseId>(i), b);
          return v;
        }
        case Kind::BasicC: {
          std::size_t b = index(a.name());
          for (std::size_t i = 0; i < n_; ++i) v[i] = !u_.refutes(static_cast<BaseId>(i), b);
          return v;
        }
        case Kind::Classical: {
          Vec r = weak_lcons({a.inner()}, Formula::bot());
          for (std::size_t i = 0; i < n_; ++i) v[i] = !r[i];
          return v;
        }
        case Kind::And: {
          Vec l = weak(a.left()), r = weak(a.right());
          for (std::size_t i = 0; i < n_; ++i) v[i] = l[i] && r[i];
          return v;
        }
        case Kind::Imp:
          return weak_gcons({a.left()}, a.right());
        case Kind::Or: {
          Vec inner(n_, 1);
          for (std::size_t b = 0; b < u_.basics().size(); ++b) {
            Formula pb = Formula::basic_i(u_.basics()[b]);
            Vec l = opt_.global_disjunction ? weak_gcons({a.left()}, pb) : weak_lcons({a.left()}, pb);
            Vec r = opt_.global_disjunction ? weak_gcons({a.right()}, pb) : weak_lcons({a.right()}, pb);
            for (std::size_t i = 0; i < n_; ++i)
              if (l[i] && r[i] && !u_.proves(static_cast<BaseId>(i), b)) inner[i] = 0;
          }
          return box(inner);
        }
      }
      return v;
    });
  }

  Vec weak_all(const std::vector<Formula>& ctx) {
    Vec v(n_, 1);
    for (const auto& g : ctx) {
      Vec x = weak(g);
      for (std::size_t i = 0; i < n_; ++i) v[i] = v[i] && x[i];
    }
    return v;
  }

  // Γ ⊩^L_S a for nonempty Γ.
  Vec weak_lcons(const std::vector<Formula>& ctx, const Formula& a) {
    return cached("WL", ctx, a, [&] {
      Vec g = weak_all(ctx), x = weak(a);
      for (std::size_t i = 0; i < n_; ++i) g[i] = !g[i] || x[i];
      return box(g);
    });
  }

  Vec weak_gcons(const std::vector<Formula>& ctx, const Formula& a) {
    return cached("WG", ctx, a, [&] {
      Vec g = box(weak_all(ctx)), x = box(weak(a));
      for (std::size_t i = 0; i < n_; ++i) g[i] = !g[i] || x[i];
      return box(g);
    });
  }

  Vec strong(const Formula& a) {
    return cached("S", {}, a, [&] {
      Vec v(n_, 0);
      switch (a.kind()) {
        case Kind::BasicI: {
          std::size_t b = index(a.name());
          for (std::size_t i = 0; i < n_; ++i) v[i] = u_.proves(static_cast<BaseId>(i), b);
          return v;
        }
        case Kind::BasicC: {
          std::size_t b = index(a.name());
          for (std::size_t i = 0; i < n_; ++i) v[i] = !u_.refutes(static_cast<BaseId>(i), b);
          return box(v);
        }
        case Kind::Classical: {
          Vec r = strong_cons({a.inner()}, Formula::bot());
          for (std::size_t i = 0; i < n_; ++i) v[i] = !r[i];
          return box(v);
        }
        case Kind::And: {
          Vec l = strong(a.left()), r = strong(a.right());
          for (std::size_t i = 0; i < n_; ++i) v[i] = l[i] && r[i];
          return v;
        }
        case Kind::Imp:
          return strong_cons({a.left()}, a.right());
        case Kind::Or: {
          Vec inner(n_, 1);
          for (std::size_t b = 0; b < u_.basics().size(); ++b) {
            Formula pb = Formula::basic_i(u_.basics()[b]);
            Vec l = strong_cons({a.left()}, pb), r = strong_cons({a.right()}, pb);
            for (std::size_t i = 0; i < n_; ++i)
              if (l[i] && r[i] && !u_.proves(static_cast<BaseId>(i), b)) inner[i] = 0;
          }
          return box(inner);
        }
      }
      return v;
    });
  }

  Vec strong_all(const std::vector<Formula>& ctx) {
    Vec v(n_, 1);
    for (const auto& g : ctx) {
      Vec x = strong(g);
      for (std::size_t i = 0; i < n_; ++i) v[i] = v[i] && x[i];
    }
    return v;
  }

  Vec strong_cons(const std::vector<Formula>& ctx, const Formula& a) {
    if (ctx.empty()) return strong(a);
    return cached("SC", ctx, a, [&] {
      Vec g = strong_all(ctx), x = strong(a);
      for (std::size_t i = 0; i < n_; ++i) g[i] = !g[i] || x[i];
      return box(g);
    });
  }

  Vec node(TraceKind k, const std::vector<Formula>& ctx, const Formula& a) {
    switch (k) {
      case TraceKind::WeakAt:
        return weak(a);
      case TraceKind::WeakLocalCons:
        return ctx.empty() ? weak(a) : weak_lcons(ctx, a);
      case TraceKind::WeakGlobalCons:
        return weak_gcons(ctx, a);
      case TraceKind::StrongAt:
        return strong(a);
      case TraceKind::StrongCons:
        return strong_cons(ctx, a);
    }
    return {};
  }

  // First extension of s (in universe order) where v fails.
  std::optional<BaseId> failing_extension(BaseId s, const Vec& v) const {
    for (std::size_t i = static_cast<std::size_t>(s); i < n_; ++i)
      if (u_.is_extension(s, static_cast<BaseId>(i)) && !v[i]) return static_cast<BaseId>(i);
    return std::nullopt;
  }

  EvalTrace explain(TraceKind k, BaseId s, const std::vector<Formula>& ctx, const Formula& a, int depth) {
    EvalTrace t{k, s, ctx, a, "", false, std::nullopt, {}};
    t.result = node(k, ctx, a)[static_cast<std::size_t>(s)] != 0;
    bool weak_side = k == TraceKind::WeakAt || k == TraceKind::WeakLocalCons || k == TraceKind::WeakGlobalCons;
    TraceKind at = weak_side ? TraceKind::WeakAt : TraceKind::StrongAt;
    if (k == TraceKind::WeakLocalCons && ctx.empty()) k = TraceKind::WeakAt;
    if (k == TraceKind::StrongCons && ctx.empty()) k = TraceKind::StrongAt;
    bool more = depth > 0;

    if (k == TraceKind::WeakLocalCons || k == TraceKind::StrongCons) {
      t.clause = "consequence";
      if (!t.result) {
        Vec g = weak_side ? weak_all(ctx) : strong_all(ctx);
        Vec x = weak_side ? weak(a) : strong(a);
        for (std::size_t i = 0; i < n_; ++i) g[i] = !g[i] || x[i];
        t.witness = failing_extension(s, g);
        if (more && t.witness) {
          for (const auto& c : ctx) t.children.push_back(explain(at, *t.witness, {}, c, depth - 1));
          t.children.push_back(explain(at, *t.witness, {}, a, depth - 1));
        }
      }
      return t;
    }
    if (k == TraceKind::WeakGlobalCons) {
      t.clause = "global consequence";
      if (!t.result) {
        Vec g = box(weak_all(ctx)), x = box(weak(a));
        for (std::size_t i = 0; i < n_; ++i) g[i] = !g[i] || x[i];
        t.witness = failing_extension(s, g);
        if (more && t.witness) {
          auto deeper = failing_extension(*t.witness, weak(a));
          if (deeper) t.children.push_back(explain(TraceKind::WeakAt, *deeper, {}, a, depth - 1));
        }
      }
      return t;
    }

    switch (a.kind()) {
      case Kind::BasicI:
        t.clause = "atomic derivability";
        return t;
      case Kind::BasicC:
        t.clause = weak_side ? "classical atom: no refutation" : "classical atom: no refutation in extensions";
        if (!weak_side && !t.result) {
          Vec v(n_, 0);
          std::size_t b = index(a.name());
          for (std::size_t i = 0; i < n_; ++i) v[i] = !u_.refutes(static_cast<BaseId>(i), b);
          t.witness = failing_extension(s, v);
        }
        return t;
      case Kind::Classical:
        t.clause = weak_side ? "classical: inner does not entail bot" : "classical: inner never entails bot";
        if (more) {
          BaseId where = s;
          if (!weak_side && !t.result) {
            Vec r = strong_cons({a.inner()}, Formula::bot());
            for (std::size_t i = 0; i < n_; ++i) r[i] = !r[i];
            auto w = failing_extension(s, r);
            if (w) where = *w;
            t.witness = w;
          }
          t.children.push_back(explain(weak_side ? TraceKind::WeakLocalCons : TraceKind::StrongCons, where,
                                       {a.inner()}, Formula::bot(), depth - 1));
        }
        return t;
      case Kind::And:
        t.clause = "conjunction";
        if (more) {
          t.children.push_back(explain(at, s, {}, a.left(), depth - 1));
          t.children.push_back(explain(at, s, {}, a.right(), depth - 1));
        }
        return t;
      case Kind::Imp:
        t.clause = "implication";
        if (more)
          t.children.push_back(explain(weak_side ? TraceKind::WeakGlobalCons : TraceKind::StrongCons, s,
                                       {a.left()}, a.right(), depth - 1));
        return t;
      case Kind::Or: {
        t.clause = "disjunction";
        if (t.result || !more) return t;
        TraceKind cons = weak_side ? (opt_.global_disjunction ? TraceKind::WeakGlobalCons : TraceKind::WeakLocalCons)
                                   : TraceKind::StrongCons;
        for (std::size_t i = static_cast<std::size_t>(s); i < n_; ++i) {
          if (!u_.is_extension(s, static_cast<BaseId>(i))) continue;
          for (std::size_t b = 0; b < u_.basics().size(); ++b) {
            Formula pb = Formula::basic_i(u_.basics()[b]);
            if (node(cons, {a.left()}, pb)[i] && node(cons, {a.right()}, pb)[i] &&
                !u_.proves(static_cast<BaseId>(i), b)) {
              t.witness = static_cast<BaseId>(i);
              t.children.push_back(explain(cons, static_cast<BaseId>(i), {a.left()}, pb, depth - 1));
              t.children.push_back(explain(cons, static_cast<BaseId>(i), {a.right()}, pb, depth - 1));
              t.children.push_back(explain(at, static_cast<BaseId>(i), {}, pb, depth - 1));
              return t;
            }
          }
        }
        return t;
      }
    }
    return t;
  }

 private:
  const Universe& u_;
  EvalOptions opt_;
  std::size_t n_;

  std::size_t index(const std::string& b) const {
    auto i = u_.basic_index(b);
    if (!i) throw std::invalid_argument("atom-outside-vocab: " + b);
    return *i;
  }

  template <class F>
  Vec cached(const char* tag, const std::vector<Formula>& ctx, const Formula& a, F compute) {
    std::string key = tag;
    if (opt_.global_disjunction) key += "*";
    for (const auto& g : ctx) key += ":" + std::to_string(g.id());
    key += "|" + std::to_string(a.id());
    if (auto hit = u_.memo_get(key)) return *hit;
    Vec v = compute();
    u_.memo_put(key, v);
    return v;
  }
};

void check_base(const Universe& u, BaseId s) {
  if (s < 0 || static_cast<std::size_t>(s) >= u.size()) throw std::out_of_range("unknown base id");
}

std::vector<Formula> with(const std::vector<Formula>& ctx, const Formula& a) {
  std::vector<Formula> all = ctx;
  all.push_back(a);
  return all;
}

constexpr int kTraceDepth = 6;

}  // namespace

std::size_t EvalTrace::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth());
  return d + 1;
}

std::string render_trace(const Universe& u, const EvalTrace& t, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string rel;
  switch (t.kind) {
    case TraceKind::WeakAt:
    case TraceKind::WeakLocalCons:
      rel = "||-L";
      break;
    case TraceKind::WeakGlobalCons:
      rel = "||-G";
      break;
    case TraceKind::StrongAt:
    case TraceKind::StrongCons:
      rel = "|=";
      break;
  }
  std::string out = pad + (t.context.empty() ? "" : render_list(t.context) + " ") + rel + "_S" +
                    std::to_string(t.base) + " " + render(t.conclusion) + "  [" + t.clause + "] " +
                    (t.result ? "true" : "false");
  if (t.witness) out += "  witness S" + std::to_string(*t.witness) + " = " + u.describe(*t.witness);
  out += "\n";
  for (const auto& c : t.children) out += render_trace(u, c, indent + 1);
  return out;
}

bool weak_local(const Universe& u, BaseId s, const std::vector<Formula>& ctx, const Formula& a, EvalTrace* trace,
                const EvalOptions& opt) {
  check_base(u, s);
  require_vocab(u, with(ctx, a));
  Eval e(u, opt);
  TraceKind k = ctx.empty() ? TraceKind::WeakAt : TraceKind::WeakLocalCons;
  bool r = e.node(k, ctx, a)[static_cast<std::size_t>(s)] != 0;
  if (trace) *trace = e.explain(k, s, ctx, a, kTraceDepth);
  return r;
}

bool weak_global(const Universe& u, BaseId s, const std::vector<Formula>& ctx, const Formula& a, EvalTrace* trace,
                 const EvalOptions& opt) {
  check_base(u, s);
  require_vocab(u, with(ctx, a));
  Eval e(u, opt);
  bool r = e.weak_gcons(ctx, a)[static_cast<std::size_t>(s)] != 0;
  if (trace) *trace = e.explain(TraceKind::WeakGlobalCons, s, ctx, a, kTraceDepth);
  return r;
}

bool weak_valid(const Universe& u, const std::vector<Formula>& ctx, const Formula& a, const EvalOptions& opt) {
  require_vocab(u, with(ctx, a));
  Eval e(u, opt);
  Vec v = e.weak_gcons(ctx, a);
  return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
}

bool strong_sat(const Universe& u, BaseId s, const std::vector<Formula>& ctx, const Formula& a, EvalTrace* trace) {
  check_base(u, s);
  require_vocab(u, with(ctx, a));
  Eval e(u, {});
  TraceKind k = ctx.empty() ? TraceKind::StrongAt : TraceKind::StrongCons;
  bool r = e.node(k, ctx, a)[static_cast<std::size_t>(s)] != 0;
  if (trace) *trace = e.explain(k, s, ctx, a, kTraceDepth);
  return r;
}

bool strong_valid_in_universe(const Universe& u, const std::vector<Formula>& ctx, const Formula& a) {
  require_vocab(u, with(ctx, a));
  Eval e(u, {});
  Vec v = e.strong_cons(ctx, a);
  return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; });
}

std::vector<char> weak_local_all(const Universe& u, const std::vector<Formula>& ctx, const Formula& a,
                                 const EvalOptions& opt) {
  require_vocab(u, with(ctx, a));
  Eval e(u, opt);
  return e.node(ctx.empty() ? TraceKind::WeakAt : TraceKind::WeakLocalCons, ctx, a);
}

std::vector<char> weak_global_all(const Universe& u, const std::vector<Formula>& ctx, const Formula& a,
                                  const EvalOptions& opt) {
  require_vocab(u, with(ctx, a));
  Eval e(u, opt);
  return e.weak_gcons(ctx, a);
}

std::vector<char> strong_sat_all(const Universe& u, const std::vector<Formula>& ctx, const Formula& a) {
  require_vocab(u, with(ctx, a));
  Eval e(u, {});
  return e.node(ctx.empty() ? TraceKind::StrongAt : TraceKind::StrongCons, ctx, a);
}

bool evaluate_trace_node(const Universe& u, const EvalTrace& t, const EvalOptions& opt) {
  Eval e(u, opt);
  return e.node(t.kind, t.context, t.conclusion)[static_cast<std::size_t>(t.base)] != 0;
}

std::optional<std::pair<BaseId, BaseId>> check_monotonic(const Universe& u, const Formula& a, const EvalOptions& opt) {
  require_vocab(u, {a});
  Eval e(u, opt);
  Vec v = e.weak(a);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!v[j] && u.is_extension(static_cast<BaseId>(i), static_cast<BaseId>(j)))
        return std::make_pair(static_cast<BaseId>(i), static_cast<BaseId>(j));
  }
  return std::nullopt;
}

std::optional<Counterexample> find_weak_counterexample(const Universe& u, const std::vector<Formula>& ctx,
                                                       const Formula& a, JudgementKind kind, const EvalOptions& opt) {
  require_vocab(u, with(ctx, a));
  Eval e(u, opt);
  TraceKind k;
  switch (kind) {
    case JudgementKind::WeakLocal:
      k = ctx.empty() ? TraceKind::WeakAt : TraceKind::WeakLocalCons;
      break;
    case JudgementKind::WeakGlobal:
      k = TraceKind::WeakGlobalCons;
      break;
    default:
      k = ctx.empty() ? TraceKind::StrongAt : TraceKind::StrongCons;
      break;
  }
  Vec v = e.node(k, ctx, a);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!v[i]) return Counterexample{static_cast<BaseId>(i), e.explain(k, static_cast<BaseId>(i), ctx, a, kTraceDepth)};
  }
  return std::nullopt;
}

}  // namespace ecumen
