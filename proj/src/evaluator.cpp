#include "linkinv/evaluator.hpp"

#include <cassert>
#include <climits>
#include <functional>
#include <stdexcept>

#include "linkinv/smoothing.hpp"
#include "linkinv/symbols.hpp"

namespace linkinv {

namespace {

int total_components(const Diagram& d) {
  return static_cast<int>(components(d).size()) + d.circles;
}

// The plain (h-free) polynomial of an element; coefficients and
// second-family values never carry h-powers.
Poly plain_poly(const RingElem& e) {
  Poly out = poly_zero();
  for (const auto& [idx, p] : e.parts) {
    if (idx.has_value())
      throw std::invalid_argument("expected an h-free ring element");
    out = poly_add(out, p);
  }
  return out;
}

Diagram smooth_child(const Diagram& d, int x, Sm sm) {
  auto res = apply_smoothing(d, x, sm);
  if (!res)
    throw std::logic_error("admissible smoothing failed to reorient");
  return std::move(res->diagram);
}

// Default crossing budget: profiles keeping every weight of their family
// alive blow up past 7 crossings; zeroed profiles prune enough to go on.
int crossing_budget(const RingProfile& P, const EvalOptions& opt) {
  if (opt.max_crossings >= 0) return opt.max_crossings;
  std::vector<Sym> weights;
  if (P.family == Family::TypeOne) {
    weights = {Sym::b,   Sym::c1,  Sym::c2,  Sym::c3,  Sym::c4,  Sym::d1,
               Sym::d2,  Sym::bp,  Sym::c1p, Sym::c2p, Sym::d1p, Sym::d2p};
  } else {
    for (int i = 0; i < kSymCount; ++i) {
      Sym s = static_cast<Sym>(i);
      if (s != Sym::b && s != Sym::bp && s != Sym::b_bar && s != Sym::bp_bar)
        weights.push_back(s);
    }
  }
  for (Sym s : weights)
    if (P.image(s).is_zero()) return INT_MAX;
  return 7;
}

void check_budget(const Diagram& d, const RingProfile& P,
                  const EvalOptions& opt) {
  if (static_cast<int>(d.cr.size()) > crossing_budget(P, opt))
    throw std::invalid_argument(
        "crossing budget exceeded; raise EvalOptions::max_crossings");
}

// Shared first-family recursion; the base callback prices a monotone leaf.
struct FirstFamilyRec {
  const RingProfile& P;
  std::function<RingElem(const Diagram&)> base;
  std::map<std::string, RingElem>* memo = nullptr;

  RingElem run(const Diagram& d, const Marking& m) {
    if (is_monotone(d, m)) return base(d);
    std::string key;
    if (memo) {
      key = canonical_code(d);
      if (auto it = memo->find(key); it != memo->end()) return it->second;
    }
    int x = first_bad(d, m);
#ifndef NDEBUG
    std::size_t bad_before = bad_crossings(d, m).size();
#endif
    RingElem acc = elem_zero();
    for (const SkeinChild& t : skein_terms(d, m, x, P)) {
      Poly w = plain_poly(t.coeff);
      if (w.is_zero()) continue;
      // Every recursion edge strictly drops (crossings, bad crossings).
      assert(t.is_change
                 ? bad_crossings(t.child, t.marking).size() + 1 == bad_before
                 : t.child.cr.size() + 1 == d.cr.size());
      acc = elem_add(acc, elem_scale(run(t.child, t.marking), w));
    }
    acc = elem_nf(P, acc);
    if (memo) memo->emplace(std::move(key), acc);
    return acc;
  }
};

std::map<std::string, RingElem>* pick_memo(const EvalOptions& opt,
                                           std::map<std::string, RingElem>& local) {
  if (opt.cache) return &opt.cache->vals;
  return opt.memo ? &local : nullptr;
}

} // namespace

std::vector<SkeinChild> skein_terms(const Diagram& d, const Marking& m, int x,
                                    const RingProfile& P) {
  if (P.family != Family::TypeOne)
    throw std::invalid_argument("skein_terms needs a first-family profile");
  if (x < 0 || x >= static_cast<int>(d.cr.size()))
    throw std::invalid_argument("no such crossing");
  bool positive = crossing_sign(d.cr[x]) > 0;
  bool self = is_self_crossing(d, x);
  std::vector<SkeinChild> out;
  for (const SkeinTerm& t :
       skein_expansion(Family::TypeOne, positive, self)) {
    SkeinChild ch;
    ch.coeff = elem_poly(poly_scale(P.image(t.sym), Rational(t.sign)));
    ch.is_change = t.is_change;
    if (t.is_change) {
      ch.child = with_crossing_changed(d, x);
      ch.marking = m;
    } else {
      ch.child = smooth_child(d, x, t.sm);
      ch.marking = canonical_marking(ch.child);
    }
    out.push_back(std::move(ch));
  }
  return out;
}

RingElem eval_type1(const Diagram& d, const RingProfile& P,
                    const EvalOptions& opt) {
  return eval_type1(d, canonical_marking(d), P, opt);
}

RingElem eval_type1(const Diagram& d, const Marking& m, const RingProfile& P,
                    const EvalOptions& opt) {
  if (P.family != Family::TypeOne || !P.relations_checked)
    throw std::invalid_argument(
        "eval_type1 needs a verified first-family profile");
  check_marking(d, m);
  check_budget(d, P, opt);
  std::map<std::string, RingElem> local;
  FirstFamilyRec rec{P,
                     [&P](const Diagram& leaf) {
                       return elem_poly(poly_var(
                           P.nvars(), P.v_var(total_components(leaf))));
                     },
                     pick_memo(opt, local)};
  return rec.run(d, m);
}

ModifiedValue eval_type1_modified(const Diagram& d, const RingProfile& P,
                                  const EvalOptions& opt) {
  if (P.family != Family::TypeOne || !P.relations_checked)
    throw std::invalid_argument(
        "eval_type1_modified needs a verified first-family profile");
  if (P.h_rule == HRule::None)
    throw std::invalid_argument("profile carries no writhe-weight rule");
  check_budget(d, P, opt);
  std::map<std::string, RingElem> local;
  FirstFamilyRec rec{P,
                     [&P](const Diagram& leaf) {
                       return elem_h(writhe(leaf),
                                     poly_var(P.nvars(),
                                              P.v_var(total_components(leaf))));
                     },
                     pick_memo(opt, local)};
  ModifiedValue mv;
  mv.f = rec.run(d, canonical_marking(d));
  mv.F = elem_nf(P, elem_shift(mv.f, -writhe(d)));
  return mv;
}

RingElem eval_type2(const Diagram& d, const RingProfile& P,
                    const EvalOptions& opt) {
  if (P.family != Family::TypeTwo)
    throw std::invalid_argument(
        "eval_type2 needs a second-family profile");
  check_budget(d, P, opt);
  std::map<std::string, RingElem> local;
  auto* memo = P.relations_checked ? pick_memo(opt, local) : nullptr;
  std::function<RingElem(const Diagram&)> rec = [&](const Diagram& cur) {
    if (cur.cr.empty())
      return elem_poly(
          poly_var(P.nvars(), P.v_var(total_components(cur))));
    std::string key;
    if (memo) {
      key = canonical_code(cur);
      if (auto it = memo->find(key); it != memo->end()) return it->second;
    }
    bool positive = crossing_sign(cur.cr[0]) > 0;
    bool self = is_self_crossing(cur, 0);
    RingElem acc = elem_zero();
    for (const SkeinTerm& t :
         skein_expansion(Family::TypeTwo, positive, self)) {
      assert(!t.is_change);
      Poly w = poly_scale(P.image(t.sym), Rational(t.sign));
      if (w.is_zero()) continue;
      acc = elem_add(acc, elem_scale(rec(smooth_child(cur, 0, t.sm)), w));
    }
    acc = elem_nf(P, acc);
    if (memo) memo->emplace(std::move(key), acc);
    return acc;
  };
  return rec(d);
}

RingElem eval_type2_modified(const Diagram& d, const RingProfile& P,
                             const GWeight& g, const EvalOptions& opt) {
  if (P.family != Family::TypeTwo)
    throw std::invalid_argument(
        "eval_type2_modified needs a second-family profile");
  auto rep = check_g_window(P, g, static_cast<int>(d.cr.size()) + 2,
                            total_components(d) + 1);
  if (!rep.ok())
    throw std::invalid_argument("weight fails its window check: " +
                                rep.failures.front());
  Poly f = plain_poly(eval_type2(d, P, opt));
  RingElem gv = g(writhe(d), static_cast<int>(d.cr.size()),
                  total_components(d));
  return elem_nf(P, elem_scale(gv, f));
}

Laurent2 l2_term(int lpow, int mpow, const Rational& v) {
  Laurent2 out;
  if (v != 0) out.c.emplace(std::make_pair(lpow, mpow), v);
  return out;
}

Laurent2 l2_add(const Laurent2& a, const Laurent2& b) {
  Laurent2 out = a;
  for (const auto& [k, v] : b.c) {
    auto [it, fresh] = out.c.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) out.c.erase(it);
    }
  }
  return out;
}

Laurent2 l2_mul(const Laurent2& a, const Laurent2& b) {
  Laurent2 out;
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) {
      auto k = std::make_pair(ka.first + kb.first, ka.second + kb.second);
      auto [it, fresh] = out.c.emplace(k, va * vb);
      if (!fresh) it->second += va * vb;
    }
  for (auto it = out.c.begin(); it != out.c.end();)
    it = it->second == 0 ? out.c.erase(it) : std::next(it);
  return out;
}

std::string l2_to_string(const Laurent2& a) {
  if (a.c.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : a.c) {
    if (!out.empty()) out += " + ";
    out += v.str();
    if (k.first != 0) out += "*l^" + std::to_string(k.first);
    if (k.second != 0) out += "*m^" + std::to_string(k.second);
  }
  return out;
}

namespace {

Laurent2 l2_one() { return l2_term(0, 0, 1); }

Laurent2 delta_power(int k) {
  // delta = -(l + l^{-1})/m, the worth of each extra split component.
  Laurent2 delta = l2_add(l2_term(1, -1, -1), l2_term(-1, -1, -1));
  Laurent2 out = l2_one();
  for (int i = 0; i < k; ++i) out = l2_mul(out, delta);
  return out;
}

Laurent2 oracle_rec(const Diagram& d, const Marking& m,
                    std::map<std::string, Laurent2>& memo) {
  if (is_monotone(d, m)) return delta_power(total_components(d) - 1);
  std::string key = canonical_code(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int x = first_bad(d, m);
  Diagram flipped = with_crossing_changed(d, x);
  Diagram smoothed = smooth_child(d, x, Sm::E);
  Laurent2 pf = oracle_rec(flipped, m, memo);
  Laurent2 ps = oracle_rec(smoothed, canonical_marking(smoothed), memo);
  // Solve l*P(L+) + l^{-1}*P(L-) + m*P(L0) = 0 for the bad side.
  Laurent2 val =
      crossing_sign(d.cr[x]) > 0
          ? l2_add(l2_mul(l2_term(-2, 0, -1), pf),
                   l2_mul(l2_term(-1, 1, -1), ps))
          : l2_add(l2_mul(l2_term(2, 0, -1), pf),
                   l2_mul(l2_term(1, 1, -1), ps));
  memo.emplace(std::move(key), val);
  return val;
}

} // namespace

Laurent2 homflypt_oracle(const Diagram& d) {
  std::map<std::string, Laurent2> memo;
  return oracle_rec(d, canonical_marking(d), memo);
}

} // namespace linkinv
