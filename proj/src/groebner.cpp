#include "linkinv/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <tuple>
#include <utility>

namespace linkinv {

Poly normal_form(const Poly& f, const std::vector<Poly>& G) {
  Poly p = f;
  Poly r;
  while (!p.is_zero()) {
    bool divided = false;
    for (const Poly& g : G) {
      if (g.is_zero()) continue;
      if (mono_divides(g.lt().m, p.lt().m)) {
        Monomial q = mono_div(p.lt().m, g.lt().m);
        Rational c = p.lt().c / g.lt().c;
        p = poly_sub(p, poly_mul_term(g, q, c));
        divided = true;
        break;
      }
    }
    if (!divided) {
      // Move the leading term to the remainder.
      r.t.push_back(p.lt());
      p.t.erase(p.t.begin());
    }
  }
  return r;
}

namespace {

Poly make_monic(Poly p) {
  if (!p.is_zero() && p.lt().c != 1) p = poly_scale(p, 1 / p.lt().c);
  return p;
}

Poly s_poly(const Poly& f, const Poly& g) {
  Monomial l = mono_lcm(f.lt().m, g.lt().m);
  Poly a = poly_mul_term(f, mono_div(l, f.lt().m), 1 / f.lt().c);
  Poly b = poly_mul_term(g, mono_div(l, g.lt().m), 1 / g.lt().c);
  return poly_sub(a, b);
}

using Pair = std::pair<int, int>;

Pair ordered(int i, int j) { return i < j ? Pair{i, j} : Pair{j, i}; }

} // namespace

std::vector<Poly> groebner_basis(std::vector<Poly> gens) {
  std::vector<Poly> G;
  for (Poly& g : gens)
    if (!g.is_zero()) G.push_back(make_monic(std::move(g)));
  if (G.empty()) return G;

  // Pending S-pairs, kept both sorted by lcm (normal selection strategy
  // pops the smallest without scanning) and as a membership set for the
  // chain criterion.
  std::set<std::tuple<Monomial, int, int>> by_lcm;
  std::set<Pair> pending;
  auto add_pair = [&](int a, int b) {
    auto [i, j] = ordered(a, b);
    by_lcm.insert({mono_lcm(G[i].lt().m, G[j].lt().m), i, j});
    pending.insert({i, j});
  };
  for (int i = 0; i < (int)G.size(); ++i)
    for (int j = i + 1; j < (int)G.size(); ++j) add_pair(i, j);

  while (!by_lcm.empty()) {
    auto [best_lcm, i, j] = *by_lcm.begin();
    by_lcm.erase(by_lcm.begin());
    pending.erase({i, j});

    const Monomial& li = G[i].lt().m;
    const Monomial& lj = G[j].lt().m;
    // Product criterion: coprime leading monomials.
    if (mono_mul(li, lj) == best_lcm) continue;
    // Two single-term generators: their S-polynomial cancels identically.
    if (G[i].t.size() == 1 && G[j].t.size() == 1) continue;
    // Chain criterion: some k divides the lcm and both side pairs are done.
    bool skip = false;
    for (int k = 0; k < (int)G.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (mono_divides(G[k].lt().m, best_lcm) &&
          !pending.count(ordered(i, k)) && !pending.count(ordered(j, k)))
        skip = true;
    }
    if (skip) continue;

    Poly r = normal_form(s_poly(G[i], G[j]), G);
    if (r.is_zero()) continue;
    G.push_back(make_monic(std::move(r)));
    int n = (int)G.size() - 1;
    for (int k = 0; k < n; ++k) add_pair(k, n);
  }

  return reduce_basis(std::move(G));
}

std::vector<Poly> reduce_basis(std::vector<Poly> G) {
  G.erase(std::remove_if(G.begin(), G.end(),
                         [](const Poly& p) { return p.is_zero(); }),
          G.end());
  // Drop elements whose leading term another element's leading term divides.
  std::vector<Poly> minimal;
  for (int i = 0; i < (int)G.size(); ++i) {
    bool redundant = false;
    for (int j = 0; j < (int)G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(G[j].lt().m, G[i].lt().m)) {
        // Break ties (equal leading monomials) by keeping the earlier one.
        if (G[j].lt().m == G[i].lt().m)
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Reduce each element's tail against all the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < (int)minimal.size(); ++i) {
      std::vector<Poly> others;
      for (int j = 0; j < (int)minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Poly r = make_monic(normal_form(minimal[i], others));
      if (!poly_eq(r, minimal[i])) {
        assert(!r.is_zero());
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }
  for (Poly& p : minimal) p = make_monic(std::move(p));
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return mono_less(a.lt().m, b.lt().m); });
  return minimal;
}

bool is_groebner_basis(const std::vector<Poly>& G) {
  for (int i = 0; i < (int)G.size(); ++i)
    for (int j = i + 1; j < (int)G.size(); ++j)
      if (!normal_form(s_poly(G[i], G[j]), G).is_zero()) return false;
  return true;
}

bool in_ideal(const Poly& f, const std::vector<Poly>& gb) {
  return normal_form(f, gb).is_zero();
}

} // namespace linkinv
