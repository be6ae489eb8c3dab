#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "homfly_map.hpp"
#include "linkinv/evaluator.hpp"
#include "linkinv/moves.hpp"
#include "linkinv/ring.hpp"
#include "linkinv/symbols.hpp"

using namespace linkinv;

namespace {

const char* kKinkPos = "X[1,2,2,1]";
const char* kKinkNeg = "X[1,1,2,2]";
const char* kHopfPos = "X[2,3,1,4] X[4,1,3,2]";
const char* kHopfNeg = "X[2,4,1,3] X[4,2,3,1]";
const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

RingElem counter(const RingProfile& R, int n) {
  return elem_poly(poly_var(R.nvars(), R.v_var(n)));
}

Poly part_or_zero(const RingElem& e) {
  Poly out = poly_zero();
  for (const auto& [k, p] : e.parts) {
    REQUIRE(!k.has_value());
    out = poly_add(out, p);
  }
  return out;
}

// Every marking of a diagram: each component order, each start arc.
std::vector<Marking> all_markings(const Diagram& d) {
  auto comps = components(d);
  std::vector<int> order(comps.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Marking> out;
  do {
    std::function<void(std::size_t, Marking)> go = [&](std::size_t k,
                                                       Marking m) {
      if (k == order.size()) {
        out.push_back(std::move(m));
        return;
      }
      for (ArcId a : comps[order[k]]) {
        Marking next = m;
        next.base.push_back(a);
        go(k + 1, std::move(next));
      }
    };
    go(0, Marking{});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Resolve crossing p, then crossing q in every child, then finish each
// grandchild canonically; the sum must not depend on the (p, q) order.
RingElem two_step(const Diagram& d, int p, int q, const RingProfile& P) {
  Marking m = canonical_marking(d);
  RingElem acc = elem_zero();
  for (const SkeinChild& t : skein_terms(d, m, p, P)) {
    int q2 = t.is_change ? q : (q > p ? q - 1 : q);
    RingElem inner = elem_zero();
    for (const SkeinChild& u : skein_terms(t.child, t.marking, q2, P))
      inner = elem_add(inner, elem_scale(eval_type1(u.child, P),
                                         part_or_zero(u.coeff)));
    acc = elem_add(acc, elem_scale(inner, part_or_zero(t.coeff)));
  }
  return elem_nf(P, acc);
}

Laurent2 flip_l(const Laurent2& a) {
  Laurent2 out;
  for (const auto& [k, v] : a.c) out.c.emplace(std::make_pair(-k.first, k.second), v);
  return out;
}

} // namespace

TEST_CASE("first-family resolution lists every child with its weight") {
  const RingProfile& R = profile("b1");
  Diagram tre = parse_pd(kTrefoil);
  Marking m = canonical_marking(tre);

  auto self_pos = skein_terms(tre, m, 0, R);
  REQUIRE(self_pos.size() == 7);
  CHECK(self_pos[0].is_change);
  CHECK(elem_eq(R, self_pos[0].coeff,
                elem_poly(poly_neg(R.image(Sym::b)))));
  CHECK(self_pos[0].marking == m);
  CHECK(self_pos[0].child == with_crossing_changed(tre, 0));
  for (std::size_t i = 1; i < self_pos.size(); ++i) {
    CHECK(!self_pos[i].is_change);
    CHECK(self_pos[i].child.cr.size() == 2);
    CHECK(self_pos[i].marking == canonical_marking(self_pos[i].child));
  }

  Diagram hopf = parse_pd(kHopfPos);
  auto mixed = skein_terms(hopf, canonical_marking(hopf), 0, R);
  CHECK(mixed.size() == 5);
  CHECK(elem_eq(R, mixed[0].coeff, elem_poly(poly_neg(R.image(Sym::bp)))));

  Diagram mir = mirror(tre);
  auto self_neg = skein_terms(mir, canonical_marking(mir), 0, R);
  CHECK(self_neg.size() == 7);
  CHECK(elem_eq(R, self_neg[0].coeff,
                elem_poly(poly_neg(R.image(Sym::b_bar)))));

  CHECK_THROWS_AS(skein_terms(tre, m, 0, profile("type2-free")),
                  std::invalid_argument);
  CHECK_THROWS_AS(skein_terms(tre, m, 5, R), std::invalid_argument);
}

TEST_CASE("crossing-free and monotone diagrams are worth their counter") {
  const RingProfile& R = profile("homflypt");
  CHECK(elem_eq(R, eval_type1(parse_pd("O"), R), counter(R, 1)));
  CHECK(elem_eq(R, eval_type1(parse_pd("O O O"), R), counter(R, 3)));
  // A curl passed under first never blocks the descent.
  CHECK(elem_eq(R, eval_type1(parse_pd(kKinkPos), R), counter(R, 1)));
  Diagram two = disjoint_union(parse_pd(kKinkPos), parse_pd(kKinkPos));
  CHECK(elem_eq(R, eval_type1(two, R), counter(R, 2)));
}

TEST_CASE("crossing budget: dense profiles stop, overrides lift") {
  Diagram d = parse_pd(kKinkPos);
  ArcId arc = 1;
  for (int i = 0; i < 7; ++i) d = r1_add(d, arc, 1, true);
  REQUIRE(d.cr.size() == 8);
  const RingProfile& dense = profile("b1");
  CHECK_THROWS_AS(eval_type1(d, dense), std::invalid_argument);
  EvalOptions wide;
  wide.max_crossings = 99;
  CHECK(elem_eq(dense, eval_type1(d, dense, wide), counter(dense, 1)));
  // Zeroed profiles take the same diagram by default.
  CHECK(elem_eq(profile("homflypt"), eval_type1(d, profile("homflypt")),
                counter(profile("homflypt"), 1)));
}

TEST_CASE("evaluators reject unfit profiles") {
  Diagram d = parse_pd(kKinkPos);
  CHECK_THROWS_AS(eval_type1(d, profile("type2-free")), std::invalid_argument);
  RingProfile loose = profile("homflypt");
  loose.relations_checked = false;
  CHECK_THROWS_AS(eval_type1(d, loose), std::invalid_argument);
  // No writhe-weight rule, no weighted evaluation.
  CHECK_THROWS_AS(eval_type1_modified(d, profile("homflypt")),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_type2(d, profile("homflypt")), std::invalid_argument);
}

TEST_CASE("two-weight profile agrees with the independent polynomial") {
  const RingProfile& R = profile("homflypt");
  for (const char* pd : {kHopfPos, kHopfNeg, kTrefoil, kFig8}) {
    Diagram d = parse_pd(pd);
    CHECK(to_homfly(R, eval_type1(d, R)) == homflypt_oracle(d));
  }
  CHECK(to_homfly(R, eval_type1(parse_pd("O O"), R)) ==
        homflypt_oracle(parse_pd("O O")));
}

TEST_CASE("value does not depend on the marking") {
  EvalOptions pure;
  pure.memo = false;
  for (const char* name : {"homflypt", "b1"}) {
    const RingProfile& R = profile(name);
    for (const char* pd : {kHopfPos, kTrefoil}) {
      Diagram d = parse_pd(pd);
      RingElem ref = eval_type1(d, R);
      auto ms = all_markings(d);
      CHECK(ms.size() == (d.cr.size() == 2 ? 8 : 6));
      for (const Marking& m : ms)
        CHECK(elem_eq(R, eval_type1(d, m, R, pure), ref));
    }
  }
}

TEST_CASE("resolving two sites in either order gives one value") {
  for (const char* name : {"homflypt", "d-only"}) {
    const RingProfile& R = profile(name);
    Diagram fig = parse_pd(kFig8);
    for (auto [p, q] : {std::pair{0, 1}, {1, 3}, {2, 0}})
      CHECK(elem_eq(R, two_step(fig, p, q, R), two_step(fig, q, p, R)));
    Diagram tre = parse_pd(kTrefoil);
    CHECK(elem_eq(R, two_step(tre, 0, 2, R), two_step(tre, 2, 0, R)));
  }
}

TEST_CASE("first-family value survives each move") {
  const RingProfile& R = profile("homflypt");
  Diagram tre = parse_pd(kTrefoil);
  RingElem ref = eval_type1(tre, R);
  for (int sign : {1, -1})
    for (bool over : {false, true})
      CHECK(elem_eq(R, eval_type1(r1_add(tre, 1, sign, over), R), ref));

  Diagram hopf = parse_pd(kHopfPos);
  RingElem href = eval_type1(hopf, R);
  auto pokes = r2_sites(hopf);
  REQUIRE(pokes.size() >= 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(elem_eq(R, eval_type1(r2_add(hopf, pokes[i]), R), href));

  Diagram turned = with_crossing_changed(tre, 0);
  RingElem tref = eval_type1(turned, R);
  for (const Slide& s : r3_sites(turned))
    CHECK(elem_eq(R, eval_type1(r3_apply(turned, s), R), tref));
}

TEST_CASE("writhe-weighted value obeys the curl shift law") {
  const RingProfile& R = profile("mutant");
  Diagram tre = parse_pd(kTrefoil);
  ModifiedValue base = eval_type1_modified(tre, R);
  // The corrected form of a monotone curl sits at weight index zero.
  ModifiedValue curl = eval_type1_modified(parse_pd(kKinkPos), R);
  REQUIRE(curl.F.parts.size() == 1);
  CHECK(curl.F.parts.begin()->first == 0);

  for (int sign : {1, -1}) {
    ModifiedValue moved = eval_type1_modified(r1_add(tre, 2, sign, true), R);
    // A curl multiplies the raw value by the weight step...
    CHECK(poly_eq(elem_expand(R, moved.f),
                  elem_expand(R, elem_shift(base.f, sign))));
    // ...and the corrected value does not budge.
    CHECK(poly_eq(elem_expand(R, moved.F), elem_expand(R, base.F)));
  }

  Diagram turned = with_crossing_changed(tre, 0);
  ModifiedValue tbase = eval_type1_modified(turned, R);
  for (const Slide& s : r3_sites(turned)) {
    ModifiedValue slid = eval_type1_modified(r3_apply(turned, s), R);
    CHECK(poly_eq(elem_expand(R, slid.f), elem_expand(R, tbase.f)));
    CHECK(poly_eq(elem_expand(R, slid.F), elem_expand(R, tbase.F)));
  }
}

TEST_CASE("second-family curl values keep all ten weights") {
  const RingProfile& R = profile("type2-free");
  Poly csum = poly_zero();
  for (Sym s : {Sym::c1, Sym::c2, Sym::c3, Sym::c4})
    csum = poly_add(csum, R.image(s));
  Poly dsum = poly_add(R.image(Sym::d1), R.image(Sym::d2));
  RingElem want =
      elem_add(elem_scale(counter(R, 2), csum), elem_scale(counter(R, 1), dsum));
  CHECK(elem_eq(R, eval_type2(parse_pd(kKinkPos), R), want));

  Poly cbar = poly_zero();
  for (Sym s : {Sym::c1_bar, Sym::c2_bar, Sym::c3_bar, Sym::c4_bar})
    cbar = poly_add(cbar, R.image(s));
  Poly dbar = poly_add(R.image(Sym::d1_bar), R.image(Sym::d2_bar));
  RingElem wantn =
      elem_add(elem_scale(counter(R, 2), cbar), elem_scale(counter(R, 1), dbar));
  CHECK(elem_eq(R, eval_type2(parse_pd(kKinkNeg), R), wantn));
}

TEST_CASE("corrected second-family evaluation gates on the weight") {
  const RingProfile& C = profile("type2-d");
  GWeight one = [&C](int, int, int) {
    return elem_poly(poly_const(C.nvars(), Rational(1)));
  };
  Diagram kink = parse_pd(kKinkPos);
  CHECK(elem_eq(C, eval_type2_modified(kink, C, one), eval_type2(kink, C)));

  const RingProfile& F = profile("type2-free");
  GWeight onef = [&F](int, int, int) {
    return elem_poly(poly_const(F.nvars(), Rational(1)));
  };
  try {
    eval_type2_modified(kink, F, onef);
    FAIL("expected the window check to reject the constant weight");
  } catch (const std::invalid_argument& e) {
    std::string what = e.what();
    CHECK(what.find("curl") != std::string::npos);
    CHECK(what.find("w=") != std::string::npos);
  }
}

TEST_CASE("independent polynomial fingerprints") {
  CHECK(homflypt_oracle(parse_pd("O")) == l2_term(0, 0, 1));
  Laurent2 delta = l2_add(l2_term(1, -1, -1), l2_term(-1, -1, -1));
  CHECK(homflypt_oracle(parse_pd("O O")) == delta);

  // Mirroring a diagram inverts the first variable.
  for (const char* pd : {kTrefoil, kHopfPos}) {
    Diagram d = parse_pd(pd);
    CHECK(homflypt_oracle(mirror(d)) == flip_l(homflypt_oracle(d)));
  }
  // The figure-eight knot is its own mirror image.
  Laurent2 f8 = homflypt_oracle(parse_pd(kFig8));
  CHECK(flip_l(f8) == f8);
  CHECK(!f8.is_zero());
  // Chirality: the trefoil is not.
  Laurent2 tr = homflypt_oracle(parse_pd(kTrefoil));
  CHECK(!(flip_l(tr) == tr));
}

TEST_CASE("independent polynomial survives each move") {
  Diagram tre = parse_pd(kTrefoil);
  Laurent2 ref = homflypt_oracle(tre);
  for (const auto& [a, e] : arc_index(tre)) {
    (void)e;
    for (int sign : {1, -1})
      for (bool over : {false, true})
        CHECK(homflypt_oracle(r1_add(tre, a, sign, over)) == ref);
  }
  for (const Poke& p : r2_sites(tre))
    CHECK(homflypt_oracle(r2_add(tre, p)) == ref);

  Diagram turned = with_crossing_changed(tre, 0);
  Laurent2 tref = homflypt_oracle(turned);
  auto slides = r3_sites(turned);
  REQUIRE(!slides.empty());
  for (const Slide& s : slides)
    CHECK(homflypt_oracle(r3_apply(turned, s)) == tref);

  // Random diagrams: every move keeps the polynomial.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    Diagram d = random_diagram(rng, 4 + trial % 3);
    Laurent2 v = homflypt_oracle(d);
    CHECK(homflypt_oracle(r1_add(d, 1, -1, false)) == v);
    auto sites = r2_sites(d);
    REQUIRE(!sites.empty());
    CHECK(homflypt_oracle(r2_add(d, sites[trial % sites.size()])) == v);
    for (const Slide& s : r3_sites(d))
      CHECK(homflypt_oracle(r3_apply(d, s)) == v);
  }
}
