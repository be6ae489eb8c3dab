#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "linkinv/diagram.hpp"

using namespace linkinv;

namespace {

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
const char* kFig8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kHopfPlus = "X[2,3,1,4] X[4,1,3,2]";
const char* kHopfMinus = "X[2,4,1,3] X[4,2,3,1]";

// Scatter arc labels through a random order-preserving-free bijection and
// shuffle the crossing list; the canonical code must not move.
Diagram scramble(const Diagram& d, std::mt19937& rng) {
  std::map<ArcId, ArcId> relabel;
  for (const Crossing& c : d.cr)
    for (ArcId a : c.arc) relabel.emplace(a, 0);
  std::vector<ArcId> fresh;
  int next = 1;
  for (size_t i = 0; i < relabel.size(); ++i)
    fresh.push_back(next += 1 + (int)(rng() % 5));
  std::shuffle(fresh.begin(), fresh.end(), rng);
  size_t k = 0;
  for (auto& [from, to] : relabel) {
    (void)from;
    to = fresh[k++];
  }
  Diagram r = d;
  for (Crossing& c : r.cr)
    for (ArcId& a : c.arc) a = relabel.at(a);
  std::shuffle(r.cr.begin(), r.cr.end(), rng);
  return r;
}

} // namespace

TEST_CASE("trefoil parses with all-positive crossings") {
  Diagram d = parse_pd(kTrefoil);
  CHECK(d.cr.size() == 3);
  CHECK(writhe(d) == 3);
  auto comps = components(d);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == std::vector<ArcId>{1, 2, 3, 4, 5, 6});
  for (int i = 0; i < 3; ++i) CHECK(is_self_crossing(d, i));
}

TEST_CASE("kink orientation fixes the sign") {
  CHECK(writhe(parse_pd("X[1,2,2,1]")) == 1);
  CHECK(writhe(parse_pd("X[1,1,2,2]")) == -1);
}

TEST_CASE("hopf links") {
  Diagram plus = parse_pd(kHopfPlus);
  CHECK(writhe(plus) == 2);
  CHECK(components(plus).size() == 2);
  CHECK(!is_self_crossing(plus, 0));
  CHECK(!is_self_crossing(plus, 1));
  Diagram minus = parse_pd(kHopfMinus);
  CHECK(writhe(minus) == -2);
  CHECK(components(minus).size() == 2);
}

TEST_CASE("figure-eight diagram") {
  Diagram d = parse_pd(kFig8);
  CHECK(d.cr.size() == 4);
  CHECK(writhe(d) == 0);
  CHECK(components(d).size() == 1);
}

TEST_CASE("overstrand-only components need explicit signs") {
  CHECK_THROWS(parse_pd("X[1,3,2,3] X[2,4,1,4]"));
  CHECK_THROWS(parse_pd("X[1,3,2,3] X[2,4,1,4]+"));
  Diagram d = parse_pd("X[1,3,2,3]+ X[2,4,1,4]+");
  CHECK(components(d).size() == 3);
  CHECK(writhe(d) == 2);
}

TEST_CASE("malformed inputs are rejected") {
  CHECK_THROWS(parse_pd("X[1,2,3]"));
  CHECK_THROWS(parse_pd("X[1,2,3,4] X[1,2,3,4] X[1,5,6,7]"));
  CHECK_THROWS(parse_pd("X[1,2,3,4]"));
  CHECK_THROWS(parse_pd("Y[1,2,3,4]"));
}

TEST_CASE("pd text round trips") {
  for (const char* s : {kTrefoil, kFig8, kHopfPlus, kHopfMinus,
                        "X[1,3,2,3]+ X[2,4,1,4]+ O O"}) {
    Diagram d = parse_pd(s);
    CHECK(parse_pd(to_pd(d)) == d);
  }
}

TEST_CASE("crossing change is a sign-flipping involution") {
  Diagram d = parse_pd(kTrefoil);
  for (int i = 0; i < 3; ++i) {
    Diagram once = with_crossing_changed(d, i);
    CHECK(writhe(once) == 1);
    CHECK(components(once).size() == 1);
    CHECK(with_crossing_changed(once, i) == d);
  }
  // Changing every crossing of the positive Hopf diagram yields the
  // negative one.
  Diagram m = mirror(parse_pd(kHopfPlus));
  CHECK(writhe(m) == -2);
  CHECK(canonical_code(m) == canonical_code(parse_pd(kHopfMinus)));
}

TEST_CASE("reversal keeps signs and is an involution") {
  for (const char* s : {kTrefoil, kFig8, kHopfPlus}) {
    Diagram d = parse_pd(s);
    Diagram r = reversed(d);
    CHECK(writhe(r) == writhe(d));
    CHECK(components(r).size() == components(d).size());
    CHECK(reversed(r) == d);
  }
  // This trefoil diagram is symmetric under reversal.
  CHECK(canonical_code(reversed(parse_pd(kTrefoil))) ==
        canonical_code(parse_pd(kTrefoil)));
}

TEST_CASE("disjoint union relabels cleanly") {
  Diagram u = disjoint_union(parse_pd(kTrefoil), parse_pd(kHopfPlus));
  CHECK(u.cr.size() == 5);
  CHECK(writhe(u) == 5);
  CHECK(components(u).size() == 3);
  CHECK(is_self_crossing(u, 0));
  CHECK(!is_self_crossing(u, 3));
}

TEST_CASE("canonical code ignores labels, crossing order, and pd phrasing") {
  std::mt19937 rng(4242);
  for (const char* s : {kTrefoil, kFig8, kHopfPlus, kHopfMinus,
                        "X[1,3,2,3]+ X[2,4,1,4]+",
                        "X[1,2,2,1]", "X[1,1,2,2]"}) {
    Diagram d = parse_pd(s);
    std::string code = canonical_code(d);
    for (int t = 0; t < 8; ++t)
      CHECK(canonical_code(scramble(d, rng)) == code);
  }
}

TEST_CASE("canonical code separates genuinely different diagrams") {
  auto code = [](const char* s) { return canonical_code(parse_pd(s)); };
  CHECK(code(kTrefoil) != canonical_code(mirror(parse_pd(kTrefoil))));
  CHECK(code(kHopfPlus) != code(kHopfMinus));
  CHECK(code("X[1,2,2,1]") != code("X[1,1,2,2]"));
  CHECK(code(kTrefoil) != code(kFig8));
  // Circle count is part of the code.
  CHECK(code("X[1,2,2,1]") != code("X[1,2,2,1] O"));
  CHECK(canonical_code(parse_pd("O O")) != canonical_code(parse_pd("O")));
}
