#include "linkinv/marking.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace linkinv {

void check_marking(const Diagram& d, const Marking& m) {
  auto comp_of = arc_component(d);
  size_t ncomps = components(d).size();
  if (m.base.size() != ncomps)
    throw std::runtime_error("marking starts " + std::to_string(m.base.size()) +
                             " components, diagram has " +
                             std::to_string(ncomps));
  std::set<int> seen;
  for (ArcId a : m.base) {
    auto it = comp_of.find(a);
    if (it == comp_of.end())
      throw std::runtime_error("marking uses unknown arc " + std::to_string(a));
    if (!seen.insert(it->second).second)
      throw std::runtime_error("marking starts a component twice");
  }
}

std::vector<ArcId> walk_arcs(const Diagram& d, const Marking& m) {
  check_marking(d, m);
  auto ends = arc_index(d);
  std::vector<ArcId> walk;
  for (ArcId start : m.base) {
    ArcId a = start;
    do {
      walk.push_back(a);
      const Pos& h = ends.at(a).head;
      a = d.cr[h.cr].arc[through_slot(d.cr[h.cr], h.slot)];
    } while (a != start);
  }
  return walk;
}

std::vector<int> bad_crossings(const Diagram& d, const Marking& m) {
  auto ends = arc_index(d);
  std::vector<char> seen(d.cr.size(), 0);
  std::vector<int> bads;
  for (ArcId a : walk_arcs(d, m)) {
    const Pos& h = ends.at(a).head;
    if (seen[h.cr]) continue;
    seen[h.cr] = 1;
    if (h.slot != 0) bads.push_back(h.cr); // first met riding over
  }
  return bads;
}

int first_bad(const Diagram& d, const Marking& m) {
  auto bads = bad_crossings(d, m);
  return bads.empty() ? -1 : bads.front();
}

bool is_monotone(const Diagram& d, const Marking& m) {
  return bad_crossings(d, m).empty();
}

Marking canonical_marking(const Diagram& d) {
  Marking m;
  for (const auto& comp : components(d)) m.base.push_back(comp[0]);
  return m;
}

} // namespace linkinv
