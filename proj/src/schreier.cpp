#include "wrp/schreier.hpp"

#include <deque>
#include <set>

namespace wrp {

SchreierFragment explore(const GroupAction& action,
                         const std::vector<std::pair<Syllable, GroupElement>>& gens, int radius,
                         const Window& window) {
  if (radius < 0) fail(errk::SchemaError, "negative radius");
  SchreierFragment f;
  f.radius = radius;
  f.base = action.base_point();
  f.gens = gens;
  f.walk.emplace(action.group().identity(), 0);
  f.vertex_depth.emplace(f.base, 0);

  std::deque<GroupElement> queue{action.group().identity()};
  std::set<std::tuple<Point, Point, Syllable>> edge_set;
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    int d = f.walk.at(g);
    if (d == radius) continue;
    Point from = action.act(g, f.base);
    for (const auto& [syl, s] : gens) {
      GroupElement h = compose(g, s);
      Point to = action.act(h, f.base);
      if (!action.in_window(to, window))
        fail(errk::TruncationEscape,
             "point " + to.str() + " escapes the window at radius " + std::to_string(d + 1));
      if (edge_set.emplace(from, to, syl).second) f.edges.emplace_back(from, to, syl);
      Syllable rsyl{syl.sym, !syl.inv};
      if (edge_set.emplace(to, from, rsyl).second) f.edges.emplace_back(to, from, rsyl);
      if (f.walk.emplace(h, d + 1).second) {
        f.vertex_depth.emplace(to, d + 1);
        queue.push_back(std::move(h));
      }
    }
  }
  return f;
}

}  // namespace wrp
