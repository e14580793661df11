// Radius-bounded exploration of the action graph of G on X with a parallel
// Cayley walk of G: the substrate for covering-walk length computations.
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "wrp/action.hpp"
#include "wrp/point.hpp"
#include "wrp/word.hpp"

namespace wrp {

struct SchreierFragment {
  int radius = 0;
  Point base;
  std::vector<std::pair<Syllable, GroupElement>> gens;  // S, symmetric
  std::map<GroupElement, int> walk;        // group element -> BFS length
  std::map<Point, int> vertex_depth;       // point -> first-reach depth
  std::vector<std::tuple<Point, Point, Syllable>> edges;  // labeled traversals

  bool covers_walk_budget(int budget) const { return budget <= radius; }
};

// Complete BFS of the Cayley ball of radius `radius` (walks multiply
// generators on the right; the fragment records each element's point image
// g.x0). Throws TruncationEscape if a point image leaves the window.
SchreierFragment explore(const GroupAction& action,
                         const std::vector<std::pair<Syllable, GroupElement>>& gens, int radius,
                         const Window& window);

}  // namespace wrp
