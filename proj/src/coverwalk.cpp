#include "wrp/coverwalk.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wrp {

int cover_walk_length(const CoverWalkProblem& p, const SchreierFragment& frag,
                      const GroupAction& action) {
  if (p.targets.size() > kMaxMaskWidth)
    fail(errk::MaskWidthExceeded, "|F| = " + std::to_string(p.targets.size()) + " exceeds " +
                                      std::to_string(kMaxMaskWidth));
  int budget = p.budget < 0 ? frag.radius : p.budget;
  if (budget > frag.radius)
    fail(errk::RadiusBudgetExceeded, "budget " + std::to_string(budget) +
                                         " exceeds fragment radius " +
                                         std::to_string(frag.radius));
  if (!frag.walk.count(p.terminal))
    fail(errk::RadiusBudgetExceeded, "terminal element outside the explored fragment");

  std::vector<Point> targets = p.targets;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  const uint32_t full = targets.empty() ? 0 : (uint32_t(1) << targets.size()) - 1;
  auto cover = [&](const Point& x, uint32_t m) {
    auto it = std::lower_bound(targets.begin(), targets.end(), x);
    if (it != targets.end() && *it == x) m |= uint32_t(1) << (it - targets.begin());
    return m;
  };

  // x0's own coverage counts at step 0 (the walk includes g0 = 1)
  const GroupElement id = action.group().identity();
  using State = std::pair<GroupElement, uint32_t>;
  State start{id, cover(frag.base, 0)};
  if (start.second == full && p.terminal == id) return 0;

  std::map<State, int> dist{{start, 0}};
  std::deque<State> queue{start};
  while (!queue.empty()) {
    State st = queue.front();
    queue.pop_front();
    int d = dist.at(st);
    if (d == budget) continue;
    for (const auto& [syl, s] : frag.gens) {
      GroupElement h = compose(st.first, s);
      if (!frag.walk.count(h)) continue;  // cannot happen when budget <= radius
      uint32_t m = cover(action.act(h, frag.base), st.second);
      State nxt{std::move(h), m};
      if (dist.emplace(nxt, d + 1).second) {
        if (m == full && nxt.first == p.terminal) return d + 1;  // BFS: first hit is minimal
        queue.push_back(std::move(nxt));
      }
    }
  }
  fail(errk::RadiusBudgetExceeded, "no covering walk within budget " + std::to_string(budget));
}

}  // namespace wrp
