// Exact K(F, c): the minimal length of a generator walk from 1 to c whose
// visited points g.x0 cover the target set F. BFS over (group element,
// covered-subset bitmask) states.
#pragma once

#include <vector>

#include "wrp/schreier.hpp"

namespace wrp {

inline constexpr int kMaxMaskWidth = 24;

struct CoverWalkProblem {
  std::vector<Point> targets;  // F
  GroupElement terminal;       // c
  int budget = -1;             // default: the fragment radius
};

// Certified optimum or an explicit failure (RadiusBudgetExceeded /
// MaskWidthExceeded); never a heuristic value.
int cover_walk_length(const CoverWalkProblem& p, const SchreierFragment& frag,
                      const GroupAction& action);

}  // namespace wrp
