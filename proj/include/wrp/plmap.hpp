// Elements of Thompson's group F: piecewise-linear increasing homeomorphisms
// of [0,1] with dyadic breakpoints and power-of-2 slopes.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrp/dyadic.hpp"

namespace wrp {

class PLMap {
public:
  using Breakpoint = std::pair<Dyadic, Dyadic>;

  PLMap();  // identity
  // Validates endpoints, monotonicity and power-of-2 slopes; removes
  // removable breakpoints so that equal maps compare equal structurally.
  explicit PLMap(std::vector<Breakpoint> bp);

  static PLMap identity() { return PLMap(); }
  // Standard generator pair (conventional choice; the breakpoint data is
  // x0: t/2 on [0,1/2], t-1/4 on [1/2,3/4], 2t-1 on [3/4,1]).
  static PLMap x0();
  static PLMap x1();

  const std::vector<Breakpoint>& breakpoints() const { return bp_; }

  Dyadic eval(const Dyadic& x) const;
  PLMap inverse() const;
  // (a*b)(x) = a(b(x)) -- apply b first
  friend PLMap compose(const PLMap& a, const PLMap& b);

  bool is_identity() const { return bp_.size() == 2; }

  friend bool operator==(const PLMap& a, const PLMap& b) { return a.bp_ == b.bp_; }
  friend std::strong_ordering operator<=>(const PLMap& a, const PLMap& b);

  std::string str() const;

private:
  std::vector<Breakpoint> bp_;  // includes (0,0) and (1,1)
  void canonicalize();
};

// log2 of the slope (y2-y1)/(x2-x1) if it is an exact power of two.
std::optional<int> slope_log2(const Dyadic& dx, const Dyadic& dy);

}  // namespace wrp
