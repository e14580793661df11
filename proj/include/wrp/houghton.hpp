// Elements of the Houghton groups H_n: bijections of Omega_n = N x {1..n}
// that are eventually a translation on each ray.
#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "wrp/errors.hpp"

namespace wrp {

struct OmegaPoint {
  int ray = 1;        // 1..n
  long long k = 0;    // >= 0

  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
  friend std::strong_ordering operator<=>(const OmegaPoint&, const OmegaPoint&) = default;
  std::string str() const { return "(" + std::to_string(k) + ",ray " + std::to_string(ray) + ")"; }
};

class HoughtonElement {
public:
  // offsets: eventual translation per ray (must sum to 0);
  // thresholds: per-ray cutoff, the translation rule applies for k >= threshold;
  // exceptions: images of the sub-threshold points, listed as (source, image).
  // Validates bijectivity and stores the canonical (minimal-threshold) form.
  HoughtonElement(std::vector<long long> offsets, std::vector<long long> thresholds,
                  std::vector<std::pair<OmegaPoint, OmegaPoint>> exceptions);

  static HoughtonElement identity(int rays);
  // transfer generator g_i (2 <= i <= rays): eventually translates ray 1 by -1
  // and ray i by +1, sending (1,0) to (i,0).
  static HoughtonElement transfer(int rays, int i);

  int rays() const { return static_cast<int>(offsets_.size()); }
  const std::vector<long long>& offsets() const { return offsets_; }
  const std::vector<long long>& thresholds() const { return thresholds_; }
  const std::vector<std::pair<OmegaPoint, OmegaPoint>>& exceptions() const { return exceptions_; }

  OmegaPoint eval(const OmegaPoint& p) const;
  HoughtonElement inverse() const;
  // (a*b)(p) = a(b(p)) -- apply b first
  friend HoughtonElement compose(const HoughtonElement& a, const HoughtonElement& b);

  bool is_identity() const;

  friend bool operator==(const HoughtonElement&, const HoughtonElement&) = default;
  friend std::strong_ordering operator<=>(const HoughtonElement&, const HoughtonElement&) = default;

  std::string str() const;

private:
  std::vector<long long> offsets_;
  std::vector<long long> thresholds_;
  std::vector<std::pair<OmegaPoint, OmegaPoint>> exceptions_;  // sorted by source
  void canonicalize();
  void validate() const;
};

}  // namespace wrp
