// Elements and arithmetic of W wr_X G, standard generating sets, exact
// geodesic word length via the covering-walk reduction, ball enumeration,
// and the bi-Lipschitz distortion comparison.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wrp/action.hpp"
#include "wrp/coverwalk.hpp"
#include "wrp/schreier.hpp"

namespace wrp {

// finite-support function X -> W; absent points map to the identity of W,
// stored entries are never the identity (support is exact)
using FinSupportFunction = std::map<Point, GroupElement>;

struct WreathElement {
  FinSupportFunction f;
  GroupElement c;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend std::strong_ordering operator<=>(const WreathElement& a, const WreathElement& b) {
    if (auto r = a.c <=> b.c; r != 0) return r;
    return std::lexicographical_compare_three_way(a.f.begin(), a.f.end(), b.f.begin(),
                                                  b.f.end());
  }
  std::string str() const;
};

struct WreathGenerators {
  std::vector<std::pair<Syllable, GroupElement>> fiber;  // T as elements of W, symmetric
  std::vector<std::pair<Syllable, GroupElement>> base;   // S as elements of G, symmetric
};

struct DistortionReport {
  long long compared = 0;       // nonidentity elements with both lengths
  long long identity_pairs = 0; // excluded from ratios, reported separately
  // ratios as exact fractions image_len / source_len
  long long max_num = 0, max_den = 1;
  long long min_num = 0, min_den = 1;
  std::vector<WreathElement> violations;  // outside [1/L, L]
  long long declared_l = 2;

  bool within_bounds() const { return violations.empty(); }
  double max_ratio() const { return max_den ? double(max_num) / double(max_den) : 0.0; }
  double min_ratio() const { return min_den ? double(min_num) / double(min_den) : 0.0; }
};

class WreathProduct {
public:
  // Transitive setup: W placed at the base point of the action of G on X.
  WreathProduct(GroupSpec w, GroupAction action, Window window = {});
  WreathProduct(const WreathProduct& o);
  WreathProduct& operator=(const WreathProduct& o);

  const GroupSpec& fiber_group() const { return w_; }
  const GroupAction& action() const { return action_; }
  const WreathGenerators& generators() const { return gens_; }
  const Window& window() const { return window_; }

  WreathElement identity() const;
  WreathElement multiply(const WreathElement& a, const WreathElement& b) const;
  WreathElement inverse(const WreathElement& a) const;
  WreathElement fiber_at(const Point& x, const GroupElement& w) const;  // delta_x(w)
  WreathElement from_base(const GroupElement& c) const;                 // (0, c)

  // |f| = sum of fiber word lengths over T (closed form or memoized BFS)
  long long fiber_length(const GroupElement& w) const;
  long long support_length(const WreathElement& a) const;

  // exact geodesic length |(f,c)| = K(supp f, c) + |f|; the covering-walk
  // search is certified within `budget` steps (default: enough for the
  // element, raised by the caller if needed)
  long long word_length(const WreathElement& a, int budget = -1) const;

  // all elements of length <= radius with their lengths, sorted by (length,
  // element); detects support escaping the truncation window
  std::vector<std::pair<WreathElement, int>> ball(int radius) const;

  // induced support-preserving correspondence (f,c) -> (fiber_map . f, c)
  DistortionReport bilipschitz_compare(
      const std::vector<std::pair<WreathElement, int>>& ball_a,
      const std::function<GroupElement(const GroupElement&)>& fiber_map,
      const WreathProduct& image_side, long long declared_l) const;

private:
  GroupSpec w_;
  GroupAction action_;
  Window window_;
  WreathGenerators gens_;
  // caches shared across const calls, guarded for concurrent use
  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const std::map<GroupElement, long long>> fiber_len_memo_;
  mutable std::shared_ptr<const SchreierFragment> frag_;  // grown on demand
  std::shared_ptr<const SchreierFragment> fragment(int radius) const;
};

}  // namespace wrp
