#include "wrp/plmap.hpp"

#include <algorithm>
#include <set>

namespace wrp {

std::optional<int> slope_log2(const Dyadic& dx, const Dyadic& dy) {
  if (dx.num <= 0 || dy.num <= 0) return std::nullopt;
  // dy/dx = (m1/m2) * 2^(e2-e1); power of two iff odd parts of m1, m2 agree
  int t1 = two_adic_valuation(dy.num), t2 = two_adic_valuation(dx.num);
  if (dy.num >> t1 != dx.num >> t2) return std::nullopt;
  return (t1 - dy.exp) - (t2 - dx.exp);
}

PLMap::PLMap() {
  bp_ = {{Dyadic(0, 0), Dyadic(0, 0)}, {Dyadic(1, 0), Dyadic(1, 0)}};
}

PLMap::PLMap(std::vector<Breakpoint> bp) : bp_(std::move(bp)) {
  if (bp_.size() < 2 || bp_.front() != Breakpoint{Dyadic(0, 0), Dyadic(0, 0)} ||
      bp_.back() != Breakpoint{Dyadic(1, 0), Dyadic(1, 0)})
    fail(errk::SchemaError, "PL map must fix 0 and 1");
  for (size_t i = 0; i + 1 < bp_.size(); ++i) {
    const auto& [x1, y1] = bp_[i];
    const auto& [x2, y2] = bp_[i + 1];
    if (!(x1 < x2) || !(y1 < y2))
      fail(errk::SchemaError, "PL breakpoints must be strictly increasing");
    if (!slope_log2(x2 - x1, y2 - y1))
      fail(errk::SchemaError, "PL slope is not a power of 2 on [" + x1.str() + "," + x2.str() + "]");
  }
  canonicalize();
}

void PLMap::canonicalize() {
  std::vector<Breakpoint> out;
  out.push_back(bp_.front());
  for (size_t i = 1; i + 1 < bp_.size(); ++i) {
    const auto& [x0, y0] = out.back();
    const auto& [x1, y1] = bp_[i];
    const auto& [x2, y2] = bp_[i + 1];
    int s1 = *slope_log2(x1 - x0, y1 - y0);
    int s2 = *slope_log2(x2 - x1, y2 - y1);
    if (s1 != s2) out.push_back(bp_[i]);
  }
  out.push_back(bp_.back());
  bp_ = std::move(out);
}

PLMap PLMap::x0() {
  return PLMap({{Dyadic(0, 0), Dyadic(0, 0)},
                {Dyadic(1, 1), Dyadic(1, 2)},
                {Dyadic(3, 2), Dyadic(1, 1)},
                {Dyadic(1, 0), Dyadic(1, 0)}});
}

PLMap PLMap::x1() {
  return PLMap({{Dyadic(0, 0), Dyadic(0, 0)},
                {Dyadic(1, 1), Dyadic(1, 1)},
                {Dyadic(3, 2), Dyadic(5, 3)},
                {Dyadic(7, 3), Dyadic(3, 2)},
                {Dyadic(1, 0), Dyadic(1, 0)}});
}

Dyadic PLMap::eval(const Dyadic& x) const {
  if (x < Dyadic(0, 0) || Dyadic(1, 0) < x)
    fail(errk::PointOutOfDomain, "PL evaluation outside [0,1] at " + x.str());
  // rightmost breakpoint with bp.x <= x
  size_t lo = 0, hi = bp_.size() - 1;
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (bp_[mid].first <= x)
      lo = mid;
    else
      hi = mid;
  }
  if (bp_[hi].first == x) return bp_[hi].second;
  const auto& [x1, y1] = bp_[lo];
  const auto& [x2, y2] = bp_[lo + 1];
  int k = *slope_log2(x2 - x1, y2 - y1);
  return y1 + (x - x1).mul_pow2(k);
}

PLMap PLMap::inverse() const {
  std::vector<Breakpoint> out;
  out.reserve(bp_.size());
  for (const auto& [x, y] : bp_) out.emplace_back(y, x);
  return PLMap(std::move(out));
}

PLMap compose(const PLMap& a, const PLMap& b) {
  // breakpoints of a∘b: those of b, plus b-preimages of a's
  std::set<Dyadic> xs;
  for (const auto& [x, y] : b.bp_) xs.insert(x);
  PLMap binv = b.inverse();
  for (const auto& [x, y] : a.bp_) xs.insert(binv.eval(x));
  std::vector<PLMap::Breakpoint> out;
  out.reserve(xs.size());
  for (const Dyadic& x : xs) out.emplace_back(x, a.eval(b.eval(x)));
  return PLMap(std::move(out));
}

std::strong_ordering operator<=>(const PLMap& a, const PLMap& b) {
  size_t n = std::min(a.bp_.size(), b.bp_.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = a.bp_[i].first <=> b.bp_[i].first; c != 0) return c;
    if (auto c = a.bp_[i].second <=> b.bp_[i].second; c != 0) return c;
  }
  return a.bp_.size() <=> b.bp_.size();
}

std::string PLMap::str() const {
  std::string s = "PL[";
  for (size_t i = 0; i < bp_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + bp_[i].first.str() + "," + bp_[i].second.str() + ")";
  }
  return s + "]";
}

}  // namespace wrp
