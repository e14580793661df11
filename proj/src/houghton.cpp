#include "wrp/houghton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wrp {

HoughtonElement::HoughtonElement(std::vector<long long> offsets, std::vector<long long> thresholds,
                                 std::vector<std::pair<OmegaPoint, OmegaPoint>> exceptions)
    : offsets_(std::move(offsets)), thresholds_(std::move(thresholds)),
      exceptions_(std::move(exceptions)) {
  std::sort(exceptions_.begin(), exceptions_.end());
  validate();
  canonicalize();
}

void HoughtonElement::validate() const {
  int n = rays();
  if (n < 1 || thresholds_.size() != static_cast<size_t>(n))
    fail(errk::SchemaError, "houghton ray data size mismatch");
  if (std::accumulate(offsets_.begin(), offsets_.end(), 0LL) != 0)
    fail(errk::SchemaError, "houghton ray offsets must sum to 0");
  for (int i = 0; i < n; ++i) {
    if (thresholds_[i] < 0) fail(errk::SchemaError, "houghton threshold negative");
    if (thresholds_[i] + offsets_[i] < 0)
      fail(errk::SchemaError, "houghton eventual rule maps ray " + std::to_string(i + 1) +
                                  " below 0");
  }
  // exceptions domain must be exactly the sub-threshold region
  size_t want = 0;
  for (int i = 0; i < n; ++i) want += static_cast<size_t>(thresholds_[i]);
  if (exceptions_.size() != want)
    fail(errk::SchemaError, "houghton exceptions must cover exactly the sub-threshold points");
  std::set<OmegaPoint> images;
  size_t at = 0;
  for (int i = 0; i < n; ++i)
    for (long long k = 0; k < thresholds_[i]; ++k) {
      const auto& [src, img] = exceptions_[at++];
      if (src != OmegaPoint{i + 1, k})
        fail(errk::SchemaError, "houghton exception domain mismatch at " + src.str());
      if (img.ray < 1 || img.ray > n || img.k < 0)
        fail(errk::SchemaError, "houghton exception image outside Omega_n");
      // image must avoid the eventual image region of its ray
      if (img.k >= thresholds_[img.ray - 1] + offsets_[img.ray - 1])
        fail(errk::SchemaError, "houghton exception image collides with eventual image");
      if (!images.insert(img).second)
        fail(errk::SchemaError, "houghton exception images not distinct");
    }
  // with the above, counting makes the combined map a bijection of Omega_n
}

void HoughtonElement::canonicalize() {
  // minimal thresholds: drop trailing exceptions that agree with the rule
  for (int i = 0; i < rays(); ++i) {
    while (thresholds_[i] > 0) {
      OmegaPoint src{i + 1, thresholds_[i] - 1};
      auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(),
                                 std::make_pair(src, OmegaPoint{0, -1}));
      if (it == exceptions_.end() || it->first != src) break;
      if (it->second != OmegaPoint{i + 1, src.k + offsets_[i]}) break;
      exceptions_.erase(it);
      --thresholds_[i];
    }
  }
}

HoughtonElement HoughtonElement::identity(int rays) {
  return HoughtonElement(std::vector<long long>(rays, 0), std::vector<long long>(rays, 0), {});
}

HoughtonElement HoughtonElement::transfer(int rays, int i) {
  if (i < 2 || i > rays) fail(errk::SchemaError, "transfer generator index out of range");
  std::vector<long long> off(rays, 0), thr(rays, 0);
  off[0] = -1;
  off[i - 1] = 1;
  thr[0] = 1;
  return HoughtonElement(std::move(off), std::move(thr), {{OmegaPoint{1, 0}, OmegaPoint{i, 0}}});
}

OmegaPoint HoughtonElement::eval(const OmegaPoint& p) const {
  if (p.ray < 1 || p.ray > rays() || p.k < 0)
    fail(errk::PointOutOfDomain, "point " + p.str() + " not in Omega_" + std::to_string(rays()));
  if (p.k < thresholds_[p.ray - 1]) {
    auto it = std::lower_bound(exceptions_.begin(), exceptions_.end(),
                               std::make_pair(p, OmegaPoint{0, -1}));
    return it->second;
  }
  return OmegaPoint{p.ray, p.k + offsets_[p.ray - 1]};
}

HoughtonElement compose(const HoughtonElement& a, const HoughtonElement& b) {
  if (a.rays() != b.rays()) fail(errk::MixedGroupKinds, "houghton ray counts differ");
  int n = a.rays();
  std::vector<long long> off(n), thr(n);
  for (int i = 0; i < n; ++i) {
    off[i] = a.offsets_[i] + b.offsets_[i];
    thr[i] = std::max({b.thresholds_[i], a.thresholds_[i] - b.offsets_[i], 0LL});
  }
  std::vector<std::pair<OmegaPoint, OmegaPoint>> exc;
  for (int i = 0; i < n; ++i)
    for (long long k = 0; k < thr[i]; ++k) {
      OmegaPoint src{i + 1, k};
      exc.emplace_back(src, a.eval(b.eval(src)));
    }
  return HoughtonElement(std::move(off), std::move(thr), std::move(exc));
}

HoughtonElement HoughtonElement::inverse() const {
  int n = rays();
  std::vector<long long> off(n), thr(n);
  for (int i = 0; i < n; ++i) {
    off[i] = -offsets_[i];
    thr[i] = std::max(thresholds_[i] + offsets_[i], 0LL);
    for (const auto& [src, img] : exceptions_)
      if (img.ray == i + 1) thr[i] = std::max(thr[i], img.k + 1);
  }
  std::vector<std::pair<OmegaPoint, OmegaPoint>> exc;
  for (int i = 0; i < n; ++i)
    for (long long k = 0; k < thr[i]; ++k) {
      OmegaPoint img{i + 1, k};
      bool found = false;
      for (const auto& [s, m] : exceptions_)
        if (m == img) {
          exc.emplace_back(img, s);
          found = true;
          break;
        }
      if (!found) {
        OmegaPoint pre{i + 1, k - offsets_[i]};
        // bijectivity of the original guarantees this preimage is valid
        exc.emplace_back(img, pre);
      }
    }
  return HoughtonElement(std::move(off), std::move(thr), std::move(exc));
}

bool HoughtonElement::is_identity() const {
  for (long long o : offsets_)
    if (o != 0) return false;
  return exceptions_.empty();
}

std::string HoughtonElement::str() const {
  std::string s = "H[off=";
  for (size_t i = 0; i < offsets_.size(); ++i) s += (i ? "," : "") + std::to_string(offsets_[i]);
  s += "; exc=" + std::to_string(exceptions_.size()) + "]";
  return s;
}

}  // namespace wrp
