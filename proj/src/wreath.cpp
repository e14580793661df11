#include "wrp/wreath.hpp"

#include <algorithm>
#include <deque>

namespace wrp {

std::string WreathElement::str() const {
  std::string s = "({";
  bool first = true;
  for (const auto& [x, w] : f) {
    if (!first) s += ", ";
    first = false;
    s += x.str() + ": " + w.str();
  }
  return s + "}, " + c.str() + ")";
}

WreathProduct::WreathProduct(GroupSpec w, GroupAction action, Window window)
    : w_(std::move(w)), action_(std::move(action)), window_(window) {
  for (const auto& [syl, t] : w_.symmetric_generators()) gens_.fiber.push_back({syl, t});
  for (const auto& [syl, s] : action_.group().symmetric_generators())
    gens_.base.push_back({syl, s});
}

WreathProduct::WreathProduct(const WreathProduct& o)
    : w_(o.w_), action_(o.action_), window_(o.window_), gens_(o.gens_) {
  std::lock_guard<std::mutex> lock(o.cache_mu_);
  fiber_len_memo_ = o.fiber_len_memo_;
  frag_ = o.frag_;
}

WreathProduct& WreathProduct::operator=(const WreathProduct& o) {
  if (this == &o) return *this;
  std::scoped_lock lock(cache_mu_, o.cache_mu_);
  w_ = o.w_;
  action_ = o.action_;
  window_ = o.window_;
  gens_ = o.gens_;
  fiber_len_memo_ = o.fiber_len_memo_;
  frag_ = o.frag_;
  return *this;
}

WreathElement WreathProduct::identity() const {
  return WreathElement{{}, action_.group().identity()};
}

WreathElement WreathProduct::fiber_at(const Point& x, const GroupElement& w) const {
  WreathElement e = identity();
  if (!w.is_identity()) e.f.emplace(x, w);
  return e;
}

WreathElement WreathProduct::from_base(const GroupElement& c) const {
  return WreathElement{{}, c};
}

WreathElement WreathProduct::multiply(const WreathElement& a, const WreathElement& b) const {
  // (f1,c1)(f2,c2) = (f1 + c1 f2, c1 c2), with (c1 f2)(x) = f2(c1^-1 x):
  // the entry of f2 at y lands at x = c1 . y
  WreathElement r{a.f, compose(a.c, b.c)};
  for (const auto& [y, w] : b.f) {
    Point x = action_.act(a.c, y);
    auto it = r.f.find(x);
    if (it == r.f.end()) {
      r.f.emplace(x, w);
    } else {
      it->second = compose(it->second, w);
      if (it->second.is_identity()) r.f.erase(it);  // support exactness
    }
  }
  return r;
}

WreathElement WreathProduct::inverse(const WreathElement& a) const {
  // (f,c)^-1 = (-c^-1 f, c^-1): entry at x is f(c x)^-1
  GroupElement ci = wrp::inverse(a.c);
  WreathElement r{{}, ci};
  for (const auto& [y, w] : a.f) r.f.emplace(action_.act(ci, y), wrp::inverse(w));
  return r;
}

long long WreathProduct::fiber_length(const GroupElement& w) const {
  if (auto cf = w_.closed_form_length(w)) return *cf;
  std::shared_ptr<const std::map<GroupElement, long long>> memo;
  {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (!fiber_len_memo_) {
      // memoize once by BFS over T; finite fibers enumerate fully
      auto table = std::make_shared<std::map<GroupElement, long long>>();
      auto gens = w_.symmetric_generators();
      std::deque<GroupElement> queue{w_.identity()};
      table->emplace(w_.identity(), 0);
      while (!queue.empty()) {
        GroupElement g = queue.front();
        queue.pop_front();
        long long d = table->at(g);
        if (d > 64) fail(errk::NotFullyEnumerable, "fiber group too large to memoize");
        for (const auto& [syl, s] : gens) {
          GroupElement h = compose(g, s);
          if (table->emplace(h, d + 1).second) queue.push_back(std::move(h));
        }
      }
      fiber_len_memo_ = std::move(table);
    }
    memo = fiber_len_memo_;
  }
  auto it = memo->find(w);
  if (it == memo->end())
    fail(errk::NotFullyEnumerable, "element outside the memoized fiber group");
  return it->second;
}

long long WreathProduct::support_length(const WreathElement& a) const {
  long long total = 0;
  for (const auto& [x, w] : a.f) total += fiber_length(w);
  return total;
}

std::shared_ptr<const SchreierFragment> WreathProduct::fragment(int radius) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!frag_ || frag_->radius < radius)
    frag_ = std::make_shared<const SchreierFragment>(explore(action_, gens_.base, radius, window_));
  return frag_;
}

long long WreathProduct::word_length(const WreathElement& a, int budget) const {
  CoverWalkProblem p;
  for (const auto& [x, w] : a.f) p.targets.push_back(x);
  p.terminal = a.c;
  auto run = [&](int b) {
    p.budget = b;
    return cover_walk_length(p, *fragment(b), action_) + support_length(a);
  };
  if (budget >= 0) return run(budget);
  // iterative deepening until the walk is certified or the window gives out
  for (int b = 4;; b *= 2) {
    try {
      return run(b);
    } catch (const Error& e) {
      if (e.kind() == errk::RadiusBudgetExceeded && b < 4096) continue;
      if (e.kind() == errk::TruncationEscape)
        fail(errk::RadiusBudgetExceeded,
             std::string("cannot certify within the truncation window: ") + e.what());
      throw;
    }
  }
}

std::vector<std::pair<WreathElement, int>> WreathProduct::ball(int radius) const {
  if (radius < 0) fail(errk::SchemaError, "negative radius");
  std::vector<std::pair<Syllable, WreathElement>> gens;
  Point x0 = action_.base_point();
  for (const auto& [syl, t] : gens_.fiber) gens.push_back({syl, fiber_at(x0, t)});
  for (const auto& [syl, s] : gens_.base) gens.push_back({syl, from_base(s)});

  std::map<WreathElement, int> dist{{identity(), 0}};
  std::deque<WreathElement> queue{identity()};
  while (!queue.empty()) {
    WreathElement e = queue.front();
    queue.pop_front();
    int d = dist.at(e);
    if (d == radius) continue;
    for (const auto& [syl, g] : gens) {
      WreathElement h = multiply(e, g);
      for (const auto& [x, w] : h.f)
        if (!action_.in_window(x, window_))
          fail(errk::TruncationEscape, "support point " + x.str() + " escapes the window");
      if (!h.c.is_identity() && action_.domain() != DomainKind::Regular) {
        Point cx = action_.act(h.c, x0);
        if (!action_.in_window(cx, window_))
          fail(errk::TruncationEscape, "cursor image " + cx.str() + " escapes the window");
      }
      if (dist.emplace(h, d + 1).second) queue.push_back(std::move(h));
    }
  }
  std::vector<std::pair<WreathElement, int>> out(dist.begin(), dist.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

DistortionReport WreathProduct::bilipschitz_compare(
    const std::vector<std::pair<WreathElement, int>>& ball_a,
    const std::function<GroupElement(const GroupElement&)>& fiber_map,
    const WreathProduct& image_side, long long declared_l) const {
  DistortionReport rep;
  rep.declared_l = declared_l;
  for (const auto& entry : ball_a) {
    const WreathElement& a = entry.first;
    WreathElement img{{}, a.c};
    for (const auto& [x, w] : a.f) {
      GroupElement mw = fiber_map(w);
      if (!mw.is_identity()) img.f.emplace(x, mw);
    }
    long long la = word_length(a);
    long long lb = image_side.word_length(img);
    if (la == 0 && lb == 0) {
      ++rep.identity_pairs;
      continue;
    }
    ++rep.compared;
    // ratio lb/la vs current extremes, kept exact via cross-multiplication
    if (rep.compared == 1) {
      rep.max_num = rep.min_num = lb;
      rep.max_den = rep.min_den = la;
    } else {
      if (lb * rep.max_den > rep.max_num * la) {
        rep.max_num = lb;
        rep.max_den = la;
      }
      if (lb * rep.min_den < rep.min_num * la) {
        rep.min_num = lb;
        rep.min_den = la;
      }
    }
    if (lb > declared_l * la || la > declared_l * lb) rep.violations.push_back(a);
  }
  return rep;
}

}  // namespace wrp
