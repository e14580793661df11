#include "wrp/cosets.hpp"

#include <algorithm>
#include <deque>

namespace wrp {

OrbitReport orbits_on_set(const GroupAction& action,
                          const std::vector<std::pair<Syllable, GroupElement>>& gens,
                          const Window& window) {
  std::vector<Point> pts = action.window_points(window);
  std::map<Point, int> comp;
  OrbitReport rep;
  for (const Point& start : pts) {
    if (comp.count(start)) continue;
    int c = rep.count();
    bool boundary = false;
    std::vector<Point> members;
    comp.emplace(start, c);
    std::deque<Point> queue{start};
    while (!queue.empty()) {
      Point x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (const auto& [syl, g] : gens) {
        Point y = action.act(g, x);
        if (!action.in_window(y, window)) {
          boundary = true;
          continue;
        }
        if (comp.emplace(y, c).second) queue.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    rep.components.push_back(std::move(members));
    rep.touches_boundary.push_back(boundary);
  }
  return rep;
}

InvariantClassifier sign_classifier() {
  return {"sign", [](const Point& a, const Point& b) {
            if (a < b) return std::string("<");
            if (b < a) return std::string(">");
            return std::string("=");
          }};
}

InvariantClassifier equality_classifier() {
  return {"equality",
          [](const Point& a, const Point& b) { return a == b ? std::string("=") : std::string("!="); }};
}

PairOrbitReport orbits_on_pairs(const GroupAction& action,
                                const std::vector<std::pair<Syllable, GroupElement>>& gens,
                                const Window& window,
                                const std::optional<InvariantClassifier>& classifier) {
  std::vector<Point> pts = action.window_points(window);
  using Pair = std::pair<Point, Point>;
  std::map<Pair, int> comp;
  PairOrbitReport rep;
  std::set<std::string> labels;
  for (const Point& a0 : pts)
    for (const Point& b0 : pts) {
      Pair start{a0, b0};
      if (comp.count(start)) continue;
      int c = rep.bfs_classes++;
      comp.emplace(start, c);
      std::deque<Pair> queue{start};
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        std::string la;
        if (classifier) {
          la = classifier->label(a, b);
          ++rep.label_counts[la];
          labels.insert(la);
        }
        for (const auto& [syl, g] : gens) {
          Point ga = action.act(g, a);
          Point gb = action.act(g, b);
          // the classifier must be constant along every traversed edge
          if (classifier && classifier->label(ga, gb) != la)
            fail(errk::ClassifierViolation,
                 "classifier '" + classifier->name + "' changes at (" + a.str() + ", " + b.str() +
                     ") under generator " + syl.sym + (syl.inv ? "^-1" : ""));
          if (!action.in_window(ga, window) || !action.in_window(gb, window)) {
            rep.boundary_flagged = true;
            continue;
          }
          if (comp.emplace(Pair{ga, gb}, c).second) queue.push_back({ga, gb});
        }
      }
    }
  rep.label_classes = static_cast<int>(labels.size());
  rep.pair_orbit_classes = classifier ? rep.label_classes : rep.bfs_classes;
  return rep;
}

FinitePointAction FinitePointAction::make(const FiniteGroup& g, int npts) {
  FinitePointAction inst;
  inst.action = FiniteAction::natural(g, npts);
  inst.grp = inst.action.grp;
  inst.base_points = inst.action.orbit_reps();
  return inst;
}

namespace {

// orbit index and base-point decomposition: x = g . x_i
struct PointDecomp {
  std::vector<int> orbit_of;  // point -> orbit ordinal
  std::vector<int> taking;    // point -> some g with g . x_i = point
};

PointDecomp decompose(const FinitePointAction& inst) {
  PointDecomp d;
  int npts = inst.action.npts();
  d.orbit_of.assign(npts, -1);
  d.taking.assign(npts, -1);
  for (size_t i = 0; i < inst.base_points.size(); ++i) {
    int xi = inst.base_points[i];
    for (int e = 0; e < inst.grp->size(); ++e) {
      int y = inst.action.apply(e, xi);
      if (d.orbit_of[y] < 0) {
        d.orbit_of[y] = static_cast<int>(i);
        d.taking[y] = e;
      }
    }
  }
  return d;
}

}  // namespace

EdgeSet edges_from_cosets(const FinitePointAction& inst, const CosetFamilyInput& v) {
  const FiniteGroup& g = *inst.grp;
  int norb = inst.orbit_count();
  // expand V_ij = union of H_i r H_j
  std::vector<std::vector<int>> stab(norb);
  for (int i = 0; i < norb; ++i) stab[i] = inst.action.stabilizer(inst.base_points[i]);
  std::map<std::pair<int, int>, std::set<int>> vset;
  for (int i = 0; i < norb; ++i)
    for (int j = 0; j < norb; ++j) {
      auto it = v.reps.find({i, j});
      if (it == v.reps.end()) continue;
      auto& s = vset[{i, j}];
      for (int r : it->second)
        for (int a : stab[i])
          for (int b : stab[j]) s.insert(g.mul(g.mul(a, r), b));
    }
  // three conditions
  for (int i = 0; i < norb; ++i)
    for (int j = 0; j < norb; ++j) {
      const auto& vij = vset[{i, j}];
      const auto& vji = vset[{j, i}];
      for (int x : vij) {
        if (!vji.count(g.inv(x)))
          fail(errk::ConditionViolated, "B_ij^-1 = B_ji fails at (i,j)=(" + std::to_string(i) +
                                            "," + std::to_string(j) + "), witness " +
                                            g.element(x).str());
        for (int h : stab[i])
          if (!vij.count(g.mul(h, x)))
            fail(errk::ConditionViolated, "H_i B_ij = B_ij fails, witness " + g.element(x).str());
      }
      if (i == j)
        for (int x : vij)
          if (g.contains(stab[i], x))
            fail(errk::ConditionViolated,
                 "H_i ∩ B_ii = ∅ fails, witness " + g.element(x).str());
    }
  // edges: (a x_i, b x_j) in E iff a^-1 b in V_ij
  PointDecomp d = decompose(inst);
  EdgeSet e;
  int npts = inst.action.npts();
  for (int x = 0; x < npts; ++x)
    for (int y = 0; y < npts; ++y) {
      int i = d.orbit_of[x], j = d.orbit_of[y];
      int a = d.taking[x], b = d.taking[y];
      auto it = vset.find({i, j});
      if (it != vset.end() && it->second.count(g.mul(g.inv(a), b))) e.insert({x, y});
    }
  return e;
}

std::map<std::pair<int, int>, std::vector<int>> cosets_from_edges(const FinitePointAction& inst,
                                                                  const EdgeSet& e) {
  const FiniteGroup& g = *inst.grp;
  for (const auto& [x, y] : e) {
    if (x == y) fail(errk::NotInvariant, "edge set touches the diagonal");
    if (!e.count({y, x})) fail(errk::NotInvariant, "edge set not symmetric");
    for (int k = 0; k < g.size(); ++k) {
      int gx = inst.action.apply(k, x), gy = inst.action.apply(k, y);
      if (!e.count({gx, gy}))
        fail(errk::NotInvariant, "edge (" + std::to_string(x) + "," + std::to_string(y) +
                                     ") lost under " + g.element(k).str());
    }
  }
  std::map<std::pair<int, int>, std::vector<int>> b;
  int norb = inst.orbit_count();
  for (int i = 0; i < norb; ++i)
    for (int j = 0; j < norb; ++j) {
      std::vector<int> bij;
      for (int k = 0; k < g.size(); ++k)
        if (e.count({inst.base_points[i], inst.action.apply(k, inst.base_points[j])}))
          bij.push_back(k);
      b[{i, j}] = std::move(bij);
    }
  return b;
}

std::vector<EdgeSet> all_invariant_edge_sets(const FinitePointAction& inst) {
  // symmetrized orbits of off-diagonal ordered pairs under the diagonal action
  int npts = inst.action.npts();
  std::map<std::pair<int, int>, int> chunk;
  std::vector<EdgeSet> chunks;
  for (int x = 0; x < npts; ++x)
    for (int y = 0; y < npts; ++y) {
      if (x == y || chunk.count({x, y})) continue;
      EdgeSet orb;
      std::deque<std::pair<int, int>> queue{{x, y}};
      orb.insert({x, y});
      orb.insert({y, x});
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        for (int k = 0; k < inst.grp->size(); ++k) {
          std::pair<int, int> p{inst.action.apply(k, a), inst.action.apply(k, b)};
          if (orb.insert(p).second) {
            orb.insert({p.second, p.first});
            queue.push_back(p);
          }
        }
      }
      int id = static_cast<int>(chunks.size());
      for (const auto& p : orb) chunk[p] = id;
      chunks.push_back(std::move(orb));
    }
  // all unions of chunks
  std::vector<EdgeSet> out;
  size_t m = chunks.size();
  if (m > 16) fail(errk::NotFullyEnumerable, "too many invariant chunks");
  for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
    EdgeSet e;
    for (size_t i = 0; i < m; ++i)
      if (mask & (size_t(1) << i)) e.insert(chunks[i].begin(), chunks[i].end());
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace wrp
