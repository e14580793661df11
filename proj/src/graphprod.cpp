#include "wrp/graphprod.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace wrp {

VertexLabel VertexLabel::parse(const std::string& s) {
  if (s == "Z") return {"Z", std::nullopt};
  if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'c')) {
    unsigned long long k = std::stoull(s.substr(1));
    return {"C" + std::to_string(k), k};
  }
  fail(errk::SchemaError, "unknown vertex label '" + s + "' (want C<k> or Z)");
}

VertexGraph VertexGraph::make(int n, std::vector<std::pair<int, int>> edge_list,
                              std::vector<VertexLabel> labels) {
  VertexGraph g;
  g.n = n;
  g.labels = std::move(labels);
  if (static_cast<int>(g.labels.size()) != n)
    fail(errk::SchemaError, "label count differs from vertex count");
  for (auto [i, j] : edge_list) {
    if (i == j) fail(errk::SchemaError, "loops are not allowed");
    if (i < 0 || j < 0 || i >= n || j >= n) fail(errk::SchemaError, "edge endpoint out of range");
    if (i > j) std::swap(i, j);
    g.edges.insert({i, j});
  }
  return g;
}

VertexGraph complement(const VertexGraph& g) {
  VertexGraph c;
  c.n = g.n;
  c.labels = g.labels;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!g.edges.count({i, j})) c.edges.insert({i, j});
  return c;
}

std::vector<std::vector<int>> connected_components(const VertexGraph& g) {
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < g.n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> members;
    comp[v] = static_cast<int>(out.size());
    std::deque<int> queue{v};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int y = 0; y < g.n; ++y)
        if (comp[y] < 0 && g.has_edge(x, y)) {
          comp[y] = comp[v];
          queue.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

FreeProdWord fp_reduce(std::vector<std::pair<int, long long>> sylls,
                       const std::vector<VertexLabel>& labels) {
  FreeProdWord w;
  for (auto [v, e] : sylls) {
    if (!w.syllables.empty() && w.syllables.back().first == v) {
      e += w.syllables.back().second;
      w.syllables.pop_back();
    }
    if (labels[v].order) {
      long long m = static_cast<long long>(*labels[v].order);
      e = ((e % m) + m) % m;
    }
    if (e != 0) w.syllables.push_back({v, e});
  }
  return w;
}

FreeProdWord fp_mult(const FreeProdWord& a, const FreeProdWord& b,
                     const std::vector<VertexLabel>& labels) {
  std::vector<std::pair<int, long long>> s = a.syllables;
  s.insert(s.end(), b.syllables.begin(), b.syllables.end());
  return fp_reduce(std::move(s), labels);
}

FreeProdWord fp_inverse(const FreeProdWord& a, const std::vector<VertexLabel>& labels) {
  std::vector<std::pair<int, long long>> s;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    s.push_back({it->first, -it->second});
  return fp_reduce(std::move(s), labels);
}

std::string FreeProdWord::str() const {
  if (syllables.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < syllables.size(); ++i) {
    if (i) s += " ";
    s += "v" + std::to_string(syllables[i].first);
    if (syllables[i].second != 1) s += "^" + std::to_string(syllables[i].second);
  }
  return s;
}

std::vector<long long> fp_ball_counts(const std::vector<FreeProdWord>& gens,
                                      const std::vector<VertexLabel>& labels, int radius) {
  std::vector<FreeProdWord> sym = gens;
  for (const auto& g : gens) {
    FreeProdWord gi = fp_inverse(g, labels);
    if (!(gi == g)) sym.push_back(gi);
  }
  std::map<FreeProdWord, int> dist{{FreeProdWord{}, 0}};
  std::deque<FreeProdWord> queue{FreeProdWord{}};
  while (!queue.empty()) {
    FreeProdWord w = queue.front();
    queue.pop_front();
    int d = dist.at(w);
    if (d == radius) continue;
    for (const auto& s : sym) {
      FreeProdWord x = fp_mult(w, s, labels);
      if (dist.emplace(x, d + 1).second) queue.push_back(std::move(x));
    }
  }
  std::vector<long long> counts(radius + 1, 0);
  for (const auto& [w, d] : dist) ++counts[d];
  for (int r = 1; r <= radius; ++r) counts[r] += counts[r - 1];
  return counts;
}

namespace {

// generator syllable of vertex v
FreeProdWord vgen(int v) { return FreeProdWord{{{v, 1}}}; }

FreeProdWord fp_commutator(const FreeProdWord& x, const FreeProdWord& y,
                           const std::vector<VertexLabel>& labels) {
  return fp_mult(fp_mult(x, y, labels),
                 fp_mult(fp_inverse(x, labels), fp_inverse(y, labels), labels), labels);
}

}  // namespace

KernelVerdict kernel_free_subgroup_criterion(const VertexGraph& g) {
  for (int v = 0; v < g.n; ++v)
    if (g.labels[v].is_trivial())
      fail(errk::TrivialLabel, "vertex " + std::to_string(v) + " carries the trivial group");

  VertexGraph op = complement(g);
  auto comps = connected_components(op);

  // case a): a component with >= 2 vertices, one of which is not C2
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    for (int i : comp) {
      if (g.labels[i].is_c2()) continue;
      // pick a complement-neighbor j of i inside the component
      int j = -1;
      for (int cand : comp)
        if (cand != i && op.has_edge(i, cand)) j = cand;
      KernelVerdict v;
      v.contains_f2 = true;
      v.proof_case = KernelCase::CaseA;
      v.component = comp;
      // Z_i * Z_j contains F2; [s_i, s_j] and [s_i^2, s_j] are a free pair
      FreeProdWord si = vgen(i), sj = vgen(j);
      v.witness = {fp_commutator(si, sj, g.labels),
                   fp_commutator(fp_mult(si, si, g.labels), sj, g.labels)};
      return v;
    }
  }
  // case b): a component with >= 3 vertices (all labels C2 here)
  for (const auto& comp : comps) {
    if (comp.size() < 3) continue;
    // a path i - k - j inside the complement
    int k = -1, i = -1, j = -1;
    for (int cand : comp) {
      int deg = 0, n1 = -1, n2 = -1;
      for (int other : comp)
        if (other != cand && op.has_edge(cand, other)) {
          ++deg;
          if (n1 < 0)
            n1 = other;
          else if (n2 < 0)
            n2 = other;
        }
      if (deg >= 2) {
        k = cand;
        i = n1;
        j = n2;
        break;
      }
    }
    KernelVerdict v;
    v.contains_f2 = true;
    v.proof_case = KernelCase::CaseB;
    v.component = comp;
    // in C2 * C2 * C2: [s_k, s_i] and [s_k, s_j] generate a free pair
    v.witness = {fp_commutator(vgen(k), vgen(i), g.labels),
                 fp_commutator(vgen(k), vgen(j), g.labels)};
    return v;
  }
  return {};  // NoFreeSubgroup
}

StabilizationResult detect_stabilization(const std::vector<VertexGraph>& seq,
                                         const std::vector<std::vector<int>>& classes) {
  if (seq.empty()) fail(errk::SchemaError, "empty graph sequence");
  std::vector<int> class_of(seq[0].n, -1);
  for (size_t i = 0; i < classes.size(); ++i)
    for (int v : classes[i]) class_of[v] = static_cast<int>(i);
  for (int v = 0; v < seq[0].n; ++v)
    if (class_of[v] < 0) fail(errk::SchemaError, "vertex " + std::to_string(v) + " unclassified");

  StabilizationResult res;
  long long prev_degree_sum = -1;
  for (size_t n = 0; n < seq.size(); ++n) {
    if (seq[n].n != seq[0].n) fail(errk::SchemaError, "vertex sets differ along the sequence");
    if (n + 1 < seq.size()) {
      for (const auto& e : seq[n].edges)
        if (!seq[n + 1].edges.count(e))
          fail(errk::NotIncreasing, "edge (" + std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ") lost at step " +
                                        std::to_string(n + 1));
    }
    VertexGraph op = complement(seq[n]);
    // the complement must decompose along the classes
    for (const auto& [i, j] : op.edges)
      if (class_of[i] != class_of[j])
        fail(errk::NotRegularOnClass, "complement edge (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") crosses classes at step " +
                                          std::to_string(n));
    std::vector<long long> degs;
    for (const auto& cls : classes) {
      long long d0 = -1;
      for (int v : cls) {
        long long d = 0;
        for (int u : cls)
          if (u != v && op.has_edge(u, v)) ++d;
        if (d0 < 0) d0 = d;
        if (d != d0)
          fail(errk::NotRegularOnClass, "vertex " + std::to_string(v) +
                                            " breaks regularity at step " + std::to_string(n));
      }
      degs.push_back(d0 < 0 ? 0 : d0);
    }
    // degree sums decrease along an increasing sequence
    long long sum = 0;
    for (long long d : degs) sum += d;
    if (prev_degree_sum >= 0 && sum > prev_degree_sum)
      fail(errk::NotIncreasing, "degree sum grew at step " + std::to_string(n));
    prev_degree_sum = sum;
    res.class_degrees.push_back(std::move(degs));
  }

  for (size_t n = 0; n + 1 < seq.size(); ++n) {
    // the proof's implication: equal class degrees force equal graphs
    if (res.class_degrees[n] == res.class_degrees[n + 1] && !(seq[n] == seq[n + 1]))
      fail(errk::NotRegularOnClass,
           "equal degrees but distinct graphs at step " + std::to_string(n));
    if (seq[n] == seq[n + 1]) {
      res.stabilized = true;
      res.index = static_cast<int>(n);
      return res;
    }
  }
  if (seq.back().is_complete()) {
    // nothing can be added past the complete graph
    res.stabilized = true;
    res.index = static_cast<int>(seq.size()) - 1;
    return res;
  }
  return res;  // NotYet
}

}  // namespace wrp
