// Finite vertex graphs with group labels, complement graphs, the
// free-subgroup-in-kernel criterion, free-product normal forms for the
// witnesses, and the increasing-graph-sequence stabilization detector.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wrp/errors.hpp"

namespace wrp {

struct VertexLabel {
  std::string name;                       // e.g. "C2", "C3", "Z"
  std::optional<unsigned long long> order;  // nullopt = infinite

  bool is_trivial() const { return order && *order == 1; }
  bool is_c2() const { return order && *order == 2; }
  static VertexLabel parse(const std::string& s);  // "C<k>" or "Z"
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

struct VertexGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // i < j, no loops
  std::vector<VertexLabel> labels;

  static VertexGraph make(int n, std::vector<std::pair<int, int>> edge_list,
                          std::vector<VertexLabel> labels);
  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
  }
  bool is_complete() const {
    return static_cast<long long>(edges.size()) == static_cast<long long>(n) * (n - 1) / 2;
  }
  friend bool operator==(const VertexGraph&, const VertexGraph&) = default;
};

VertexGraph complement(const VertexGraph& g);

std::vector<std::vector<int>> connected_components(const VertexGraph& g);

// ---- free-product normal forms (for the F2 witnesses) ----

// alternating syllables (vertex, exponent), exponent nonzero mod the label
// order; vertex orders come from the graph labels
struct FreeProdWord {
  std::vector<std::pair<int, long long>> syllables;

  friend bool operator==(const FreeProdWord&, const FreeProdWord&) = default;
  friend std::strong_ordering operator<=>(const FreeProdWord&, const FreeProdWord&) = default;
  std::string str() const;
};

FreeProdWord fp_reduce(std::vector<std::pair<int, long long>> sylls,
                       const std::vector<VertexLabel>& labels);
FreeProdWord fp_mult(const FreeProdWord& a, const FreeProdWord& b,
                     const std::vector<VertexLabel>& labels);
FreeProdWord fp_inverse(const FreeProdWord& a, const std::vector<VertexLabel>& labels);

// ball sizes |B(0)|..|B(radius)| of the subgroup generated by gens in the
// free product, under the word metric of the given generators
std::vector<long long> fp_ball_counts(const std::vector<FreeProdWord>& gens,
                                      const std::vector<VertexLabel>& labels, int radius);

// ---- the kernel criterion ----

enum class KernelCase { None, CaseA, CaseB };

struct KernelVerdict {
  bool contains_f2 = false;
  KernelCase proof_case = KernelCase::None;
  std::vector<int> component;  // the offending complement component
  std::pair<FreeProdWord, FreeProdWord> witness;  // free pair, when contains_f2
};

// Q = kernel of the graph product -> direct sum. NoFreeSubgroup iff every
// component of the complement has <= 2 vertices and every 2-vertex component
// has both labels of order exactly 2. Labels must be nontrivial.
KernelVerdict kernel_free_subgroup_criterion(const VertexGraph& g);

// ---- stabilization detector ----

struct StabilizationResult {
  bool stabilized = false;
  int index = -1;  // first m with Gamma_m = Gamma_{m+1} (or the final complete graph)
  std::vector<std::vector<long long>> class_degrees;  // d_{n,i}
};

// seq must be increasing in edges; the complement restricted to each class
// must be regular and must not cross classes.
StabilizationResult detect_stabilization(const std::vector<VertexGraph>& seq,
                                         const std::vector<std::vector<int>>& classes);

}  // namespace wrp
