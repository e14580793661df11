// Orbits on X and X^2 within truncation windows, the invariant-classifier
// certification, and the G-invariant edge set <-> double-coset family
// correspondence on finite instances.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wrp/action.hpp"
#include "wrp/enumgroup.hpp"
#include "wrp/point.hpp"

namespace wrp {

struct OrbitReport {
  std::vector<std::vector<Point>> components;  // BFS classes, deterministic order
  std::vector<bool> touches_boundary;          // some generator image left the window
  int count() const { return static_cast<int>(components.size()); }
};

// Connected components of the Schreier graph restricted to the window;
// components whose completeness the window cannot certify are flagged.
OrbitReport orbits_on_set(const GroupAction& action,
                          const std::vector<std::pair<Syllable, GroupElement>>& gens,
                          const Window& window);

// user-declared G-invariant on pairs, with its label set
struct InvariantClassifier {
  std::string name;
  std::function<std::string(const Point&, const Point&)> label;
};
InvariantClassifier sign_classifier();      // sign(b - a): "<", "=", ">"
InvariantClassifier equality_classifier();  // "=", "!="

struct PairOrbitReport {
  int bfs_classes = 0;
  std::map<std::string, long long> label_counts;  // realized labels (if classifier given)
  int label_classes = 0;
  // headline count: label classes when a classifier certifies them, else BFS
  int pair_orbit_classes = 0;
  bool boundary_flagged = false;
};

// Partition of window^2 under the diagonal action by generator-BFS. With a
// classifier: verifies each BFS class is label-constant (ClassifierViolation
// with a witness otherwise) and reports the realized label set.
PairOrbitReport orbits_on_pairs(const GroupAction& action,
                                const std::vector<std::pair<Syllable, GroupElement>>& gens,
                                const Window& window,
                                const std::optional<InvariantClassifier>& classifier);

// ---- edge sets <-> double-coset families B_ij on finite instances ----

// finite G-set with one base point per orbit
struct FinitePointAction {
  std::shared_ptr<const FiniteGroup> grp;
  FiniteAction action;
  std::vector<int> base_points;  // x_i, minimal point per orbit

  static FinitePointAction make(const FiniteGroup& g, int npts);
  int orbit_count() const { return static_cast<int>(base_points.size()); }
};

using EdgeSet = std::set<std::pair<int, int>>;  // ordered pairs, symmetric closed

// V given per (i,j) as unions of double cosets H_i r H_j over representatives.
struct CosetFamilyInput {
  std::map<std::pair<int, int>, std::vector<int>> reps;  // (i,j) -> rep element indices
};

// Expands V, verifies the three conditions (B_ij^-1 = B_ji, H_i B_ij = B_ij,
// H_i ∩ B_ii = ∅; ConditionViolated names the failing one with a witness),
// and returns the induced G-invariant symmetric irreflexive edge set.
EdgeSet edges_from_cosets(const FinitePointAction& inst, const CosetFamilyInput& v);

// B_ij = {g : (x_i, g x_j) in E}; verifies E is symmetric, irreflexive and
// G-invariant (NotInvariant with witness).
std::map<std::pair<int, int>, std::vector<int>> cosets_from_edges(const FinitePointAction& inst,
                                                                  const EdgeSet& e);

// all G-invariant edge sets of a finite action (unions of symmetrized orbits
// of off-diagonal pairs) -- test harness for the round-trip identity
std::vector<EdgeSet> all_invariant_edge_sets(const FinitePointAction& inst);

}  // namespace wrp
