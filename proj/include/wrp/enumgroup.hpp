// Fully enumerated finite groups: multiplication tables, BFS words over the
// generators, subgroup closure and lattice search, conjugacy classes,
// quotients, double cosets.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wrp/action.hpp"
#include "wrp/element.hpp"
#include "wrp/word.hpp"

namespace wrp {

// Generic closure under right multiplication by a symmetric generating set
// (the caller includes inverses). Throws NotFullyEnumerable past the budget.
template <class Elem, class Mul>
std::vector<Elem> closure_set(const std::vector<Elem>& symmetric_gens, const Elem& id, Mul mul,
                              size_t budget) {
  std::map<Elem, int> seen{{id, 0}};
  std::vector<Elem> elems{id};
  for (size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : symmetric_gens) {
      Elem e = mul(elems[i], s);
      if (seen.emplace(e, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(e));
        if (elems.size() > budget)
          fail(errk::NotFullyEnumerable, "closure exceeds budget " + std::to_string(budget));
      }
    }
  return elems;
}

class FiniteGroup {
public:
  // BFS enumeration from named generators; element 0 is the identity and
  // words are geodesic over the symmetric generating set.
  static FiniteGroup enumerate(const std::vector<NamedGen>& gens, const GroupElement& id,
                               size_t budget = 100000);
  static FiniteGroup enumerate(const GroupSpec& spec, size_t budget = 100000);
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  int size() const { return n_; }
  int id() const { return 0; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  const GroupElement& element(int i) const { return label_[i]; }
  int index_of(const GroupElement& g) const;  // -1 if absent
  const Word& word(int i) const { return word_[i]; }
  const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }

  // sorted index-set subgroup utilities
  std::vector<int> subgroup_closure(const std::vector<int>& seed) const;
  bool is_subgroup(const std::vector<int>& h) const;
  bool is_normal(const std::vector<int>& h) const;
  bool contains(const std::vector<int>& h, int x) const;
  std::vector<int> normal_closure(const std::vector<int>& seed) const;
  std::vector<std::vector<int>> conjugacy_classes() const;

  // all subgroups K with H <= K <= G, via closing H together with one new
  // element at a time until a fixpoint; sorted for determinism
  std::vector<std::vector<int>> subgroups_containing(const std::vector<int>& h,
                                                     size_t budget = 100000) const;
  std::vector<std::vector<int>> all_subgroups(size_t budget = 100000) const;

  // quotient by a normal subgroup; labels are the minimal coset representatives
  FiniteGroup quotient(const std::vector<int>& n) const;
  std::vector<int> coset_map(const std::vector<int>& n) const;  // element -> quotient index

  std::vector<int> whole() const;
  std::vector<int> trivial() const { return {0}; }

private:
  int n_ = 1;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<GroupElement> label_;
  std::vector<Word> word_;
  std::map<GroupElement, int> index_;
  std::vector<std::pair<std::string, int>> gens_;  // name -> element index (base gens)
  void finish_tables();
};

// A finite group acting on points 0..npts-1 (labels must be permutations
// for natural(), or provide images explicitly). Holds its own copy of the
// group so the action is a self-contained value.
struct FiniteAction {
  std::shared_ptr<const FiniteGroup> grp;
  std::vector<std::vector<int>> img;  // img[elem][pt]

  static FiniteAction natural(const FiniteGroup& g, int npts);

  int npts() const { return img.empty() ? 0 : static_cast<int>(img[0].size()); }
  int apply(int elem, int pt) const { return img[elem][pt]; }
  std::vector<int> orbit_reps() const;           // minimal point per orbit
  std::vector<int> orbit_of(int pt) const;       // sorted
  std::vector<int> stabilizer(int pt) const;     // sorted element indices
  // Schreier generators of the stabilizer of pt, as freely reduced words
  // over the group's generators, reduced to an irredundant generating set.
  std::vector<Word> stabilizer_words(int pt) const;
};

struct DoubleCosetTable {
  std::vector<int> reps;      // element indices, ascending by index
  std::vector<int> coset_of;  // element index -> position in reps
  int count() const { return static_cast<int>(reps.size()); }
};

// Exact H1\G/H2 for a fully enumerated G.
DoubleCosetTable double_cosets(const FiniteGroup& g, const std::vector<int>& h1,
                               const std::vector<int>& h2);

// Number of subgroups K with H <= K <= G; asserts the 2^biindex bound.
struct AlmostMaximalReport {
  int intermediate_subgroups = 0;
  int biindex = 0;
};
AlmostMaximalReport almost_maximal_check(const FiniteGroup& g, const std::vector<int>& h);

}  // namespace wrp
