// Fibre products of finite groups, the subgroup-lattice bijection u/v
// against normal subgroups of the quotient, and the biindex <->
// conjugacy-class correspondence.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "wrp/enumgroup.hpp"

namespace wrp {

// Surjection p: src -> dst given on the named generators of src.
// Built by pushing generator images along the BFS words; NotHomomorphism if
// the extension is inconsistent, NotSurjective if the images do not generate.
struct Homomorphism {
  std::vector<int> image;  // per source element index
  int operator()(int x) const { return image[x]; }
};
Homomorphism build_hom(const FiniteGroup& src, const FiniteGroup& dst,
                       const std::map<std::string, int>& gen_images);

struct FibreProductSpec {
  FiniteGroup g1, g2, q;
  Homomorphism p1, p2;  // validated surjections onto q
  FiniteGroup product;  // g1 x g2, enumerated

  static FibreProductSpec make(FiniteGroup g1, FiniteGroup g2, FiniteGroup q,
                               const std::map<std::string, int>& p1_images,
                               const std::map<std::string, int>& p2_images,
                               size_t budget = 2500);
  // decompose a product index into (g1 index, g2 index)
  std::pair<int, int> split(int idx) const;
  int fuse(int i1, int i2) const;
};

// H = {(x,y) : p1(x) = p2(y)}, sorted product indices; |H| = |G1||G2|/|Q|
std::vector<int> fibre_product(const FibreProductSpec& spec);

// u(K) = p1(K ∩ (G1 x {1})), a normal subgroup of Q (asserted)
std::vector<int> lattice_map_u(const FibreProductSpec& spec, const std::vector<int>& k);

// v(N) = {(x,y) : p1(x) N = p2(y) N}; contains H; NotNormal if N is not
std::vector<int> lattice_map_v(const FibreProductSpec& spec, const std::vector<int>& n);

struct LatticeReport {
  int intermediate_subgroups = 0;
  int normal_subgroups_of_q = 0;
  bool u_v_identity = false;      // u(v(N)) = N for all N
  bool v_u_identity = false;      // v(u(K)) = K for all K
  bool order_preserving = false;  // K ⊆ K' iff u(K) ⊆ u(K')
  bool ok() const {
    return intermediate_subgroups == normal_subgroups_of_q && u_v_identity && v_u_identity &&
           order_preserving;
  }
};
LatticeReport verify_lattice_bijection(const FibreProductSpec& spec);

struct BiindexReport {
  int double_cosets = 0;
  int conjugacy_classes_of_q = 0;
  bool every_class_meets_g1 = false;      // each H-double coset contains some (x,1)
  bool conjugacy_matches_cosets = false;  // (x,1) ~ (y,1) iff images conjugate in Q
  bool ok() const {
    return double_cosets == conjugacy_classes_of_q && every_class_meets_g1 &&
           conjugacy_matches_cosets;
  }
};
BiindexReport biindex_vs_conjclasses(const FibreProductSpec& spec);

}  // namespace wrp
