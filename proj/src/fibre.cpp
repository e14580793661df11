#include "wrp/fibre.hpp"

#include <algorithm>
#include <set>

namespace wrp {

Homomorphism build_hom(const FiniteGroup& src, const FiniteGroup& dst,
                       const std::map<std::string, int>& gen_images) {
  // extend along BFS words: phi(g s) = phi(g) phi(s)
  std::map<std::string, int> by_name;
  for (const auto& [name, idx] : src.generators()) {
    auto it = gen_images.find(name);
    if (it == gen_images.end())
      fail(errk::SchemaError, "no image for generator '" + name + "'");
    by_name[name] = it->second;
  }
  Homomorphism phi;
  phi.image.assign(src.size(), -1);
  phi.image[src.id()] = dst.id();
  for (int g = 0; g < src.size(); ++g) {
    int acc = dst.id();
    for (const auto& s : src.word(g).syllables()) {
      int im = by_name.at(s.sym);
      acc = dst.mul(acc, s.inv ? dst.inv(im) : im);
    }
    phi.image[g] = acc;
  }
  // multiplicativity on all (element, generator) pairs pins the rest
  for (int g = 0; g < src.size(); ++g)
    for (const auto& [name, s] : src.generators())
      if (phi.image[src.mul(g, s)] != dst.mul(phi.image[g], by_name.at(name)))
        fail(errk::NotHomomorphism, "generator images are inconsistent at " +
                                        src.element(g).str() + " * " + name);
  std::set<int> im(phi.image.begin(), phi.image.end());
  if (static_cast<int>(im.size()) != dst.size())
    fail(errk::NotSurjective, "generator images generate only " + std::to_string(im.size()) +
                                  " of " + std::to_string(dst.size()) + " elements");
  return phi;
}

FibreProductSpec FibreProductSpec::make(FiniteGroup g1, FiniteGroup g2, FiniteGroup q,
                                        const std::map<std::string, int>& p1_images,
                                        const std::map<std::string, int>& p2_images,
                                        size_t budget) {
  FibreProductSpec s{std::move(g1), std::move(g2), std::move(q), {}, {}, {}};
  if (static_cast<size_t>(s.g1.size()) * s.g2.size() > budget)
    fail(errk::BudgetExceeded, "|G1 x G2| exceeds the enumeration budget");
  s.p1 = build_hom(s.g1, s.q, p1_images);
  s.p2 = build_hom(s.g2, s.q, p2_images);
  s.product = FiniteGroup::direct_product(s.g1, s.g2);
  return s;
}

std::pair<int, int> FibreProductSpec::split(int idx) const {
  const auto& d = product.element(idx).as<DirectProductElem>();
  return {g1.index_of(d.factors[0]), g2.index_of(d.factors[1])};
}

int FibreProductSpec::fuse(int i1, int i2) const {
  return product.index_of(
      GroupElement(DirectProductElem{{g1.element(i1), g2.element(i2)}}));
}

std::vector<int> fibre_product(const FibreProductSpec& spec) {
  std::vector<int> h;
  for (int idx = 0; idx < spec.product.size(); ++idx) {
    auto [i1, i2] = spec.split(idx);
    if (spec.p1(i1) == spec.p2(i2)) h.push_back(idx);
  }
  if (h.size() * static_cast<size_t>(spec.q.size()) !=
      static_cast<size_t>(spec.g1.size()) * spec.g2.size())
    fail(errk::NotSurjective, "|H| != |G1||G2|/|Q|");
  return h;
}

std::vector<int> lattice_map_u(const FibreProductSpec& spec, const std::vector<int>& k) {
  std::vector<int> h = fibre_product(spec);
  for (int x : h)
    if (!std::binary_search(k.begin(), k.end(), x))
      fail(errk::DoesNotContainH, "subgroup misses the fibre product element " +
                                      spec.product.element(x).str());
  std::set<int> u;
  for (int idx : k) {
    auto [i1, i2] = spec.split(idx);
    if (i2 == spec.g2.id()) u.insert(spec.p1(i1));
  }
  std::vector<int> out(u.begin(), u.end());
  if (!spec.q.is_normal(out))
    fail(errk::NotNormal, "u(K) is not normal in Q");
  return out;
}

std::vector<int> lattice_map_v(const FibreProductSpec& spec, const std::vector<int>& n) {
  if (!spec.q.is_normal(n)) fail(errk::NotNormal, "v expects a normal subgroup of Q");
  std::vector<int> cos = spec.q.coset_map(n);
  std::vector<int> out;
  for (int idx = 0; idx < spec.product.size(); ++idx) {
    auto [i1, i2] = spec.split(idx);
    if (cos[spec.p1(i1)] == cos[spec.p2(i2)]) out.push_back(idx);
  }
  return out;
}

LatticeReport verify_lattice_bijection(const FibreProductSpec& spec) {
  LatticeReport rep;
  std::vector<int> h = fibre_product(spec);
  auto subs = spec.product.subgroups_containing(h);
  std::vector<std::vector<int>> norms;
  for (const auto& s : spec.q.all_subgroups())
    if (spec.q.is_normal(s)) norms.push_back(s);
  rep.intermediate_subgroups = static_cast<int>(subs.size());
  rep.normal_subgroups_of_q = static_cast<int>(norms.size());

  rep.v_u_identity = true;
  for (const auto& k : subs)
    if (lattice_map_v(spec, lattice_map_u(spec, k)) != k) rep.v_u_identity = false;
  rep.u_v_identity = true;
  for (const auto& n : norms)
    if (lattice_map_u(spec, lattice_map_v(spec, n)) != n) rep.u_v_identity = false;

  rep.order_preserving = true;
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& k1 : subs)
    for (const auto& k2 : subs) {
      auto u1 = lattice_map_u(spec, k1), u2 = lattice_map_u(spec, k2);
      if (subset(k1, k2) != subset(u1, u2)) rep.order_preserving = false;
    }
  return rep;
}

BiindexReport biindex_vs_conjclasses(const FibreProductSpec& spec) {
  BiindexReport rep;
  std::vector<int> h = fibre_product(spec);
  DoubleCosetTable t = double_cosets(spec.product, h, h);
  rep.double_cosets = t.count();
  rep.conjugacy_classes_of_q = static_cast<int>(spec.q.conjugacy_classes().size());

  // every double coset contains an element of G1 x {1}
  std::set<int> met;
  for (int i1 = 0; i1 < spec.g1.size(); ++i1) met.insert(t.coset_of[spec.fuse(i1, spec.g2.id())]);
  rep.every_class_meets_g1 = static_cast<int>(met.size()) == t.count();

  // (x,1) ~ (y,1) in H\G/H iff p1(x) and p1(y) are conjugate in Q
  auto classes = spec.q.conjugacy_classes();
  std::vector<int> qclass(spec.q.size());
  for (size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) qclass[x] = static_cast<int>(c);
  rep.conjugacy_matches_cosets = true;
  for (int x = 0; x < spec.g1.size(); ++x)
    for (int y = 0; y < spec.g1.size(); ++y) {
      bool same_coset =
          t.coset_of[spec.fuse(x, spec.g2.id())] == t.coset_of[spec.fuse(y, spec.g2.id())];
      bool conj = qclass[spec.p1(x)] == qclass[spec.p1(y)];
      if (same_coset != conj) rep.conjugacy_matches_cosets = false;
    }
  return rep;
}

}  // namespace wrp
