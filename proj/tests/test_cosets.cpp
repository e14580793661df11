#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrp/cosets.hpp"

using namespace wrp;

namespace {

FiniteGroup sym(int n) { return FiniteGroup::enumerate(GroupSpec::sym(n)); }

// stabilizer of point 0 in Sym(3): generated by the transposition of 1,2
std::vector<int> stab0(const FiniteGroup& g, int npts) {
  return FiniteAction::natural(g, npts).stabilizer(0);
}

FiniteGroup klein_four() {
  std::vector<NamedGen> gens{{"u", GroupElement(FinitePerm{{1, 0, 2, 3}})},
                             {"v", GroupElement(FinitePerm{{0, 1, 3, 2}})}};
  return FiniteGroup::enumerate(gens, GroupElement(FinitePerm::identity(4)));
}

}  // namespace

TEST_CASE("orbits_on_set") {
  SUBCASE("trivial group: every point its own orbit") {
    GroupAction a(GroupSpec::perm(3, {}), DomainKind::FiniteSet);
    auto rep = orbits_on_set(a, {}, Window{});
    CHECK(rep.count() == 3);
  }
  SUBCASE("Sym(3) natural: one orbit") {
    GroupAction a(GroupSpec::sym(3), DomainKind::FiniteSet);
    auto rep = orbits_on_set(a, GroupSpec::sym(3).symmetric_generators(), Window{});
    CHECK(rep.count() == 1);
    CHECK_FALSE(rep.touches_boundary[0]);
  }
  SUBCASE("Houghton H_3 window: one orbit, boundary-flagged") {
    GroupAction a(GroupSpec::houghton(3), DomainKind::Omega);
    auto rep = orbits_on_set(a, GroupSpec::houghton(3).symmetric_generators(), Window{20, 6});
    CHECK(rep.count() == 1);
    CHECK(rep.components[0].size() == 63);
    CHECK(rep.touches_boundary[0]);
  }
}

TEST_CASE("orbits_on_pairs") {
  SUBCASE("Z regular, window {-5..5}: classes are the differences") {
    GroupAction a(GroupSpec::integers(), DomainKind::IntLine);
    auto rep = orbits_on_pairs(a, GroupSpec::integers().symmetric_generators(), Window{5, 6},
                               std::nullopt);
    CHECK(rep.bfs_classes == 21);  // b - a in [-10, 10]
    CHECK(rep.pair_orbit_classes == 21);
  }
  SUBCASE("Thompson F, exponent <= 6: three sign classes, no violation") {
    GroupAction a(GroupSpec::thompson_f(), DomainKind::Dyadics);
    auto rep = orbits_on_pairs(a, GroupSpec::thompson_f().symmetric_generators(), Window{32, 6},
                               sign_classifier());
    CHECK(rep.label_classes == 3);
    CHECK(rep.pair_orbit_classes == 3);
    CHECK(rep.label_counts.count("<") == 1);
    CHECK(rep.label_counts.count("=") == 1);
    CHECK(rep.label_counts.count(">") == 1);
    CHECK(rep.bfs_classes == 163);  // window-restricted BFS refinement, regression fixture
  }
  SUBCASE("Houghton H_3 window {0..20}: exactly two classes") {
    GroupAction a(GroupSpec::houghton(3), DomainKind::Omega);
    auto rep = orbits_on_pairs(a, GroupSpec::houghton(3).symmetric_generators(), Window{20, 6},
                               equality_classifier());
    CHECK(rep.bfs_classes == 2);
    CHECK(rep.label_classes == 2);
    CHECK(rep.pair_orbit_classes == 2);
  }
  SUBCASE("violating classifier is caught with a witness") {
    GroupAction a(GroupSpec::integers(), DomainKind::IntLine);
    InvariantClassifier bogus{"parity", [](const Point& x, const Point&) {
                                return x.as<long long>() % 2 == 0 ? "even" : "odd";
                              }};
    CHECK_THROWS_WITH_AS(
        orbits_on_pairs(a, GroupSpec::integers().symmetric_generators(), Window{3, 6}, bogus),
        doctest::Contains("ClassifierViolation"), Error);
  }
}

TEST_CASE("double cosets") {
  FiniteGroup g = sym(3);
  auto h = stab0(g, 3);
  REQUIRE(h.size() == 2);

  SUBCASE("Sym(3) with a point stabilizer: 2 double cosets") {
    CHECK(double_cosets(g, h, h).count() == 2);
  }
  SUBCASE("H = G: one class") { CHECK(double_cosets(g, g.whole(), g.whole()).count() == 1); }
  SUBCASE("H normal: double cosets = cosets") {
    // A_3 inside Sym(3)
    auto a3 = g.subgroup_closure({g.index_of(GroupElement(FinitePerm{{1, 2, 0}}))});
    REQUIRE(a3.size() == 3);
    REQUIRE(g.is_normal(a3));
    CHECK(double_cosets(g, a3, a3).count() == 2);  // [G : A3]
  }
  SUBCASE("membership covers G and reps are in distinct classes") {
    auto t = double_cosets(g, h, h);
    for (int x = 0; x < g.size(); ++x) CHECK(t.coset_of[x] >= 0);
    for (size_t i = 0; i < t.reps.size(); ++i) CHECK(t.coset_of[t.reps[i]] == (int)i);
  }
}

TEST_CASE("almost maximal subgroup counts") {
  FiniteGroup g = sym(3);
  SUBCASE("H = G") { CHECK(almost_maximal_check(g, g.whole()).intermediate_subgroups == 1); }
  SUBCASE("Sym(3), point stabilizer: H and G only") {
    auto r = almost_maximal_check(g, stab0(g, 3));
    CHECK(r.intermediate_subgroups == 2);
    CHECK(r.biindex == 2);
  }
  SUBCASE("C2 x C2 over the trivial subgroup: 5 subgroups") {
    FiniteGroup v4 = klein_four();
    CHECK(almost_maximal_check(v4, v4.trivial()).intermediate_subgroups == 5);
  }
}

TEST_CASE("hereditary double-coset facts on fixed instances") {
  FiniteGroup g = sym(4);
  FiniteAction nat = FiniteAction::natural(g, 4);
  auto h2 = nat.stabilizer(0);               // Sym(3) inside Sym(4)
  auto h1 = g.subgroup_closure({g.index_of(GroupElement(FinitePerm{{0, 2, 1, 3}}))});

  SUBCASE("dicho: H2 is the union of H1 g H1 over g in H2") {
    auto t = double_cosets(g, h1, h1);
    std::set<int> classes;
    for (int x : h2) classes.insert(t.coset_of[x]);
    std::set<int> members;
    for (int x = 0; x < g.size(); ++x)
      if (classes.count(t.coset_of[x])) members.insert(x);
    CHECK(members == std::set<int>(h2.begin(), h2.end()));
  }
  SUBCASE("fibas: |H1\\G/H1| <= [H2:H1]^2 |H2\\G/H2|") {
    long long idx = static_cast<long long>(h2.size()) / h1.size();
    CHECK(double_cosets(g, h1, h1).count() <=
          idx * idx * double_cosets(g, h2, h2).count());
  }
  SUBCASE("quotient: biindex does not grow in G/N") {
    auto v4 = g.normal_closure({g.index_of(GroupElement(FinitePerm{{1, 0, 3, 2}}))});
    REQUIRE(v4.size() == 4);
    FiniteGroup q = g.quotient(v4);
    // image of H = stab(0): HN/N
    std::vector<int> cos = g.coset_map(v4);
    std::set<int> himg;
    for (int x : h2) himg.insert(cos[x]);
    std::vector<int> hq = q.subgroup_closure(std::vector<int>(himg.begin(), himg.end()));
    CHECK(double_cosets(q, hq, hq).count() <= double_cosets(g, h2, h2).count());
  }
  SUBCASE("caracfini surrogate: subgroups between N and G = subgroups of G/N") {
    auto v4 = g.normal_closure({g.index_of(GroupElement(FinitePerm{{1, 0, 3, 2}}))});
    FiniteGroup q = g.quotient(v4);
    CHECK(g.subgroups_containing(v4).size() == q.all_subgroups().size());
  }
}

TEST_CASE("caracfini lattice correspondence on every normal subgroup, order <= 24") {
  std::vector<FiniteGroup> groups;
  groups.push_back(sym(3));
  groups.push_back(sym(4));
  groups.push_back(klein_four());
  groups.push_back(FiniteGroup::enumerate(
      std::vector<NamedGen>{{"r", GroupElement(FinitePerm{{1, 2, 3, 0}})},
                            {"s", GroupElement(FinitePerm{{0, 3, 2, 1}})}},
      GroupElement(FinitePerm::identity(4))));  // D4
  groups.push_back(FiniteGroup::enumerate(GroupSpec::cyclic(6)));
  for (const auto& g : groups) {
    REQUIRE(g.size() <= 24);
    for (const auto& n : g.all_subgroups()) {
      if (!g.is_normal(n)) continue;
      CHECK(g.subgroups_containing(n).size() == g.quotient(n).all_subgroups().size());
    }
  }
}

TEST_CASE("quotient group is a group of the right size") {
  FiniteGroup g = sym(3);
  auto a3 = g.subgroup_closure({g.index_of(GroupElement(FinitePerm{{1, 2, 0}}))});
  FiniteGroup q = g.quotient(a3);
  CHECK(q.size() == 2);
  CHECK(q.mul(1, 1) == 0);
  CHECK_THROWS_WITH_AS(g.quotient(stab0(g, 3)), doctest::Contains("NotNormal"), Error);
}

TEST_CASE("edges from cosets and back") {
  FiniteGroup g = sym(3);
  FinitePointAction inst = FinitePointAction::make(g, 3);
  REQUIRE(inst.orbit_count() == 1);
  auto h = inst.action.stabilizer(0);

  SUBCASE("V_00 = G - H gives the complete graph minus the diagonal") {
    CosetFamilyInput v;
    for (int x = 0; x < g.size(); ++x)
      if (!g.contains(h, x)) v.reps[{0, 0}].push_back(x);
    EdgeSet e = edges_from_cosets(inst, v);
    CHECK(e.size() == 6);  // 3*2 ordered pairs
  }
  SUBCASE("empty V gives the empty edge set") {
    CHECK(edges_from_cosets(inst, {}).empty());
  }
  SUBCASE("V_00 = H (12) H gives all off-diagonal pairs") {
    CosetFamilyInput v;
    v.reps[{0, 0}].push_back(g.index_of(GroupElement(FinitePerm{{1, 0, 2}})));
    CHECK(edges_from_cosets(inst, v).size() == 6);
  }
  SUBCASE("identity rep violates H ∩ B_ii = ∅") {
    CosetFamilyInput v;
    v.reps[{0, 0}].push_back(g.id());
    CHECK_THROWS_WITH_AS(edges_from_cosets(inst, v), doctest::Contains("ConditionViolated"),
                         Error);
  }
  SUBCASE("non-invariant edge set is rejected with a witness") {
    EdgeSet bad{{0, 1}, {1, 0}};
    CHECK_THROWS_WITH_AS(cosets_from_edges(inst, bad), doctest::Contains("NotInvariant"), Error);
  }
  SUBCASE("asymmetric V violates B_ij^-1 = B_ji on a 2-orbit instance") {
    // Sym(3) acting on {0,1,2} ⊔ {3}
    std::vector<NamedGen> gens{{"a", GroupElement(FinitePerm{{1, 0, 2, 3}})},
                               {"b", GroupElement(FinitePerm{{1, 2, 0, 3}})}};
    FiniteGroup g2 = FiniteGroup::enumerate(gens, GroupElement(FinitePerm::identity(4)));
    FinitePointAction two = FinitePointAction::make(g2, 4);
    REQUIRE(two.orbit_count() == 2);
    CosetFamilyInput v;
    v.reps[{0, 1}].push_back(g2.id());  // V_01 nonempty, V_10 empty
    CHECK_THROWS_WITH_AS(edges_from_cosets(two, v), doctest::Contains("B_ij^-1"), Error);
  }
}

TEST_CASE("round-trip on every invariant edge set") {
  std::vector<FiniteGroup> groups;
  groups.push_back(sym(3));
  groups.push_back(sym(4));
  std::vector<int> npts{3, 4};
  // plus the 2-orbit Sym(3) action on {0,1,2} ⊔ {3}
  std::vector<NamedGen> gens{{"a", GroupElement(FinitePerm{{1, 0, 2, 3}})},
                             {"b", GroupElement(FinitePerm{{1, 2, 0, 3}})}};
  groups.push_back(FiniteGroup::enumerate(gens, GroupElement(FinitePerm::identity(4))));
  npts.push_back(4);

  for (size_t k = 0; k < groups.size(); ++k) {
    FinitePointAction inst = FinitePointAction::make(groups[k], npts[k]);
    for (const EdgeSet& e : all_invariant_edge_sets(inst)) {
      auto b = cosets_from_edges(inst, e);
      CosetFamilyInput v;
      for (const auto& [ij, elems] : b) v.reps[ij] = elems;  // a union of reps is fine
      CHECK(edges_from_cosets(inst, v) == e);
    }
  }
}

TEST_CASE("2^biindex bound on random subgroups") {
  std::mt19937 rng(31415);
  FiniteGroup g = sym(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> seed{static_cast<int>(rng() % g.size())};
    auto h = g.subgroup_closure(seed);
    auto r = almost_maximal_check(g, h);  // asserts the bound internally
    CHECK(r.intermediate_subgroups >= 1);
  }
}
