#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <map>

#include "wrp/element.hpp"
#include "wrp/graphprod.hpp"

using namespace wrp;

namespace {

const std::vector<long long> kF2Ball{1, 5, 17, 53, 161, 485, 1457};

VertexLabel C2() { return VertexLabel::parse("C2"); }
VertexLabel C3() { return VertexLabel::parse("C3"); }

}  // namespace

TEST_CASE("complement") {
  VertexGraph k3 = VertexGraph::make(3, {{0, 1}, {0, 2}, {1, 2}}, {C2(), C2(), C2()});
  VertexGraph empty3 = VertexGraph::make(3, {}, {C2(), C2(), C2()});
  CHECK(complement(k3) == empty3);
  CHECK(complement(empty3) == k3);

  // 3-path: complement is the single remaining edge
  VertexGraph path = VertexGraph::make(3, {{0, 1}, {1, 2}}, {C2(), C2(), C2()});
  VertexGraph expect = VertexGraph::make(3, {{0, 2}}, {C2(), C2(), C2()});
  CHECK(complement(path) == expect);

  // involution on assorted graphs
  for (const auto& g : {k3, empty3, path}) CHECK(complement(complement(g)) == g);
}

TEST_CASE("kernel criterion fixtures") {
  SUBCASE("complement one edge, both C2: no free subgroup") {
    // graph on 2 vertices with no edge; complement = the single edge
    VertexGraph g = VertexGraph::make(2, {}, {C2(), C2()});
    auto v = kernel_free_subgroup_criterion(g);
    CHECK_FALSE(v.contains_f2);
    CHECK(v.proof_case == KernelCase::None);
  }
  SUBCASE("complement one edge, one label C3: free subgroup, case a") {
    VertexGraph g = VertexGraph::make(2, {}, {C3(), C2()});
    auto v = kernel_free_subgroup_criterion(g);
    CHECK(v.contains_f2);
    CHECK(v.proof_case == KernelCase::CaseA);
    CHECK(fp_ball_counts({v.witness.first, v.witness.second}, g.labels, 6) == kF2Ball);
  }
  SUBCASE("complement triangle, all C2: free subgroup, case b") {
    VertexGraph g = VertexGraph::make(3, {}, {C2(), C2(), C2()});
    auto v = kernel_free_subgroup_criterion(g);
    CHECK(v.contains_f2);
    CHECK(v.proof_case == KernelCase::CaseB);
    CHECK(v.component == std::vector<int>{0, 1, 2});
    CHECK(fp_ball_counts({v.witness.first, v.witness.second}, g.labels, 6) == kF2Ball);
  }
  SUBCASE("trivial label rejected") {
    VertexGraph g = VertexGraph::make(2, {}, {VertexLabel::parse("C1"), C2()});
    CHECK_THROWS_WITH_AS(kernel_free_subgroup_criterion(g), doctest::Contains("TrivialLabel"),
                         Error);
  }
  SUBCASE("more witness label combinations stay free") {
    for (const char* lbl : {"C4", "C5", "Z", "C3"}) {
      VertexGraph g = VertexGraph::make(2, {}, {VertexLabel::parse(lbl), C2()});
      auto v = kernel_free_subgroup_criterion(g);
      REQUIRE(v.contains_f2);
      CHECK(fp_ball_counts({v.witness.first, v.witness.second}, g.labels, 6) == kF2Ball);
    }
    // two non-C2 labels
    VertexGraph g = VertexGraph::make(2, {}, {C3(), C3()});
    auto v = kernel_free_subgroup_criterion(g);
    CHECK(fp_ball_counts({v.witness.first, v.witness.second}, g.labels, 6) == kF2Ball);
  }
  SUBCASE("isolated complement vertices are fine") {
    // complete graph: complement totally disconnected, kernel trivial
    VertexGraph g = VertexGraph::make(3, {{0, 1}, {0, 2}, {1, 2}}, {C3(), C2(), C2()});
    CHECK_FALSE(kernel_free_subgroup_criterion(g).contains_f2);
  }
  SUBCASE("mixed: one good pair plus a bad triangle") {
    // complement = triangle on {0,1,2} plus isolated {3}
    VertexGraph g = VertexGraph::make(4, {{0, 3}, {1, 3}, {2, 3}}, {C2(), C2(), C2(), C3()});
    auto v = kernel_free_subgroup_criterion(g);
    CHECK(v.contains_f2);
    CHECK(v.proof_case == KernelCase::CaseB);
  }
}

TEST_CASE("witness correctness: abelian images, free growth") {
  // the case-a witness pair lies in the kernel of the map to the direct sum
  VertexGraph g = VertexGraph::make(2, {}, {C3(), C2()});
  auto v = kernel_free_subgroup_criterion(g);
  auto abelian_image = [&](const FreeProdWord& w) {
    long long e0 = 0, e1 = 0;
    for (auto [vx, e] : w.syllables) (vx == 0 ? e0 : e1) += e;
    return std::pair{((e0 % 3) + 3) % 3, ((e1 % 2) + 2) % 2};
  };
  CHECK(abelian_image(v.witness.first) == std::pair{0LL, 0LL});
  CHECK(abelian_image(v.witness.second) == std::pair{0LL, 0LL});
}

TEST_CASE("D_inf -> C2 x C2 kernel is abelian, generated by (ab)^2") {
  // normal-form computation in D_inf: the kernel of a -> (1,0), b -> (0,1)
  // consists of the even translations
  GroupElement a(DihedralElem{true, 0}), b(DihedralElem{true, 1});
  GroupElement ab2 = compose(compose(a, b), compose(a, b));
  CHECK(ab2 == GroupElement(DihedralElem{false, -2}));

  // enumerate D_inf ball over {a,b} and track images in C2 x C2
  std::map<GroupElement, std::pair<int, int>> img{{GroupElement(DihedralElem{false, 0}), {0, 0}}};
  std::deque<GroupElement> queue{GroupElement(DihedralElem{false, 0})};
  std::map<GroupElement, int> depth{{GroupElement(DihedralElem{false, 0}), 0}};
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    if (depth[g] == 10) continue;
    int which = 0;
    for (const auto& s : {a, b}) {
      GroupElement h = compose(g, s);
      if (!depth.count(h)) {
        depth[h] = depth[g] + 1;
        auto p = img[g];
        (which == 0 ? p.first : p.second) ^= 1;
        img[h] = p;
        queue.push_back(h);
      }
      ++which;
    }
  }
  for (const auto& [g, p] : img) {
    if (p != std::pair{0, 0}) continue;
    const auto& d = g.as<DihedralElem>();
    CHECK_FALSE(d.refl);             // kernel elements are translations
    CHECK(d.shift % 2 == 0);         // by even amounts: powers of (ab)^2
    // and abelian: commutes with ab2
    CHECK(compose(g, ab2) == compose(ab2, g));
  }
}

TEST_CASE("free product normal forms") {
  std::vector<VertexLabel> labels{C3(), C2()};
  FreeProdWord s{{{0, 1}}}, t{{{1, 1}}};
  CHECK(fp_mult(s, fp_mult(s, s, labels), labels) == FreeProdWord{});
  CHECK(fp_mult(t, t, labels) == FreeProdWord{});
  CHECK(fp_inverse(s, labels) == FreeProdWord{{{0, 2}}});
  // (st)(t s^2) = s^3 = 1 via cascading reduction
  FreeProdWord st = fp_mult(s, t, labels);
  FreeProdWord ts2 = fp_mult(t, fp_mult(s, s, labels), labels);
  CHECK(fp_mult(st, ts2, labels) == FreeProdWord{});
}

TEST_CASE("stabilization detector") {
  std::vector<VertexLabel> l3{C2(), C2(), C2()};
  VertexGraph empty3 = VertexGraph::make(3, {}, l3);
  VertexGraph k3 = VertexGraph::make(3, {{0, 1}, {0, 2}, {1, 2}}, l3);
  std::vector<std::vector<int>> one_class{{0, 1, 2}};

  SUBCASE("constant sequence stabilizes at 0") {
    auto r = detect_stabilization({k3, k3, k3}, one_class);
    CHECK(r.stabilized);
    CHECK(r.index == 0);
  }
  SUBCASE("two steps to the complete graph: index 1, degrees (2)->(0)") {
    auto r = detect_stabilization({empty3, k3}, one_class);
    CHECK(r.stabilized);
    CHECK(r.index == 1);
    CHECK(r.class_degrees == std::vector<std::vector<long long>>{{2}, {0}});
  }
  SUBCASE("strictly growing degrees: NotYet") {
    // 4 vertices, one class; complement degree must stay constant per class
    std::vector<VertexLabel> l4{C2(), C2(), C2(), C2()};
    VertexGraph g0 = VertexGraph::make(4, {}, l4);                          // comp degree 3
    VertexGraph g1 = VertexGraph::make(4, {{0, 1}, {2, 3}}, l4);            // comp degree 2
    VertexGraph g2 = VertexGraph::make(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}, l4);  // degree 1
    auto r = detect_stabilization({g0, g1, g2}, {{0, 1, 2, 3}});
    CHECK_FALSE(r.stabilized);
    CHECK(r.class_degrees == std::vector<std::vector<long long>>{{3}, {2}, {1}});
  }
  SUBCASE("decreasing sequences are rejected") {
    CHECK_THROWS_WITH_AS(detect_stabilization({k3, empty3}, one_class),
                         doctest::Contains("NotIncreasing"), Error);
  }
  SUBCASE("irregular class is rejected with a witness vertex") {
    VertexGraph g = VertexGraph::make(3, {{0, 1}}, l3);  // comp degrees 1,1,2
    CHECK_THROWS_WITH_AS(detect_stabilization({g, k3}, one_class),
                         doctest::Contains("NotRegularOnClass"), Error);
  }
  SUBCASE("cross-class complement edges are rejected") {
    VertexGraph g = VertexGraph::make(3, {{0, 1}}, l3);
    CHECK_THROWS_WITH_AS(detect_stabilization({g, k3}, {{0, 1}, {2}}),
                         doctest::Contains("NotRegularOnClass"), Error);
  }
}
