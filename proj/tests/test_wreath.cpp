#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wrp/enumgroup.hpp"
#include "wrp/wreath.hpp"

using namespace wrp;

namespace {

WreathProduct lamplighter(long long bound = 32) {
  return WreathProduct(GroupSpec::cyclic(2),
                       GroupAction(GroupSpec::integers(), DomainKind::IntLine),
                       Window{bound, 6});
}

WreathProduct c2_wr_sym3() {
  return WreathProduct(GroupSpec::cyclic(2), GroupAction(GroupSpec::sym(3), DomainKind::FiniteSet));
}

WreathProduct z_wr_z(long long bound = 32) {
  return WreathProduct(GroupSpec::integers(),
                       GroupAction(GroupSpec::integers(), DomainKind::IntLine),
                       Window{bound, 6});
}

WreathProduct dinf_wr_z(long long bound = 32) {
  return WreathProduct(GroupSpec::dihedral_inf(),
                       GroupAction(GroupSpec::integers(), DomainKind::IntLine),
                       Window{bound, 6});
}

GroupElement z_to_dinf(const GroupElement& n) {
  // n -> (ab)^n, the translation by -n
  return GroupElement(DihedralElem{false, -n.as<IntElem>().v});
}

WreathElement random_ball_elem(const std::vector<std::pair<WreathElement, int>>& ball,
                               std::mt19937& rng) {
  return ball[rng() % ball.size()].first;
}

}  // namespace

TEST_CASE("wreath multiplication: identities and the quoted formula") {
  auto ll = lamplighter();
  GroupElement lamp(CyclicElem{1, 2});
  WreathElement id = ll.identity();

  WreathElement a = ll.multiply(ll.fiber_at(Point(0LL), lamp), ll.from_base(GroupElement(IntElem{1})));
  WreathElement b = ll.multiply(ll.fiber_at(Point(0LL), lamp), ll.from_base(GroupElement(IntElem{-1})));

  CHECK(ll.multiply(id, a) == a);
  CHECK(ll.multiply(a, id) == a);

  // ({0->s}, +1) * ({0->s}, -1) = ({0->s, 1->s}, 0)
  WreathElement prod = ll.multiply(a, b);
  CHECK(prod.c == GroupElement(IntElem{0}));
  REQUIRE(prod.f.size() == 2);
  CHECK(prod.f.count(Point(0LL)) == 1);
  CHECK(prod.f.count(Point(1LL)) == 1);

  CHECK(ll.multiply(a, ll.inverse(a)).f.empty());
  CHECK(ll.multiply(prod, ll.inverse(prod)) == id);
}

TEST_CASE("imprimitive action as an independent multiplication oracle") {
  // W wr_X G acts on X x W by (f,c).(x,w) = (c.x, f(c.x) w); associativity of
  // this action cross-checks wr_multiply against plain group composition
  auto wr = c2_wr_sym3();
  auto ball = wr.ball(6);
  REQUIRE(ball.size() == 48);  // |C2 wr Sym(3)| = 2^3 * 6

  auto act_on = [&](const WreathElement& e, std::pair<long long, GroupElement> xw) {
    Point cx = wr.action().act(e.c, Point(xw.first));
    auto it = e.f.find(cx);
    GroupElement w = it == e.f.end() ? GroupSpec::cyclic(2).identity() : it->second;
    return std::make_pair(cx.as<long long>(), compose(w, xw.second));
  };

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = ball[rng() % ball.size()].first;
    const auto& b = ball[rng() % ball.size()].first;
    std::pair<long long, GroupElement> xw{rng() % 3, GroupElement(CyclicElem{(long long)(rng() % 2), 2})};
    auto lhs = act_on(wr.multiply(a, b), xw);
    auto rhs = act_on(a, act_on(b, xw));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("associativity on sampled triples") {
  auto ll = lamplighter();
  auto ball = ll.ball(4);
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    auto a = random_ball_elem(ball, rng);
    auto b = random_ball_elem(ball, rng);
    auto c = random_ball_elem(ball, rng);
    CHECK(ll.multiply(ll.multiply(a, b), c) == ll.multiply(a, ll.multiply(b, c)));
  }
}

TEST_CASE("word length examples") {
  auto ll = lamplighter();
  GroupElement lamp(CyclicElem{1, 2});

  CHECK(ll.word_length(ll.identity()) == 0);
  CHECK(ll.word_length(ll.fiber_at(Point(0LL), lamp)) == 1);
  // lamp at 2, cursor 0: 1 + K({2},0) = 1 + 4
  CHECK(ll.word_length(ll.fiber_at(Point(2LL), lamp)) == 5);
}

TEST_CASE("ball enumeration fixtures") {
  auto ll = lamplighter();
  CHECK(ll.ball(0).size() == 1);
  CHECK(ll.ball(1).size() == 4);   // identity, lamp toggle, cursor +-1
  CHECK(ll.ball(4).size() == 44);  // brute-force regression fixture

  std::vector<size_t> sizes;
  for (int r = 0; r <= 6; ++r) sizes.push_back(ll.ball(r).size());
  CHECK(sizes == std::vector<size_t>{1, 4, 10, 22, 44, 84, 155});

  // sorted by length, deduplicated
  auto b4 = ll.ball(4);
  for (size_t i = 1; i < b4.size(); ++i) {
    CHECK(b4[i - 1].second <= b4[i].second);
    CHECK(!(b4[i - 1].first == b4[i].first));
  }
}

TEST_CASE("length formula equals BFS distance (radius 6 here, 8 in acceptance)") {
  for (auto wr : {lamplighter(), c2_wr_sym3()}) {
    for (const auto& [e, d] : wr.ball(6)) CHECK(wr.word_length(e, 8) == d);
  }
}

TEST_CASE("subadditivity and inverse symmetry of the length") {
  auto ll = lamplighter();
  auto ball = ll.ball(5);
  std::mt19937 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto a = random_ball_elem(ball, rng);
    auto b = random_ball_elem(ball, rng);
    long long la = ll.word_length(a), lb = ll.word_length(b);
    CHECK(ll.word_length(ll.multiply(a, b), 16) <= la + lb);
    CHECK(ll.word_length(ll.inverse(a)) == la);
  }
}

TEST_CASE("truncation escape is detected") {
  auto tiny = lamplighter(3);
  CHECK_THROWS_WITH_AS(tiny.ball(5), doctest::Contains("TruncationEscape"), Error);
}

TEST_CASE("word length with an insufficient explicit budget") {
  auto ll = lamplighter();
  WreathElement far = ll.fiber_at(Point(6LL), GroupElement(CyclicElem{1, 2}));
  CHECK_THROWS_WITH_AS(ll.word_length(far, 3), doctest::Contains("RadiusBudgetExceeded"), Error);
  CHECK(ll.word_length(far) == 13);  // 12 to visit 6 and return, plus the toggle
}

TEST_CASE("memoized fiber lengths for a non-cyclic fiber") {
  // Sym(3) has no closed-form length; the BFS memo supplies it
  WreathProduct wr(GroupSpec::sym(3), GroupAction(GroupSpec::integers(), DomainKind::IntLine),
                   Window{16, 6});
  GroupElement b(FinitePerm{{1, 2, 0}});
  GroupElement ab = compose(GroupElement(FinitePerm{{1, 0, 2}}), b);
  CHECK(wr.fiber_length(b) == 1);
  CHECK(wr.fiber_length(compose(b, b)) == 1);  // b^2 = b^-1
  CHECK(wr.fiber_length(ab) == 2);
  CHECK(wr.word_length(wr.fiber_at(Point(2LL), ab)) == 6);  // 2 + K({2},0)
}

TEST_CASE("infinite groups refuse full enumeration") {
  CHECK_THROWS_WITH_AS(FiniteGroup::enumerate(GroupSpec::integers(), 100),
                       doctest::Contains("NotFullyEnumerable"), Error);
}

TEST_CASE("bi-Lipschitz comparison Z wr Z vs Dinf wr Z") {
  auto zz = z_wr_z();
  auto dz = dinf_wr_z();

  // ({0 -> +3}, 0): length 3 maps to ({0 -> (ab)^3}, 0): length 6
  WreathElement e = zz.fiber_at(Point(0LL), GroupElement(IntElem{3}));
  CHECK(zz.word_length(e) == 3);
  WreathElement img = dz.fiber_at(Point(0LL), z_to_dinf(GroupElement(IntElem{3})));
  CHECK(dz.word_length(img) == 6);

  auto rep = zz.bilipschitz_compare(zz.ball(3), z_to_dinf, dz, 2);
  CHECK(rep.within_bounds());
  CHECK(rep.identity_pairs == 1);
  CHECK(rep.max_ratio() == doctest::Approx(2.0));
  CHECK(rep.min_ratio() >= 0.5);
}

TEST_CASE("mixed wreath kinds rejected") {
  auto ll = lamplighter();
  auto zz = z_wr_z();
  CHECK_THROWS_WITH_AS(
      ll.multiply(ll.fiber_at(Point(0LL), GroupElement(CyclicElem{1, 2})),
                  zz.fiber_at(Point(0LL), GroupElement(IntElem{1}))),
      doctest::Contains("MixedGroupKinds"), Error);
}
