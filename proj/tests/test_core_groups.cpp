#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "wrp/action.hpp"
#include "wrp/element.hpp"
#include "wrp/word.hpp"

using namespace wrp;

namespace {

// random product of generators, for property sampling
GroupElement random_element(const GroupSpec& spec, std::mt19937& rng, int max_len = 6) {
  auto gens = spec.symmetric_generators();
  GroupElement acc = spec.identity();
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) acc = compose(acc, gens[rng() % gens.size()].second);
  return acc;
}

std::vector<GroupSpec> sample_specs() {
  return {GroupSpec::sym(3),        GroupSpec::sym(4),     GroupSpec::cyclic(6),
          GroupSpec::integers(),    GroupSpec::dihedral_inf(), GroupSpec::thompson_f(),
          GroupSpec::houghton(3)};
}

}  // namespace

TEST_CASE("identity and inverse laws per concrete group") {
  std::mt19937 rng(12345);
  for (const auto& spec : sample_specs()) {
    GroupElement id = spec.identity();
    CHECK(id.is_identity());
    for (int i = 0; i < 30; ++i) {
      GroupElement a = random_element(spec, rng);
      CHECK(compose(id, a) == a);
      CHECK(compose(a, id) == a);
      CHECK(compose(a, inverse(a)) == id);
      CHECK(compose(inverse(a), a) == id);
    }
  }
}

TEST_CASE("associativity on sampled triples") {
  std::mt19937 rng(777);
  for (const auto& spec : sample_specs()) {
    for (int i = 0; i < 20; ++i) {
      GroupElement a = random_element(spec, rng);
      GroupElement b = random_element(spec, rng);
      GroupElement c = random_element(spec, rng);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
  }
}

TEST_CASE("mixed kinds are rejected") {
  GroupElement z = GroupSpec::integers().identity();
  GroupElement p = GroupSpec::sym(3).identity();
  CHECK_THROWS_WITH_AS(compose(z, p), doctest::Contains("MixedGroupKinds"), Error);
}

TEST_CASE("dihedral involutions and closed-form length") {
  GroupElement a(DihedralElem{true, 0});
  GroupElement b(DihedralElem{true, 1});
  CHECK(compose(a, a).is_identity());
  CHECK(compose(b, b).is_identity());

  // closed form vs BFS over {a, b}
  std::map<GroupElement, long long> dist;
  GroupElement id(DihedralElem{false, 0});
  dist[id] = 0;
  std::vector<GroupElement> frontier{id};
  for (int r = 1; r <= 11; ++r) {
    std::vector<GroupElement> next;
    for (const auto& g : frontier)
      for (const auto& s : {a, b}) {
        GroupElement h = compose(g, s);
        if (dist.emplace(h, r).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  for (const auto& [g, d] : dist) CHECK(dinf_word_length(g.as<DihedralElem>()) == d);
  CHECK(dist.size() == 23);  // 2r+1 elements within radius r on the D_inf line
}

TEST_CASE("thompson generators and action") {
  GroupAction act(GroupSpec::thompson_f(), DomainKind::Dyadics);
  Point half(Dyadic(1, 1));
  GroupElement id = GroupSpec::thompson_f().identity();
  CHECK(act.act(id, half) == half);

  GroupElement x0(PLMap::x0());
  CHECK(act.act(x0, half) == Point(Dyadic(1, 2)));  // x0(1/2) = 1/4
  CHECK(compose(x0, inverse(x0)).is_identity());

  // composition preserves the PLMap invariants (constructor revalidates),
  // order preservation, and images stay dyadic in (0,1)
  std::mt19937 rng(99);
  Window w{32, 6};
  auto pts = act.window_points(w);
  for (int i = 0; i < 40; ++i) {
    GroupElement g = random_element(GroupSpec::thompson_f(), rng, 5);
    const Dyadic a = pts[rng() % pts.size()].as<Dyadic>();
    const Dyadic b = pts[rng() % pts.size()].as<Dyadic>();
    Dyadic ga = g.as<PLMap>().eval(a);
    Dyadic gb = g.as<PLMap>().eval(b);
    CHECK((a < b) == (ga < gb));
    CHECK(Dyadic(0, 0) < ga);
    CHECK(ga < Dyadic(1, 0));
  }
}

TEST_CASE("houghton eventual translation and balance invariant") {
  GroupSpec h3 = GroupSpec::houghton(3);
  GroupAction act(h3, DomainKind::Omega);

  // element translating ray 1 by +1 and ray 2 by -1 (the inverse of g2)
  GroupElement g = inverse(GroupElement(HoughtonElement::transfer(3, 2)));
  CHECK(act.act(g, Point(OmegaPoint{1, 5})) == Point(OmegaPoint{1, 6}));

  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    GroupElement x = random_element(h3, rng);
    const auto& he = x.as<HoughtonElement>();
    long long sum = 0;
    for (long long o : he.offsets()) sum += o;
    CHECK(sum == 0);
  }
}

TEST_CASE("action axioms on sampled data") {
  std::mt19937 rng(31337);
  struct Case {
    GroupSpec g;
    DomainKind d;
  };
  std::vector<Case> cases{{GroupSpec::sym(4), DomainKind::FiniteSet},
                          {GroupSpec::integers(), DomainKind::IntLine},
                          {GroupSpec::thompson_f(), DomainKind::Dyadics},
                          {GroupSpec::houghton(3), DomainKind::Omega},
                          {GroupSpec::sym(3), DomainKind::Regular}};
  for (const auto& c : cases) {
    GroupAction act(c.g, c.d);
    Window w{8, 5};
    std::vector<Point> pts = c.d == DomainKind::Regular
                                 ? std::vector<Point>{Point(c.g.identity())}
                                 : act.window_points(w);
    for (int i = 0; i < 25; ++i) {
      GroupElement g = random_element(c.g, rng, 4);
      GroupElement h = random_element(c.g, rng, 4);
      const Point& x = pts[rng() % pts.size()];
      CHECK(act.act(c.g.identity(), x) == x);
      CHECK(act.act(compose(g, h), x) == act.act(g, act.act(h, x)));
    }
  }
}

TEST_CASE("point out of domain") {
  GroupAction act(GroupSpec::sym(3), DomainKind::FiniteSet);
  CHECK_THROWS_WITH_AS(act.act(GroupSpec::sym(3).identity(), Point(5LL)),
                       doctest::Contains("PointOutOfDomain"), Error);
}

TEST_CASE("evaluate_word") {
  GroupElement id = GroupSpec::cyclic(2).identity();
  std::map<std::string, GroupElement> asgn{{"t", GroupElement(CyclicElem{1, 2})}};

  CHECK(evaluate_word(Word(), id, asgn) == id);
  CHECK(evaluate_word(Word::gen("t") * Word::gen("t"), id, asgn) == id);
  CHECK_THROWS_WITH_AS(evaluate_word(Word::gen("u"), id, asgn),
                       doctest::Contains("UnboundSymbol"), Error);

  // commutator of commuting elements
  GroupSpec c6 = GroupSpec::cyclic(6);
  std::map<std::string, GroupElement> ab{{"a", GroupElement(CyclicElem{2, 6})},
                                         {"b", GroupElement(CyclicElem{3, 6})}};
  CHECK(evaluate_word(commutator(Word::gen("a"), Word::gen("b")), c6.identity(), ab) ==
        c6.identity());
}

TEST_CASE("word free reduction") {
  Word w = Word::gen("a") * Word::gen("b") * Word::gen("b", true) * Word::gen("a", true);
  CHECK(w.empty());
  Word c = commutator(Word::gen("x"), Word::gen("y"));
  CHECK(c.size() == 4);
  CHECK((c * c.inverse()).empty());
}

TEST_CASE("houghton inverse round-trips pointwise") {
  std::mt19937 rng(4242);
  GroupSpec h3 = GroupSpec::houghton(3);
  for (int i = 0; i < 20; ++i) {
    GroupElement g = random_element(h3, rng, 6);
    GroupElement gi = inverse(g);
    for (int r = 1; r <= 3; ++r)
      for (long long k = 0; k <= 12; ++k) {
        OmegaPoint p{r, k};
        CHECK(gi.as<HoughtonElement>().eval(g.as<HoughtonElement>().eval(p)) == p);
      }
  }
}
