#include "wrp/action.hpp"

#include <algorithm>

namespace wrp {

GroupSpec GroupSpec::sym(int n) {
  GroupSpec s;
  s.kind = GroupKind::Sym;
  s.degree = n;
  return s;
}

GroupSpec GroupSpec::perm(int degree, std::vector<NamedGen> gens) {
  GroupSpec s;
  s.kind = GroupKind::Perm;
  s.degree = degree;
  for (const auto& g : gens)
    if (g.g.as<FinitePerm>().degree() != degree)
      fail(errk::SchemaError, "perm generator degree mismatch");
  s.custom = std::move(gens);
  return s;
}

GroupSpec GroupSpec::cyclic(long long m) {
  GroupSpec s;
  s.kind = GroupKind::Cyclic;
  s.modulus = m;
  return s;
}

GroupSpec GroupSpec::integers() {
  GroupSpec s;
  s.kind = GroupKind::Int;
  return s;
}

GroupSpec GroupSpec::dihedral_inf() {
  GroupSpec s;
  s.kind = GroupKind::DihedralInf;
  return s;
}

GroupSpec GroupSpec::thompson_f() {
  GroupSpec s;
  s.kind = GroupKind::ThompsonF;
  return s;
}

GroupSpec GroupSpec::houghton(int rays) {
  if (rays < 2) fail(errk::SchemaError, "houghton needs at least 2 rays");
  GroupSpec s;
  s.kind = GroupKind::Houghton;
  s.rays = rays;
  return s;
}

GroupElement GroupSpec::identity() const {
  switch (kind) {
    case GroupKind::Sym:
    case GroupKind::Perm: return GroupElement(FinitePerm::identity(degree));
    case GroupKind::Cyclic: return GroupElement(CyclicElem{0, modulus});
    case GroupKind::Int: return GroupElement(IntElem{0});
    case GroupKind::DihedralInf: return GroupElement(DihedralElem{false, 0});
    case GroupKind::ThompsonF: return GroupElement(PLMap::identity());
    case GroupKind::Houghton: return GroupElement(HoughtonElement::identity(rays));
    case GroupKind::Product: {
      DirectProductElem e;
      for (const auto& f : factors) e.factors.push_back(f.identity());
      return GroupElement(std::move(e));
    }
  }
  fail(errk::SchemaError, "unreachable");
}

std::vector<NamedGen> GroupSpec::generators() const {
  switch (kind) {
    case GroupKind::Sym: {
      std::vector<NamedGen> g;
      if (degree >= 2) g.push_back({"a", GroupElement(FinitePerm::transposition(degree, 0, 1))});
      if (degree >= 3) g.push_back({"b", GroupElement(FinitePerm::cycle(degree))});
      return g;
    }
    case GroupKind::Perm: return custom;
    case GroupKind::Cyclic:
      if (modulus == 1) return {};
      return {{"t", GroupElement(CyclicElem{1, modulus})}};
    case GroupKind::Int: return {{"t", GroupElement(IntElem{1})}};
    case GroupKind::DihedralInf:
      return {{"a", GroupElement(DihedralElem{true, 0})}, {"b", GroupElement(DihedralElem{true, 1})}};
    case GroupKind::ThompsonF:
      return {{"x0", GroupElement(PLMap::x0())}, {"x1", GroupElement(PLMap::x1())}};
    case GroupKind::Houghton: {
      std::vector<NamedGen> g;
      for (int i = 2; i <= rays; ++i)
        g.push_back({"g" + std::to_string(i), GroupElement(HoughtonElement::transfer(rays, i))});
      return g;
    }
    case GroupKind::Product: {
      // factor k generator x becomes (1,..,x,..,1) named "k.x"
      std::vector<NamedGen> g;
      for (size_t k = 0; k < factors.size(); ++k) {
        for (const auto& fg : factors[k].generators()) {
          DirectProductElem e;
          for (size_t j = 0; j < factors.size(); ++j)
            e.factors.push_back(j == k ? fg.g : factors[j].identity());
          g.push_back({std::to_string(k) + "." + fg.name, GroupElement(std::move(e))});
        }
      }
      return g;
    }
  }
  fail(errk::SchemaError, "unreachable");
}

std::vector<std::pair<Syllable, GroupElement>> GroupSpec::symmetric_generators() const {
  std::vector<std::pair<Syllable, GroupElement>> out;
  auto gens = generators();
  for (const auto& g : gens) out.push_back({{g.name, false}, g.g});
  for (const auto& g : gens) {
    GroupElement gi = inverse(g.g);
    if (gi == g.g) continue;  // involution
    out.push_back({{g.name, true}, gi});
  }
  return out;
}

std::optional<unsigned long long> GroupSpec::order() const {
  switch (kind) {
    case GroupKind::Sym: {
      unsigned long long f = 1;
      for (int i = 2; i <= degree; ++i) f *= i;
      return f;
    }
    case GroupKind::Cyclic: return static_cast<unsigned long long>(modulus);
    case GroupKind::Product: {
      unsigned long long f = 1;
      for (const auto& x : factors) {
        auto o = x.order();
        if (!o) return std::nullopt;
        f *= *o;
      }
      return f;
    }
    default: return std::nullopt;  // Perm: finite but not known without closure
  }
}

std::optional<long long> GroupSpec::closed_form_length(const GroupElement& g) const {
  switch (kind) {
    case GroupKind::Int: return std::abs(g.as<IntElem>().v);
    case GroupKind::DihedralInf: return dinf_word_length(g.as<DihedralElem>());
    case GroupKind::Cyclic: {
      long long r = g.as<CyclicElem>().r;
      return std::min(r, modulus - r);
    }
    default: return std::nullopt;
  }
}

std::string GroupSpec::name() const {
  switch (kind) {
    case GroupKind::Sym: return "sym" + std::to_string(degree);
    case GroupKind::Perm: return "perm" + std::to_string(degree);
    case GroupKind::Cyclic: return "c" + std::to_string(modulus);
    case GroupKind::Int: return "z";
    case GroupKind::DihedralInf: return "dinf";
    case GroupKind::ThompsonF: return "thompson_f";
    case GroupKind::Houghton: return "houghton" + std::to_string(rays);
    case GroupKind::Product: {
      std::string s;
      for (size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i].name();
      return s;
    }
  }
  return "?";
}

GroupAction::GroupAction(GroupSpec g, DomainKind d) : group_(std::move(g)), domain_(d) {
  switch (d) {
    case DomainKind::FiniteSet:
      if (group_.kind != GroupKind::Sym && group_.kind != GroupKind::Perm &&
          group_.kind != GroupKind::Cyclic)
        fail(errk::SchemaError, "finite point set needs a permutation or cyclic group");
      break;
    case DomainKind::IntLine:
      if (group_.kind != GroupKind::Int && group_.kind != GroupKind::DihedralInf)
        fail(errk::SchemaError, "integer line needs Z or D_inf");
      break;
    case DomainKind::Dyadics:
      if (group_.kind != GroupKind::ThompsonF)
        fail(errk::SchemaError, "dyadic domain needs Thompson F");
      break;
    case DomainKind::Omega:
      if (group_.kind != GroupKind::Houghton)
        fail(errk::SchemaError, "ray domain needs a Houghton group");
      break;
    case DomainKind::Regular: break;
  }
}

void GroupAction::check_domain(const Point& x) const {
  switch (domain_) {
    case DomainKind::FiniteSet: {
      long long i = x.as<long long>();
      int n = group_.kind == GroupKind::Cyclic ? static_cast<int>(group_.modulus) : group_.degree;
      if (i < 0 || i >= n)
        fail(errk::PointOutOfDomain, "point " + x.str() + " outside {0..." + std::to_string(n - 1) + "}");
      break;
    }
    case DomainKind::IntLine: x.as<long long>(); break;
    case DomainKind::Dyadics: {
      const Dyadic& d = x.as<Dyadic>();
      if (!(Dyadic(0, 0) < d && d < Dyadic(1, 0)))
        fail(errk::PointOutOfDomain, "dyadic point " + d.str() + " outside (0,1)");
      break;
    }
    case DomainKind::Omega: {
      const OmegaPoint& p = x.as<OmegaPoint>();
      if (p.ray < 1 || p.ray > group_.rays || p.k < 0)
        fail(errk::PointOutOfDomain, "point " + p.str() + " outside Omega");
      break;
    }
    case DomainKind::Regular: x.as<GroupElement>(); break;
  }
}

Point GroupAction::act(const GroupElement& g, const Point& x) const {
  check_domain(x);
  switch (domain_) {
    case DomainKind::FiniteSet: {
      long long i = x.as<long long>();
      if (group_.kind == GroupKind::Cyclic)
        return Point((i + g.as<CyclicElem>().r) % group_.modulus);
      return Point(static_cast<long long>(g.as<FinitePerm>().img[i]));
    }
    case DomainKind::IntLine: {
      long long i = x.as<long long>();
      if (group_.kind == GroupKind::Int) return Point(i + g.as<IntElem>().v);
      const auto& d = g.as<DihedralElem>();
      return Point(d.shift + (d.refl ? -i : i));
    }
    case DomainKind::Dyadics: return Point(g.as<PLMap>().eval(x.as<Dyadic>()));
    case DomainKind::Omega: return Point(g.as<HoughtonElement>().eval(x.as<OmegaPoint>()));
    case DomainKind::Regular: return Point(compose(g, x.as<GroupElement>()));
  }
  fail(errk::SchemaError, "unreachable");
}

Point GroupAction::base_point() const {
  switch (domain_) {
    case DomainKind::FiniteSet:
    case DomainKind::IntLine: return Point(0LL);
    case DomainKind::Dyadics: return Point(Dyadic(1, 1));  // 1/2
    case DomainKind::Omega: return Point(OmegaPoint{1, 0});
    case DomainKind::Regular: return Point(group_.identity());
  }
  fail(errk::SchemaError, "unreachable");
}

bool GroupAction::in_window(const Point& x, const Window& w) const {
  switch (domain_) {
    case DomainKind::FiniteSet: return true;  // finite domains are whole
    case DomainKind::IntLine: {
      long long i = x.as<long long>();
      return -w.bound <= i && i <= w.bound;
    }
    case DomainKind::Dyadics: {
      const Dyadic& d = x.as<Dyadic>();
      return Dyadic(0, 0) < d && d < Dyadic(1, 0) && d.exp <= w.max_exponent;
    }
    case DomainKind::Omega: return x.as<OmegaPoint>().k <= w.bound;
    case DomainKind::Regular: return true;  // bounded by exploration radius instead
  }
  return false;
}

std::vector<Point> GroupAction::window_points(const Window& w) const {
  std::vector<Point> pts;
  switch (domain_) {
    case DomainKind::FiniteSet: {
      int n = group_.kind == GroupKind::Cyclic ? static_cast<int>(group_.modulus) : group_.degree;
      for (long long i = 0; i < n; ++i) pts.push_back(Point(i));
      break;
    }
    case DomainKind::IntLine:
      for (long long i = -w.bound; i <= w.bound; ++i) pts.push_back(Point(i));
      break;
    case DomainKind::Dyadics:
      for (int e = 1; e <= w.max_exponent; ++e)
        for (long long m = 1; m < (1LL << e); m += 2) pts.push_back(Point(Dyadic(m, e)));
      std::sort(pts.begin(), pts.end());
      break;
    case DomainKind::Omega:
      for (int r = 1; r <= group_.rays; ++r)
        for (long long k = 0; k <= w.bound; ++k) pts.push_back(Point(OmegaPoint{r, k}));
      break;
    case DomainKind::Regular:
      fail(errk::Unsupported, "cannot enumerate a regular domain window; explore a fragment");
  }
  return pts;
}

std::string GroupAction::domain_name() const {
  switch (domain_) {
    case DomainKind::FiniteSet: return "natural";
    case DomainKind::IntLine: return "line";
    case DomainKind::Dyadics: return "dyadic";
    case DomainKind::Omega: return "omega";
    case DomainKind::Regular: return "regular";
  }
  return "?";
}

}  // namespace wrp
