// Group descriptors, point domains, and computable actions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wrp/element.hpp"
#include "wrp/point.hpp"
#include "wrp/word.hpp"

namespace wrp {

enum class GroupKind { Sym, Perm, Cyclic, Int, DihedralInf, ThompsonF, Houghton, Product };

struct NamedGen {
  std::string name;
  GroupElement g;
};

class GroupSpec {
public:
  GroupKind kind = GroupKind::Int;
  int degree = 0;       // Sym / Perm
  long long modulus = 0;  // Cyclic
  int rays = 0;         // Houghton
  std::vector<NamedGen> custom;  // Perm
  std::vector<GroupSpec> factors;  // Product

  static GroupSpec sym(int n);
  static GroupSpec perm(int degree, std::vector<NamedGen> gens);
  static GroupSpec cyclic(long long m);
  static GroupSpec integers();
  static GroupSpec dihedral_inf();
  static GroupSpec thompson_f();
  static GroupSpec houghton(int rays);

  GroupElement identity() const;
  // generating set, without formal inverses
  std::vector<NamedGen> generators() const;
  // with formal inverses appended (self-inverse generators not duplicated)
  std::vector<std::pair<Syllable, GroupElement>> symmetric_generators() const;

  std::optional<unsigned long long> order() const;  // nullopt: infinite or unknown
  // exact word length over the standard generators, where a closed form
  // exists (Int, DihedralInf, Cyclic); nullopt otherwise
  std::optional<long long> closed_form_length(const GroupElement& g) const;

  std::string name() const;
};

enum class DomainKind { FiniteSet, IntLine, Dyadics, Omega, Regular };

// Truncation window for infinite domains: |x| <= bound on the line,
// coordinate <= bound on rays, exponent <= max_exponent for dyadics.
struct Window {
  long long bound = 32;
  int max_exponent = 6;
};

class GroupAction {
public:
  GroupAction() = default;
  GroupAction(GroupSpec g, DomainKind d);

  const GroupSpec& group() const { return group_; }
  DomainKind domain() const { return domain_; }

  Point act(const GroupElement& g, const Point& x) const;
  Point base_point() const;
  bool in_window(const Point& x, const Window& w) const;
  // deterministic enumeration of the window
  std::vector<Point> window_points(const Window& w) const;

  std::string domain_name() const;

private:
  GroupSpec group_;
  DomainKind domain_ = DomainKind::FiniteSet;
  void check_domain(const Point& x) const;
};

}  // namespace wrp
