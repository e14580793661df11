// GroupElement: exact canonical-form element of any of the concrete groups
// the toolkit works with, as a tagged union.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wrp/errors.hpp"
#include "wrp/houghton.hpp"
#include "wrp/plmap.hpp"

namespace wrp {

struct FinitePerm {
  std::vector<int> img;  // img[i] = image of i

  static FinitePerm identity(int n);
  static FinitePerm transposition(int n, int i, int j);
  static FinitePerm cycle(int n);  // (0 1 ... n-1)
  int degree() const { return static_cast<int>(img.size()); }

  friend bool operator==(const FinitePerm&, const FinitePerm&) = default;
  friend std::strong_ordering operator<=>(const FinitePerm&, const FinitePerm&) = default;
};

struct IntElem {  // Z
  long long v = 0;
  friend bool operator==(const IntElem&, const IntElem&) = default;
  friend std::strong_ordering operator<=>(const IntElem&, const IntElem&) = default;
};

// D_inf element as the affine map x -> shift + (refl ? -x : x).
// Generators a = (refl, 0) and b = (refl, 1); <a, b | a^2, b^2>.
struct DihedralElem {
  bool refl = false;
  long long shift = 0;
  friend bool operator==(const DihedralElem&, const DihedralElem&) = default;
  friend std::strong_ordering operator<=>(const DihedralElem&, const DihedralElem&) = default;
};

struct CyclicElem {
  long long r = 0;    // residue in [0, mod)
  long long mod = 1;
  friend bool operator==(const CyclicElem&, const CyclicElem&) = default;
  friend std::strong_ordering operator<=>(const CyclicElem&, const CyclicElem&) = default;
};

class GroupElement;

struct DirectProductElem {
  std::vector<GroupElement> factors;
  friend bool operator==(const DirectProductElem&, const DirectProductElem&);
  friend std::strong_ordering operator<=>(const DirectProductElem&, const DirectProductElem&);
};

enum class ElemKind { FinitePerm, Int, Dihedral, Cyclic, Thompson, Houghton, DirectProduct };

class GroupElement {
public:
  using Storage = std::variant<FinitePerm, IntElem, DihedralElem, CyclicElem, PLMap,
                               HoughtonElement, DirectProductElem>;

  GroupElement() : v_(IntElem{0}) {}
  GroupElement(FinitePerm p) : v_(std::move(p)) {}
  GroupElement(IntElem n) : v_(n) {}
  GroupElement(DihedralElem d) : v_(d) {}
  GroupElement(CyclicElem c) : v_(normalize(c)) {}
  GroupElement(PLMap m) : v_(std::move(m)) {}
  GroupElement(HoughtonElement h) : v_(std::move(h)) {}
  GroupElement(DirectProductElem d) : v_(std::move(d)) {}

  ElemKind kind() const { return static_cast<ElemKind>(v_.index()); }

  template <class T> const T& as() const {
    if (!std::holds_alternative<T>(v_)) fail(errk::MixedGroupKinds, "unexpected element kind");
    return std::get<T>(v_);
  }
  template <class T> bool is() const { return std::holds_alternative<T>(v_); }

  bool is_identity() const;
  std::string str() const;

  friend bool operator==(const GroupElement&, const GroupElement&);
  friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&);
  bool operator<(const GroupElement& o) const { return (*this <=> o) < 0; }

  friend GroupElement compose(const GroupElement& a, const GroupElement& b);
  friend GroupElement inverse(const GroupElement& a);

private:
  static CyclicElem normalize(CyclicElem c) {
    if (c.mod <= 0) fail(errk::SchemaError, "cyclic modulus must be positive");
    c.r = ((c.r % c.mod) + c.mod) % c.mod;
    return c;
  }
  Storage v_;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

// Word length of a D_inf element over the two reflections {a, b}.
long long dinf_word_length(const DihedralElem& d);

}  // namespace wrp
