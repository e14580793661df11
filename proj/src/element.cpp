#include "wrp/element.hpp"

#include <algorithm>

namespace wrp {

FinitePerm FinitePerm::identity(int n) {
  FinitePerm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

FinitePerm FinitePerm::transposition(int n, int i, int j) {
  FinitePerm p = identity(n);
  std::swap(p.img[i], p.img[j]);
  return p;
}

FinitePerm FinitePerm::cycle(int n) {
  FinitePerm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = (i + 1) % n;
  return p;
}

bool operator==(const DirectProductElem& a, const DirectProductElem& b) {
  return a.factors == b.factors;
}
std::strong_ordering operator<=>(const DirectProductElem& a, const DirectProductElem& b) {
  size_t n = std::min(a.factors.size(), b.factors.size());
  for (size_t i = 0; i < n; ++i)
    if (auto c = a.factors[i] <=> b.factors[i]; c != 0) return c;
  return a.factors.size() <=> b.factors.size();
}

bool operator==(const GroupElement& a, const GroupElement& b) { return a.v_ == b.v_; }

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
  if (auto c = a.v_.index() <=> b.v_.index(); c != 0) return c;
  return std::visit(
      [&](const auto& x) -> std::strong_ordering {
        using T = std::decay_t<decltype(x)>;
        return x <=> std::get<T>(b.v_);
      },
      a.v_);
}

bool GroupElement::is_identity() const {
  switch (kind()) {
    case ElemKind::FinitePerm: {
      const auto& p = std::get<FinitePerm>(v_).img;
      for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
      return true;
    }
    case ElemKind::Int: return std::get<IntElem>(v_).v == 0;
    case ElemKind::Dihedral: {
      const auto& d = std::get<DihedralElem>(v_);
      return !d.refl && d.shift == 0;
    }
    case ElemKind::Cyclic: return std::get<CyclicElem>(v_).r == 0;
    case ElemKind::Thompson: return std::get<PLMap>(v_).is_identity();
    case ElemKind::Houghton: return std::get<HoughtonElement>(v_).is_identity();
    case ElemKind::DirectProduct: {
      for (const auto& f : std::get<DirectProductElem>(v_).factors)
        if (!f.is_identity()) return false;
      return true;
    }
  }
  return false;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.v_.index() != b.v_.index())
    fail(errk::MixedGroupKinds, "cannot compose " + a.str() + " with " + b.str());
  switch (a.kind()) {
    case ElemKind::FinitePerm: {
      const auto& pa = std::get<FinitePerm>(a.v_);
      const auto& pb = std::get<FinitePerm>(b.v_);
      if (pa.degree() != pb.degree()) fail(errk::MixedGroupKinds, "permutation degrees differ");
      FinitePerm r;
      r.img.resize(pa.img.size());
      for (size_t i = 0; i < pa.img.size(); ++i) r.img[i] = pa.img[pb.img[i]];
      return GroupElement(std::move(r));
    }
    case ElemKind::Int:
      return GroupElement(IntElem{std::get<IntElem>(a.v_).v + std::get<IntElem>(b.v_).v});
    case ElemKind::Dihedral: {
      const auto& da = std::get<DihedralElem>(a.v_);
      const auto& db = std::get<DihedralElem>(b.v_);
      // (a∘b)(x) = eps_a (eps_b x + n_b) + n_a
      DihedralElem r;
      r.refl = da.refl != db.refl;
      r.shift = da.shift + (da.refl ? -db.shift : db.shift);
      return GroupElement(r);
    }
    case ElemKind::Cyclic: {
      const auto& ca = std::get<CyclicElem>(a.v_);
      const auto& cb = std::get<CyclicElem>(b.v_);
      if (ca.mod != cb.mod) fail(errk::MixedGroupKinds, "cyclic moduli differ");
      return GroupElement(CyclicElem{ca.r + cb.r, ca.mod});
    }
    case ElemKind::Thompson:
      return GroupElement(compose(std::get<PLMap>(a.v_), std::get<PLMap>(b.v_)));
    case ElemKind::Houghton:
      return GroupElement(compose(std::get<HoughtonElement>(a.v_), std::get<HoughtonElement>(b.v_)));
    case ElemKind::DirectProduct: {
      const auto& fa = std::get<DirectProductElem>(a.v_).factors;
      const auto& fb = std::get<DirectProductElem>(b.v_).factors;
      if (fa.size() != fb.size()) fail(errk::MixedGroupKinds, "product arities differ");
      DirectProductElem r;
      r.factors.reserve(fa.size());
      for (size_t i = 0; i < fa.size(); ++i) r.factors.push_back(compose(fa[i], fb[i]));
      return GroupElement(std::move(r));
    }
  }
  fail(errk::MixedGroupKinds, "unreachable");
}

GroupElement inverse(const GroupElement& a) {
  switch (a.kind()) {
    case ElemKind::FinitePerm: {
      const auto& p = std::get<FinitePerm>(a.v_);
      FinitePerm r;
      r.img.resize(p.img.size());
      for (size_t i = 0; i < p.img.size(); ++i) r.img[p.img[i]] = static_cast<int>(i);
      return GroupElement(std::move(r));
    }
    case ElemKind::Int: return GroupElement(IntElem{-std::get<IntElem>(a.v_).v});
    case ElemKind::Dihedral: {
      const auto& d = std::get<DihedralElem>(a.v_);
      // inverse of x -> eps x + n is x -> eps x - eps n
      return GroupElement(DihedralElem{d.refl, d.refl ? d.shift : -d.shift});
    }
    case ElemKind::Cyclic: {
      const auto& c = std::get<CyclicElem>(a.v_);
      return GroupElement(CyclicElem{-c.r, c.mod});
    }
    case ElemKind::Thompson: return GroupElement(std::get<PLMap>(a.v_).inverse());
    case ElemKind::Houghton: return GroupElement(std::get<HoughtonElement>(a.v_).inverse());
    case ElemKind::DirectProduct: {
      DirectProductElem r;
      for (const auto& f : std::get<DirectProductElem>(a.v_).factors)
        r.factors.push_back(inverse(f));
      return GroupElement(std::move(r));
    }
  }
  fail(errk::MixedGroupKinds, "unreachable");
}

long long dinf_word_length(const DihedralElem& d) {
  if (!d.refl) return 2 * std::abs(d.shift);  // (ab)^±k
  // reflections: x -> n - x; a(ba)^k has n = -k, b(ab)^(k-1) has n = k
  return d.shift >= 1 ? 2 * d.shift - 1 : 2 * (-d.shift) + 1;
}

std::string GroupElement::str() const {
  switch (kind()) {
    case ElemKind::FinitePerm: {
      std::string s = "perm[";
      const auto& p = std::get<FinitePerm>(v_).img;
      for (size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
      return s + "]";
    }
    case ElemKind::Int: return std::to_string(std::get<IntElem>(v_).v);
    case ElemKind::Dihedral: {
      const auto& d = std::get<DihedralElem>(v_);
      return std::string(d.refl ? "refl" : "tr") + "(" + std::to_string(d.shift) + ")";
    }
    case ElemKind::Cyclic: {
      const auto& c = std::get<CyclicElem>(v_);
      return std::to_string(c.r) + " mod " + std::to_string(c.mod);
    }
    case ElemKind::Thompson: return std::get<PLMap>(v_).str();
    case ElemKind::Houghton: return std::get<HoughtonElement>(v_).str();
    case ElemKind::DirectProduct: {
      std::string s = "(";
      const auto& f = std::get<DirectProductElem>(v_).factors;
      for (size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + f[i].str();
      return s + ")";
    }
  }
  return "?";
}

}  // namespace wrp
