// Freely reduced words over named generator symbols.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wrp/element.hpp"

namespace wrp {

struct Syllable {
  std::string sym;
  bool inv = false;
  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend std::strong_ordering operator<=>(const Syllable&, const Syllable&) = default;
};

class Word {
public:
  Word() = default;
  explicit Word(std::vector<Syllable> s) {
    for (auto& x : s) push(std::move(x));
  }
  static Word gen(const std::string& sym, bool inv = false) { return Word({{sym, inv}}); }

  void push(Syllable s) {
    if (!syl_.empty() && syl_.back().sym == s.sym && syl_.back().inv != s.inv)
      syl_.pop_back();
    else
      syl_.push_back(std::move(s));
  }

  Word operator*(const Word& o) const {
    Word r = *this;
    for (const auto& s : o.syl_) r.push(s);
    return r;
  }
  Word inverse() const {
    Word r;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back({it->sym, !it->inv});
    return r;
  }

  bool empty() const { return syl_.empty(); }
  size_t size() const { return syl_.size(); }
  const std::vector<Syllable>& syllables() const { return syl_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.syl_ <=> b.syl_;
  }

  std::string str() const {
    if (syl_.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < syl_.size(); ++i) {
      if (i) s += " ";
      s += syl_[i].sym;
      if (syl_[i].inv) s += "^-1";
    }
    return s;
  }

private:
  std::vector<Syllable> syl_;  // freely reduced
};

// [x, y] = x y x^-1 y^-1
inline Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

// Evaluate over any group-like Ops: Ops::Elem, ops.mul, ops.inv, ops.id().
template <class Ops>
typename Ops::Elem evaluate_word(const Word& w, const Ops& ops,
                                 const std::map<std::string, typename Ops::Elem>& asgn) {
  auto acc = ops.id();
  for (const auto& s : w.syllables()) {
    auto it = asgn.find(s.sym);
    if (it == asgn.end()) fail(errk::UnboundSymbol, "symbol '" + s.sym + "' not assigned");
    acc = ops.mul(acc, s.inv ? ops.inv(it->second) : it->second);
  }
  return acc;
}

struct GroupOps {
  using Elem = GroupElement;
  GroupElement identity;
  const GroupElement& id() const { return identity; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const { return compose(a, b); }
  GroupElement inv(const GroupElement& a) const { return inverse(a); }
};

inline GroupElement evaluate_word(const Word& w, const GroupElement& identity,
                                  const std::map<std::string, GroupElement>& asgn) {
  return evaluate_word(w, GroupOps{identity}, asgn);
}

}  // namespace wrp
