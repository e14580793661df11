// Points of the G-sets the toolkit acts on.
#pragma once

#include <compare>
#include <string>
#include <variant>

#include "wrp/dyadic.hpp"
#include "wrp/element.hpp"
#include "wrp/houghton.hpp"

namespace wrp {

// long long covers finite index sets and the integer line; GroupElement is
// used by regular actions (the group acting on itself).
class Point {
public:
  using Storage = std::variant<long long, Dyadic, OmegaPoint, GroupElement>;

  Point() : v_(0LL) {}
  Point(long long i) : v_(i) {}
  Point(Dyadic d) : v_(d) {}
  Point(OmegaPoint p) : v_(p) {}
  Point(GroupElement g) : v_(std::move(g)) {}

  template <class T> const T& as() const {
    if (!std::holds_alternative<T>(v_)) fail(errk::PointOutOfDomain, "unexpected point kind");
    return std::get<T>(v_);
  }
  template <class T> bool is() const { return std::holds_alternative<T>(v_); }

  friend bool operator==(const Point& a, const Point& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.v_.index() <=> b.v_.index(); c != 0) return c;
    return std::visit(
        [&](const auto& x) -> std::strong_ordering {
          using T = std::decay_t<decltype(x)>;
          return x <=> std::get<T>(b.v_);
        },
        a.v_);
  }
  bool operator<(const Point& o) const { return (*this <=> o) < 0; }

  std::string str() const {
    if (is<long long>()) return std::to_string(as<long long>());
    if (is<Dyadic>()) return as<Dyadic>().str();
    if (is<OmegaPoint>()) return as<OmegaPoint>().str();
    return as<GroupElement>().str();
  }

private:
  Storage v_;
};

}  // namespace wrp
