// Exact dyadic rationals m / 2^e. No floating point anywhere.
#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "wrp/errors.hpp"

namespace wrp {

struct Dyadic {
  long long num = 0;  // mantissa
  int exp = 0;        // non-negative; value = num / 2^exp

  Dyadic() = default;
  Dyadic(long long n, int e) : num(n), exp(e) {
    if (e < 0) fail(errk::SchemaError, "dyadic exponent must be non-negative");
    normalize();
  }
  static Dyadic integer(long long n) { return Dyadic(n, 0); }

  // canonical: exp == 0 or num odd
  void normalize() {
    while (exp > 0 && num % 2 == 0) {
      num /= 2;
      --exp;
    }
  }

  bool is_integer() const { return exp == 0; }

  Dyadic operator+(const Dyadic& o) const {
    int e = exp > o.exp ? exp : o.exp;
    return Dyadic(shifted(e) + o.shifted(e), e);
  }
  Dyadic operator-(const Dyadic& o) const {
    int e = exp > o.exp ? exp : o.exp;
    return Dyadic(shifted(e) - o.shifted(e), e);
  }
  Dyadic operator-() const { return Dyadic(-num, exp); }
  Dyadic operator*(const Dyadic& o) const {
    __int128 p = static_cast<__int128>(num) * o.num;
    if (p > INT64_MAX || p < INT64_MIN) fail(errk::Overflow, "dyadic product overflow");
    return Dyadic(static_cast<long long>(p), exp + o.exp);
  }
  // exact multiplication by 2^k (k may be negative)
  Dyadic mul_pow2(int k) const {
    if (k >= 0) {
      __int128 p = static_cast<__int128>(num) << k;
      if (p > INT64_MAX || p < INT64_MIN) fail(errk::Overflow, "dyadic shift overflow");
      return Dyadic(static_cast<long long>(p), exp);
    }
    return Dyadic(num, exp - k);
  }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num == b.num && a.exp == b.exp;  // canonical forms
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int e = a.exp > b.exp ? a.exp : b.exp;
    return a.shifted(e) <=> b.shifted(e);
  }

  std::string str() const {
    if (exp == 0) return std::to_string(num);
    return std::to_string(num) + "/2^" + std::to_string(exp);
  }

private:
  long long shifted(int e) const {
    __int128 p = static_cast<__int128>(num) << (e - exp);
    if (p > INT64_MAX || p < INT64_MIN) fail(errk::Overflow, "dyadic rescale overflow");
    return static_cast<long long>(p);
  }
};

// largest t with 2^t dividing n (n != 0)
inline int two_adic_valuation(long long n) {
  int t = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++t;
  }
  return t;
}

}  // namespace wrp
