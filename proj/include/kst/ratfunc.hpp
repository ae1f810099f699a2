#pragma once

#include <string>

#include "kst/mpoly.hpp"

namespace kst {

// Rational function num/den with den monic (graded-lex leading coefficient 1)
// and gcd(num, den) = 1.
class RatFn {
 public:
  RatFn() : num_(0), den_(MPoly::constant(0, Rat(1))) {}
  explicit RatFn(int nvars)
      : num_(nvars), den_(MPoly::constant(nvars, Rat(1))) {}
  RatFn(MPoly num, MPoly den);
  explicit RatFn(const MPoly& p) : num_(p), den_(MPoly::constant(p.nvars(), Rat(1))) {}

  static RatFn constant(int nvars, const Rat& c) {
    return RatFn(MPoly::constant(nvars, c));
  }
  static RatFn variable(int nvars, int idx) {
    return RatFn(MPoly::variable(nvars, idx));
  }

  int nvars() const { return num_.nvars(); }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat as_rat() const;  // requires is_constant()

  RatFn operator-() const;
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn operator/(const RatFn& o) const;
  RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
  RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
  RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
  RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
  bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFn& o) const { return !(*this == o); }
  bool operator<(const RatFn& o) const {
    if (num_ < o.num_) return true;
    if (o.num_ < num_) return false;
    return den_ < o.den_;
  }

  RatFn pow(int e) const;

  // substitute variable idx by polynomial value (same variable space)
  RatFn substitute(int idx, const MPoly& value) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();
  MPoly num_, den_;
};

}  // namespace kst
