#include "kst/ratfunc.hpp"

#include <cassert>
#include <stdexcept>

namespace kst {

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(num_.nvars(), Rat(1));
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  Rat lc = den_.lead_coeff();
  if (lc != 1) {
    Rat inv = Rat(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rat RatFn::as_rat() const {
  assert(is_constant());
  return num_.constant_term() / den_.constant_term();
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFn(num_ + o.num_, den_);
  return RatFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
  if (is_zero() || o.is_zero()) return RatFn(nvars());
  return RatFn(num_ * o.num_, den_ * o.den_);
}

RatFn RatFn::operator/(const RatFn& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  if (is_zero()) return RatFn(nvars());
  return RatFn(num_ * o.den_, den_ * o.num_);
}

RatFn RatFn::pow(int e) const {
  if (e < 0) return RatFn::constant(nvars(), Rat(1)) / pow(-e);
  RatFn r = RatFn::constant(nvars(), Rat(1));
  RatFn b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

RatFn RatFn::substitute(int idx, const MPoly& value) const {
  std::vector<MPoly> subs;
  for (int i = 0; i < nvars(); ++i)
    subs.push_back(i == idx ? value : MPoly::variable(nvars(), i));
  MPoly d = den_.substitute(subs);
  if (d.is_zero()) throw std::domain_error("substitution makes denominator vanish");
  return RatFn(num_.substitute(subs), d);
}

std::string RatFn::str(const std::vector<std::string>& names) const {
  if (is_polynomial()) {
    if (den_.constant_term() == 1) return num_.str(names);
    // pull the rational scalar of a constant denominator into the numerator
    return (num_ * (Rat(1) / den_.constant_term())).str(names);
  }
  std::string n = num_.str(names);
  std::string d = den_.str(names);
  bool npar = num_.terms().size() > 1;
  std::string r = npar ? "(" + n + ")" : n;
  r += "/(" + d + ")";
  return r;
}

}  // namespace kst
