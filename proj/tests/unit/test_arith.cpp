#include "doctest.h"
#include "kst/linalg.hpp"
#include "kst/mpoly.hpp"
#include "kst/ratfunc.hpp"

using namespace kst;

TEST_CASE("mpoly basics") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = x * x - y * y;
  MPoly d = x - y;
  auto q = p.divide_exact(d);
  REQUIRE(q.has_value());
  CHECK(*q == x + y);
  CHECK(!(x * x + y).divide_exact(d).has_value());
  CHECK(p.total_degree() == 2);
  CHECK(p.str({"x", "y"}) == "x^2 - y^2");
}

TEST_CASE("mpoly gcd") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly one = MPoly::constant(2, Rat(1));
  MPoly a = (x + y) * (x - y);
  MPoly b = (x + y) * (x + y) * x;
  MPoly g = MPoly::gcd(a, b);
  CHECK(g == x + y);
  CHECK(MPoly::gcd(x, y) == one);
  // univariate: (t^2-1, t^2-2t+1) -> t-1
  MPoly t = MPoly::variable(1, 0);
  MPoly u = t * t - MPoly::constant(1, Rat(1));
  MPoly v = t * t - t * Rat(2) + MPoly::constant(1, Rat(1));
  CHECK(MPoly::gcd(u, v) == t - MPoly::constant(1, Rat(1)));
}

TEST_CASE("ratfunc canonical form") {
  MPoly t = MPoly::variable(1, 0);
  MPoly one = MPoly::constant(1, Rat(1));
  RatFn f(t * t - one, t - one);  // reduces to t + 1
  CHECK(f.is_polynomial());
  CHECK(f.num() == t + one);
  RatFn g = RatFn(one) / RatFn(t);
  RatFn h = g + RatFn(t);
  CHECK(h.num() == t * t + one);
  CHECK(h.den() == t);
  CHECK((h - h).is_zero());
  CHECK(h * RatFn(t) == RatFn(t * t + one));
}

TEST_CASE("linear solve and invert") {
  Mat<Rat> A(2, 2, Rat(0));
  A(0, 0) = Rat(2);
  A(0, 1) = Rat(1);
  A(1, 0) = Rat(1);
  A(1, 1) = Rat(1);
  auto inv = invert(A, Rat(0), Rat(1));
  REQUIRE(inv.has_value());
  CHECK((*inv)(0, 0) == Rat(1));
  CHECK((*inv)(0, 1) == Rat(-1));
  auto x = solve_linear(A, std::vector<Rat>{Rat(3), Rat(2)}, Rat(0));
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(1));
}
