#include "doctest.h"
#include "kst/symfunc.hpp"

using namespace kst::symfunc;
using kst::Rat;
using kst::shapes::Partition;

namespace {
SymFunc gen(Basis b, std::initializer_list<int> parts) {
  return SymFunc::generator(b, Partition(parts));
}
QT qt(long v) { return qt_int(v); }
}  // namespace

TEST_CASE("classical conversions") {
  // s_111 = h_111 - 2 h_21 + h_3
  SymFunc f = convert(gen(Basis::s, {1, 1, 1}), Basis::h);
  CHECK(f.coeff(Partition{1, 1, 1}) == qt(1));
  CHECK(f.coeff(Partition{2, 1}) == qt(-2));
  CHECK(f.coeff(Partition{3}) == qt(1));
  // h_r = sum over partitions of r of m_la
  SymFunc h4 = convert(gen(Basis::h, {4}), Basis::m);
  for (auto& la : partitions_of_degree(4)) CHECK(h4.coeff(la) == qt(1));
  // p expansions of Schur functions for n = 3
  SymFunc p111 = convert(gen(Basis::s, {1, 1, 1}), Basis::p);
  CHECK(p111.coeff(Partition{1, 1, 1}) == qt_rat(Rat(1, 6)));
  CHECK(p111.coeff(Partition{2, 1}) == qt_rat(Rat(-1, 2)));
  CHECK(p111.coeff(Partition{3}) == qt_rat(Rat(1, 3)));
  SymFunc p21 = convert(gen(Basis::s, {2, 1}), Basis::p);
  CHECK(p21.coeff(Partition{1, 1, 1}) == qt_rat(Rat(1, 3)));
  CHECK(p21.coeff(Partition{2, 1}) == qt(0));
  CHECK(p21.coeff(Partition{3}) == qt_rat(Rat(-1, 3)));
  // p_3 in s: s_3 - s_21 + s_111
  SymFunc p3 = convert(gen(Basis::p, {3}), Basis::s);
  CHECK(p3.coeff(Partition{3}) == qt(1));
  CHECK(p3.coeff(Partition{2, 1}) == qt(-1));
  CHECK(p3.coeff(Partition{1, 1, 1}) == qt(1));
  // s_21 in m: m_21 + 2 m_111
  SymFunc m21 = convert(gen(Basis::s, {2, 1}), Basis::m);
  CHECK(m21.coeff(Partition{2, 1}) == qt(1));
  CHECK(m21.coeff(Partition{1, 1, 1}) == qt(2));
  // m(h[3,1] + h[2,2]) from the paper
  SymFunc f2 = convert(gen(Basis::h, {3, 1}) + gen(Basis::h, {2, 2}), Basis::m);
  CHECK(f2.coeff(Partition{1, 1, 1, 1}) == qt(10));
  CHECK(f2.coeff(Partition{2, 1, 1}) == qt(7));
  CHECK(f2.coeff(Partition{2, 2}) == qt(5));
  CHECK(f2.coeff(Partition{3, 1}) == qt(4));
  CHECK(f2.coeff(Partition{4}) == qt(2));
  // round trips over Q for degree <= 8 (sampled generators)
  for (int d = 0; d <= 8; ++d)
    for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s})
      for (Basis c : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s}) {
        if (b == c) continue;
        auto parts = partitions_of_degree(d);
        for (size_t i = 0; i < parts.size(); i += std::max<size_t>(1, parts.size() / 3)) {
          SymFunc g = SymFunc::generator(b, parts[i]);
          CHECK(convert(convert(g, c), b) == g);
        }
      }
}

TEST_CASE("scalar products") {
  CHECK(scalar(gen(Basis::s, {2, 1}), gen(Basis::s, {1, 1, 1})) == qt(0));
  CHECK(scalar(gen(Basis::s, {2, 1}), gen(Basis::s, {2, 1})) == qt(1));
  for (int d = 0; d <= 5; ++d)
    for (auto& la : partitions_of_degree(d))
      for (auto& mu : partitions_of_degree(d))
        CHECK(scalar(SymFunc::generator(Basis::h, la), SymFunc::generator(Basis::m, mu)) ==
              (la == mu ? qt(1) : qt(0)));
  QT t = qt_t();
  CHECK(scalar(gen(Basis::s, {2, 1}), gen(Basis::s, {3}), ScalarMode::t) == t * t - t);
  CHECK(scalar(gen(Basis::s, {3}), gen(Basis::s, {3}), ScalarMode::t) == qt(1) - t);
  CHECK(scalar(gen(Basis::s, {1, 1, 1}), gen(Basis::s, {2, 1}), ScalarMode::t) == t * t - t);
  CHECK(scalar(gen(Basis::s, {1, 1, 1}), gen(Basis::s, {3}), ScalarMode::t) ==
        t * t - t * t * t);
  CHECK(scalar(gen(Basis::s, {2, 1}), gen(Basis::s, {2, 1}), ScalarMode::t) ==
        (qt(1) - t) * (qt(1) - t + t * t));
}

TEST_CASE("theta") {
  SymFunc f = gen(Basis::s, {2, 1});
  CHECK(theta(f, qt_t(), qt_t()) == f);
  QT v = scalar(gen(Basis::s, {2, 1}), theta(gen(Basis::s, {3}), qt_t(), qt_zero()));
  CHECK(v == qt_t() * qt_t() - qt_t());
}

TEST_CASE("perp") {
  SymFunc r = convert(h_perp(1, gen(Basis::s, {2, 1})), Basis::s);
  CHECK(r.coeff(Partition{2}) == qt(1));
  CHECK(r.coeff(Partition{1, 1}) == qt(1));
  CHECK((int)r.terms().size() == 2);
  CHECK(h_perp(1, SymFunc::unit(Basis::s)).is_zero());
  for (int n = 2; n <= 5; ++n) {
    SymFunc r2 = convert(e_perp(1, SymFunc::generator(Basis::h, Partition{n})), Basis::h);
    CHECK(r2 == SymFunc::generator(Basis::h, Partition{n - 1}));
  }
}

TEST_CASE("bernstein") {
  CHECK(bernstein(3, gen(Basis::s, {2, 1})) == gen(Basis::s, {3, 2, 1}));
  for (int d = 1; d <= 6; ++d)
    for (auto& la : partitions_of_degree(d)) {
      SymFunc f = SymFunc::unit(Basis::s);
      for (int i = la.length(); i >= 1; --i) f = bernstein(la.part(i), f);
      CHECK(f == SymFunc::generator(Basis::s, la));
    }
  SymFunc g = bernstein(1, gen(Basis::s, {2}));
  CHECK(g.is_zero());  // s_(1,2) straightens to zero
}

TEST_CASE("jing and Hall-Littlewood") {
  QT t = qt_t();
  SymFunc q = hl_qp(Partition{1, 1, 1});
  CHECK(q.coeff(Partition{1, 1, 1}) == qt(1));
  CHECK(q.coeff(Partition{2, 1}) == t + t * t);
  CHECK(q.coeff(Partition{3}) == t * t * t);
  SymFunc q21 = hl_qp(Partition{2, 1});
  CHECK(q21.coeff(Partition{2, 1}) == qt(1));
  CHECK(q21.coeff(Partition{3}) == t);
  SymFunc b = jing(3, hl_qp(Partition{1, 1}));
  CHECK(b.coeff(Partition{3, 1, 1}) == qt(1));
  CHECK(b.coeff(Partition{3, 2}) == t);
  CHECK(b.coeff(Partition{4, 1}) == t * t + t);
  CHECK(b.coeff(Partition{5}) == t * t * t);
  CHECK(b == hl_qp(Partition{3, 1, 1}));
  CHECK(hl_qp(Partition{4}) == gen(Basis::s, {4}));
  for (int d = 1; d <= 5; ++d)
    for (auto& la : partitions_of_degree(d))
      for (auto& mu : partitions_of_degree(d))
        if (!(la == mu))
          CHECK(scalar(hl_qp(la), hl_qp(mu), ScalarMode::t).is_zero());
}

TEST_CASE("creation operator B_nu") {
  QT t = qt_t();
  SymFunc g211 = creation_B(Partition{2, 1}, gen(Basis::s, {1}));
  CHECK(g211.coeff(Partition{2, 1, 1}) == qt(1));
  CHECK(g211.coeff(Partition{2, 2}) == t);
  CHECK(g211.coeff(Partition{3, 1}) == t);
  CHECK((int)g211.terms().size() == 3);
  SymFunc g3211 = creation_B(Partition{3}, g211);
  CHECK(g3211.coeff(Partition{3, 2, 1, 1}) == qt(1));
  CHECK(g3211.coeff(Partition{3, 2, 2}) == t);
  CHECK(g3211.coeff(Partition{3, 3, 1}) == t);
  CHECK(g3211.coeff(Partition{4, 1, 1, 1}) == t);
  CHECK(g3211.coeff(Partition{4, 2, 1}) == qt(2) * t * t + t);
  CHECK(g3211.coeff(Partition{4, 3}) == t * t);
  CHECK(g3211.coeff(Partition{5, 1, 1}) == t * t * t + t * t);
  CHECK(g3211.coeff(Partition{5, 2}) == qt(2) * t * t * t);
  CHECK(g3211.coeff(Partition{6, 1}) == t * t * t * t);
  CHECK((int)g3211.terms().size() == 9);
  for (auto nu : {Partition{2, 1}, Partition{3}, Partition{2, 2}}) {
    for (auto f : {SymFunc::unit(Basis::s), gen(Basis::s, {1}), gen(Basis::s, {2, 1})}) {
      CHECK(creation_B(nu, f, CreationFormula::raising) ==
            creation_B(nu, f, CreationFormula::perp_sum));
    }
  }
  SymFunc lhs = creation_B(Partition{2, 1}, gen(Basis::s, {2, 1}));
  SymFunc rhs = convert(mul(gen(Basis::s, {2, 1}), gen(Basis::s, {2, 1})), Basis::s);
  SymFunc spec(Basis::s);
  for (auto& [la, c] : lhs.terms()) spec.add(la, subs_t(c, qt_one()));
  CHECK(spec == rhs);
}

TEST_CASE("macdonald H") {
  QT q = qt_q(), t = qt_t();
  SymFunc h3 = macdonald_H(Partition{3});
  CHECK(h3.coeff(Partition{1, 1, 1}) == q.pow(3));
  CHECK(h3.coeff(Partition{2, 1}) == q * q + q);
  CHECK(h3.coeff(Partition{3}) == qt(1));
  SymFunc h21 = macdonald_H(Partition{2, 1});
  CHECK(h21.coeff(Partition{1, 1, 1}) == q);
  CHECK(h21.coeff(Partition{2, 1}) == q * t + qt(1));
  CHECK(h21.coeff(Partition{3}) == t);
  SymFunc h111 = macdonald_H(Partition{1, 1, 1});
  CHECK(h111.coeff(Partition{1, 1, 1}) == qt(1));
  CHECK(h111.coeff(Partition{2, 1}) == t * t + t);
  CHECK(h111.coeff(Partition{3}) == t.pow(3));
  for (int d = 1; d <= 4; ++d)
    for (auto& la : partitions_of_degree(d)) {
      SymFunc H = macdonald_H(la);
      SymFunc at0(Basis::s);
      for (auto& [mu, c] : H.terms()) at0.add(mu, subs_q(c, qt_zero()));
      CHECK(at0 == hl_qp(la));
      CHECK(hl_qp(la) == hl_qp_gram_schmidt(la));
    }
}

TEST_CASE("omega and restrict") {
  CHECK(omega(gen(Basis::s, {2, 1})) == gen(Basis::s, {2, 1}));
  CHECK(omega(gen(Basis::p, {3})) == gen(Basis::p, {3}));
  CHECK(omega(gen(Basis::p, {2})) == gen(Basis::p, {2}) * qt(-1));
  CHECK(omega(gen(Basis::s, {3})) == gen(Basis::s, {1, 1, 1}));
  SymFunc f = gen(Basis::m, {3, 1}) + gen(Basis::m, {2, 2});
  CHECK(restrict_parts(f, 2, Basis::m) == gen(Basis::m, {2, 2}));
}

TEST_CASE("cauchy identity degreewise") {
  for (int d = 1; d <= 6; ++d) {
    for (auto& mu : partitions_of_degree(d))
      for (auto& nu : partitions_of_degree(d)) {
        QT lhs = qt_zero();
        for (auto& la : partitions_of_degree(d)) {
          lhs += scalar(SymFunc::generator(Basis::h, la), SymFunc::generator(Basis::s, mu)) *
                 scalar(SymFunc::generator(Basis::m, la), SymFunc::generator(Basis::s, nu));
        }
        CHECK(lhs == (mu == nu ? qt(1) : qt(0)));
      }
  }
}

TEST_CASE("qp triangular solve") {
  SymFunc f = hl_qp(Partition{2, 1}) * qt_t() + hl_qp(Partition{1, 1, 1});
  SymFunc e = to_hl_qp(f);
  CHECK(e.coeff(Partition{2, 1}) == qt_t());
  CHECK(e.coeff(Partition{1, 1, 1}) == qt(1));
  CHECK((int)e.terms().size() == 2);
}

TEST_CASE("printing") {
  QT t = qt_t();
  SymFunc f(Basis::s);
  f.add(Partition{1, 1, 1}, qt(1));
  f.add(Partition{2, 1}, t * t + t);
  f.add(Partition{3}, t.pow(3));
  CHECK(f.str() == "s[1, 1, 1] + (t^2 + t)*s[2, 1] + t^3*s[3]");
}
