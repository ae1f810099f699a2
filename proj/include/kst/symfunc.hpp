#pragma once

#include <map>
#include <string>
#include <vector>

#include "kst/ratfunc.hpp"
#include "kst/shapes.hpp"

namespace kst::symfunc {

using shapes::Partition;

// Coefficients live in Q(q,t); q is variable 0 and t is variable 1. Plain
// rationals and Q(t) are the subfields where q (and t) do not appear.
using QT = RatFn;

QT qt_zero();
QT qt_one();
QT qt_rat(const Rat& r);
QT qt_int(long v);
QT qt_q();
QT qt_t();
std::string qt_str(const QT& c);
// substitute t -> value (and q -> value) given as polynomials in q,t
QT subs_t(const QT& c, const QT& value);
QT subs_q(const QT& c, const QT& value);

enum class Basis { m, h, e, p, s, HLQp, MacH, ks, dks, F };
std::string basis_name(Basis b, int k = 0);

// Sparse basis-tagged expansion: partition -> coefficient.
class SymFunc {
 public:
  SymFunc() : basis_(Basis::m) {}
  explicit SymFunc(Basis b, int k = 0) : basis_(b), k_(k) {}

  static SymFunc unit(Basis b, int k = 0);  // the empty-partition term
  static SymFunc generator(Basis b, const Partition& la, int k = 0);

  Basis basis() const { return basis_; }
  int k() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Partition, QT>& terms() const { return terms_; }
  QT coeff(const Partition& la) const;
  void set(const Partition& la, const QT& c);
  void add(const Partition& la, const QT& c);
  int max_degree() const;
  bool is_homogeneous() const;
  SymFunc component(int degree) const;

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const QT& c) const;
  SymFunc operator-() const { return *this * qt_int(-1); }
  bool operator==(const SymFunc& o) const;

  std::string str() const;

 private:
  Basis basis_;
  int k_ = 0;
  std::map<Partition, QT> terms_;
};

// exact change of basis among the classical bases m,h,e,p,s
SymFunc convert(const SymFunc& f, Basis target);

// product (any classical bases; result in the basis of f)
SymFunc mul(const SymFunc& f, const SymFunc& g);

enum class ScalarMode { hall, t, qt };
QT scalar(const SymFunc& f, const SymFunc& g, ScalarMode mode = ScalarMode::hall);

// plethystic substitution p_r -> p_r (1-a^r)/(1-b^r)
SymFunc theta(const SymFunc& f, const QT& a, const QT& b);
// p_r -> p_r prod (1 - a_i^r) for a list of parameters (e.g. X(t-1): t, -(-1)...)
SymFunc transform_p(const SymFunc& f, const std::vector<QT>& numer_params,
                    const std::vector<QT>& denom_params);
// plethysm p_m o f (q,t |-> q^m,t^m on coefficients)
SymFunc plethysm_p(int m, const SymFunc& f);

SymFunc perp(const SymFunc& f, const SymFunc& g);  // f^perp applied to g
SymFunc h_perp(int r, const SymFunc& g);
SymFunc e_perp(int r, const SymFunc& g);

SymFunc bernstein(int m, const SymFunc& f);         // S_m
SymFunc jing(int m, const SymFunc& f);              // B_m
SymFunc hl_qp(const Partition& la);                 // Q'_la[X;t], s-basis
// independent Gram-Schmidt route to Q' via the t-scalar product
SymFunc hl_qp_gram_schmidt(const Partition& la);
SymFunc hl_p(const Partition& la);                  // P_la[X;t], s-basis

// B_nu with the product of (1 - t R_ij); formula selects the implementation
enum class CreationFormula { raising, perp_sum };
SymFunc creation_B(const Partition& nu, const SymFunc& f,
                   CreationFormula which = CreationFormula::raising);

SymFunc macdonald_H(const Partition& la);           // H_la[X;q,t], s-basis

SymFunc omega(const SymFunc& f);
SymFunc restrict_parts(const SymFunc& f, int k, Basis basis);

// Littlewood-Richardson coefficient <s_mu s_nu, s_la>
Rat lr_coeff(const Partition& mu, const Partition& nu, const Partition& la);

// expand f in the Hall-Littlewood Q' basis (triangular solve)
SymFunc to_hl_qp(const SymFunc& f);

std::vector<Partition> partitions_of_degree(int d);

}  // namespace kst::symfunc
