#pragma once

#include <map>

#include "kst/symfunc.hpp"
#include "kst/weyl.hpp"

namespace kst::nilcox {

using symfunc::SymFunc;
using weyl::DatumPtr;
using weyl::WeylElement;

// Finitely supported sum of A_w with rational coefficients; the product is
// A_v A_w = A_{vw} when lengths add and 0 otherwise.
class NilCoxeterElement {
 public:
  explicit NilCoxeterElement(DatumPtr d) : datum_(std::move(d)) {}
  static NilCoxeterElement unit(DatumPtr d);
  static NilCoxeterElement basis(const WeylElement& w, const Rat& c = Rat(1));

  const DatumPtr& datum() const { return datum_; }
  const std::map<WeylElement, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const WeylElement& w) const;
  void add(const WeylElement& w, const Rat& c);

  NilCoxeterElement operator+(const NilCoxeterElement& o) const;
  NilCoxeterElement operator-(const NilCoxeterElement& o) const;
  NilCoxeterElement operator*(const NilCoxeterElement& o) const;
  NilCoxeterElement operator*(const Rat& c) const;
  bool operator==(const NilCoxeterElement& o) const { return terms_ == o.terms_; }

  std::string str() const;  // sum of A[i_1,...,i_l]

 private:
  DatumPtr datum_;
  std::map<WeylElement, Rat> terms_;
};

// h_k for the finite A datum: sum of A_w over decreasing w of length k
NilCoxeterElement h_k(DatumPtr finite_a, int k);
// th_k for the affine A datum: sum over cyclically decreasing elements
NilCoxeterElement th_k(DatumPtr affine_a, int k);

// noncommutative (k-)Schur functions: substitute h_i -> bold h_i in the
// h-expansion
NilCoxeterElement noncomm_schur(const shapes::Partition& la, DatumPtr finite_a);
NilCoxeterElement noncomm_kschur(const shapes::Partition& la, DatumPtr affine_a);

// Stanley symmetric function of w: coefficient extraction against products of
// (cyclically) decreasing factors, assembled in the m basis
SymFunc stanley(const WeylElement& w);         // finite A datum
SymFunc affine_stanley(const WeylElement& w);  // affine A datum

// a_{la w}: coefficient of A_w in the noncommutative k-Schur function
Rat coeff_a(const shapes::Partition& la, const WeylElement& w, int k);

}  // namespace kst::nilcox
