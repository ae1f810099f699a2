#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kst/rational.hpp"

namespace kst {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Terms are kept in graded-lex order on exponent vectors.
class MPoly {
 public:
  using Expo = std::vector<int>;

  struct ExpoCmp {
    bool operator()(const Expo& a, const Expo& b) const {
      int da = 0, db = 0;
      for (int e : a) da += e;
      for (int e : b) db += e;
      if (da != db) return da < db;
      return a < b;
    }
  };
  using TermMap = std::map<Expo, Rat, ExpoCmp>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int idx);
  // linear form sum_i coeffs[i] * x_i
  static MPoly linear(const std::vector<Rat>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_term() const;
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;

  const TermMap& terms() const { return terms_; }

  void add_term(const Expo& e, const Rat& c);

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
  MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly operator*(const Rat& c) const;
  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }
  bool operator<(const MPoly& o) const;  // arbitrary total order, for map keys

  MPoly pow(int e) const;

  // Leading term under graded-lex.
  const Expo& lead_expo() const;
  const Rat& lead_coeff() const;

  // Exact division; nullopt if the division leaves a remainder.
  std::optional<MPoly> divide_exact(const MPoly& d) const;
  bool divisible_by(const MPoly& d) const { return divide_exact(d).has_value(); }

  // gcd up to a scalar; result is primitive with positive leading coefficient.
  static MPoly gcd(const MPoly& a, const MPoly& b);

  // substitute x_i -> subs[i]; all subs share a target variable count
  MPoly substitute(const std::vector<MPoly>& subs) const;
  Rat evaluate(const std::vector<Rat>& vals) const;

  // is every coefficient a nonnegative integer?
  bool nonneg_integer_coeffs() const;

  // monic-content normalization helpers
  Rat content() const;          // gcd of coefficients (positive), sign of lead
  MPoly primitive_part() const; // *this / content  (zero -> zero)

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  TermMap terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

}  // namespace kst
