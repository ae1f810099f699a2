#pragma once

#include <map>
#include <optional>

#include "kst/mpoly.hpp"
#include "kst/weyl.hpp"

namespace kst::nilhecke {

using weyl::DatumPtr;
using weyl::WeylElement;

// Polynomial functions on the torus: Sym(X) in the X-basis coordinates.
using PolyS = MPoly;

PolyS root_poly(DatumPtr d, const std::vector<long long>& root_in_q);
PolyS simple_root_poly(DatumPtr d, int label);
// action of w on S
PolyS weyl_act(const WeylElement& w, const PolyS& q);
// divided difference A_i . q = (q - s_i q)/alpha_i
PolyS divided_difference(DatumPtr d, int label, const PolyS& q);

// Element sum_w a_w A_w of the Kostant-Kumar nilHecke ring, left coefficients.
class NilHeckeElement {
 public:
  explicit NilHeckeElement(DatumPtr d) : datum_(std::move(d)) {}
  static NilHeckeElement unit(DatumPtr d);
  static NilHeckeElement basis(const WeylElement& w);
  static NilHeckeElement scalar(DatumPtr d, const PolyS& q);

  const DatumPtr& datum() const { return datum_; }
  const std::map<WeylElement, PolyS>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PolyS coeff(const WeylElement& w) const;
  void add(const WeylElement& w, const PolyS& q);

  NilHeckeElement operator+(const NilHeckeElement& o) const;
  NilHeckeElement operator-(const NilHeckeElement& o) const;
  NilHeckeElement operator*(const NilHeckeElement& o) const;
  bool operator==(const NilHeckeElement& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  DatumPtr datum_;
  std::map<WeylElement, PolyS> terms_;
};

// a . q in normal form: commute a polynomial through from the right
NilHeckeElement commute(const NilHeckeElement& a, const PolyS& q);
// the group element w = prod (1 - alpha_i A_i) as a nilHecke element
NilHeckeElement group_element(const WeylElement& w);

// d-matrix entries d_{v,w} (w = sum_v d_{vw} A_v), three routes
PolyS d_recursive(const WeylElement& v, const WeylElement& w);
PolyS d_subexpression(const WeylElement& v, const WeylElement& w);
PolyS xi_billey(const WeylElement& v, const WeylElement& w);
// canonical localization: xi^v(w) = d_{vw}, via the recursive route
PolyS xi(const WeylElement& v, const WeylElement& w);
// diagonal value xi^v(v)
PolyS xi_diagonal(const WeylElement& v);

// A function on a finite window of W with polynomial values.
struct GKMFunction {
  DatumPtr datum;
  std::map<WeylElement, PolyS> values;  // absent = zero
  PolyS at(const WeylElement& w) const;
};

// check f(s_alpha w) - f(w) in alpha S for all pairs inside the window
bool gkm_condition_holds(const GKMFunction& f, const std::vector<WeylElement>& window,
                         int root_height_bound);

// localization function of the Schubert class xi^v on a window
GKMFunction xi_function(const WeylElement& v, const std::vector<WeylElement>& window);
// the equivariant Chern-type class c^lambda: w -> w . lambda
GKMFunction c_lambda(DatumPtr d, const PolyS& lambda_linear,
                     const std::vector<WeylElement>& window);

// expand f = sum_v f_v xi^v by greedy peeling; throws if a division fails
std::map<WeylElement, PolyS> gkm_expand(const GKMFunction& f,
                                        const std::vector<WeylElement>& window);

// equivariant Schubert structure constants p^w_{uv} within the length ceiling
std::map<WeylElement, PolyS> schubert_product(const WeylElement& u,
                                              const WeylElement& v, int length_bound);

// coproduct of A_w in the A_u (x) A_v basis with left polynomial coefficients
std::map<std::pair<WeylElement, WeylElement>, PolyS> coproduct(const WeylElement& w);
PolyS coprod_struct(const WeylElement& u, const WeylElement& v, const WeylElement& w);

// {xi^v : v in W^J} restricted to the window; checks coset constancy
std::vector<WeylElement> parabolic_basis(DatumPtr d, const std::vector<int>& J,
                                         int length_bound);
bool constant_on_cosets(const GKMFunction& f, const std::vector<int>& J,
                        const std::vector<WeylElement>& window);

// epsilon_0: kill positive-degree coefficients
NilHeckeElement forget_equivariance(const NilHeckeElement& a);
std::map<WeylElement, Rat> forget_expansion(const std::map<WeylElement, PolyS>& exp);

}  // namespace kst::nilhecke
