#pragma once

#include <functional>
#include <map>

#include "kst/nilcoxeter.hpp"
#include "kst/nilhecke.hpp"
#include "kst/ratfunc.hpp"
#include "kst/weyl.hpp"

namespace kst::peterson {

using nilhecke::PolyS;
using weyl::DatumPtr;
using weyl::WeylElement;

// The small-torus setup ties an untwisted affine datum to its finite part;
// polynomial values live in Sym of the finite lattice.
struct SmallTorus {
  DatumPtr affine;
  DatumPtr finite;
  static SmallTorus named(const std::string& affine_name);  // e.g. "A2~"

  int fin_vars() const { return finite->xrank(); }
  // pi: S_af -> S, alpha_0 -> -theta, Lambda_0 -> 0
  PolyS project(const PolyS& affine_poly) const;
  // level-zero action of an affine element on finite S
  PolyS act(const WeylElement& w_affine, const PolyS& q) const;
  PolyS simple_root(int label) const;  // pi(alpha_i), a finite linear form
  // factor w = t_mu v with v in the finite Weyl group; returns (mu, v-word)
  std::pair<std::vector<int>, std::vector<int>> factor_translation(
      const WeylElement& w_affine) const;
  // the translation t^w representing the coset w W
  WeylElement coset_translation(const WeylElement& w_affine) const;
  std::vector<WeylElement> grassmannians(int length_bound) const;
  std::vector<WeylElement> all_elements(int length_bound) const;
};

// xibar^v(w) = pi(xi^v(w)), values in the finite S
PolyS xibar(const SmallTorus& st, const WeylElement& v, const WeylElement& w);

// small-torus GKM conditions for a function given by an evaluator
using GKMFn = std::function<PolyS(const WeylElement&)>;
GKMFn xibar_fn(const SmallTorus& st, const WeylElement& v);
bool small_gkm_holds(const SmallTorus& st, const GKMFn& f, int length_bound,
                     int max_power);

// the wrong-way map: (t_mu u) -> f(t_mu)
GKMFn wrongway(const SmallTorus& st, const GKMFn& f);

// expand a Grassmannian-constant function in {xibar^v : v in W_af^0}
std::map<WeylElement, PolyS> small_gkm_expand_gr(const SmallTorus& st, const GKMFn& f,
                                                 int length_bound);

// Element j_u of the Peterson subalgebra, coefficients up to a length bound.
struct JBasisElement {
  explicit JBasisElement(WeylElement u) : index(std::move(u)) {}
  WeylElement index;
  int bound = 0;
  std::map<WeylElement, PolyS> coeffs;  // x -> j_u^x, l(x) <= bound
  PolyS at(const WeylElement& x) const;
};

JBasisElement j_basis(const SmallTorus& st, const WeylElement& u, int bound);

// epsilon_0 shadow: constant coefficients, an affine nilCoxeter element
nilcox::NilCoxeterElement j0_basis(const SmallTorus& st, const WeylElement& u,
                                   int bound);

// homology structure constant d^w_{uv} = j_u^{w v^{-1}} when lengths add
PolyS hom_struct(const SmallTorus& st, const WeylElement& u, const WeylElement& v,
                 const WeylElement& w);

// commute a finite polynomial through A_x in the small-torus nilHecke ring
nilhecke::NilHeckeElement commute_small(const SmallTorus& st, const WeylElement& x,
                                        const PolyS& q);

// verify [j_u, lambda] vanishes on all terms of length <= bound - 1
bool commutes_with_scalars(const SmallTorus& st, const JBasisElement& j);

}  // namespace kst::peterson
