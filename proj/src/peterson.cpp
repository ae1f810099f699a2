#include "kst/peterson.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "kst/linalg.hpp"

namespace kst::peterson {

using nilhecke::NilHeckeElement;

SmallTorus SmallTorus::named(const std::string& affine_name) {
  if (affine_name.empty() || affine_name.back() != '~')
    throw std::invalid_argument("small torus needs an affine datum name");
  SmallTorus st;
  st.affine = weyl::RootDatum::named(affine_name);
  st.finite = weyl::RootDatum::named(affine_name.substr(0, affine_name.size() - 1));
  return st;
}

PolyS SmallTorus::project(const PolyS& p) const {
  // affine variables: a0, a1..am, L0 -> (-theta, a1..am, 0)
  int m = finite->rank();
  std::vector<MPoly> subs;
  for (int i = 0; i <= m; ++i) {
    if (i == affine->node0()) {
      std::vector<Rat> coeffs(fin_vars(), Rat(0));
      for (int j = 0; j < m; ++j) {
        // theta in finite simple-root coordinates; adjoint X: alpha_j = e_j
        int pos_aff = affine->index_of_label(finite->labels()[j]);
        for (int b = 0; b < fin_vars(); ++b)
          coeffs[b] -= Rat((long)affine->theta()[pos_aff]) * finite->roots_in_x()[j][b];
      }
      subs.push_back(MPoly::linear(coeffs));
    } else {
      int label = affine->labels()[i];
      int j = finite->index_of_label(label);
      std::vector<Rat> coeffs(fin_vars(), Rat(0));
      for (int b = 0; b < fin_vars(); ++b) coeffs[b] = finite->roots_in_x()[j][b];
      subs.push_back(MPoly::linear(coeffs));
    }
  }
  subs.push_back(MPoly(fin_vars()));  // Lambda_0 -> 0
  return p.substitute(subs);
}

PolyS SmallTorus::simple_root(int label) const {
  if (label == 0) {
    // pi(alpha_0) = -theta
    PolyS out(fin_vars());
    for (int j = 0; j < finite->rank(); ++j) {
      int pos_aff = affine->index_of_label(finite->labels()[j]);
      out = out - nilhecke::simple_root_poly(finite, finite->labels()[j]) *
                      Rat((long)affine->theta()[pos_aff]);
    }
    return out;
  }
  return nilhecke::simple_root_poly(finite, label);
}

PolyS SmallTorus::act(const WeylElement& w, const PolyS& q) const {
  // level zero: translations act trivially, so only the finite part matters
  auto [mu, vword] = factor_translation(w);
  return nilhecke::weyl_act(WeylElement::from_reduced_word(finite, vword), q);
}

std::pair<std::vector<int>, std::vector<int>> SmallTorus::factor_translation(
    const WeylElement& w) const {
  int n = affine->rank();
  int m = finite->rank();
  int p0 = affine->node0();
  // finite part: the action of w on Q_af / Z delta in the basis abar_j, j != 0
  const auto& mat = w.matrix();
  std::vector<long long> fin_mat(m * m, 0);
  std::vector<int> fin_positions;
  for (int i = 0; i < n; ++i)
    if (i != p0) fin_positions.push_back(i);
  for (int cj = 0; cj < m; ++cj) {
    int col = fin_positions[cj];
    long long c0 = mat[p0 * n + col];
    for (int ri = 0; ri < m; ++ri) {
      int row = fin_positions[ri];
      // abar_row coefficient: c_row - c_0 * a_row / a_0
      long long a0 = affine->marks()[p0];
      long long arow = affine->marks()[row];
      long long val = mat[row * n + col] * a0 - c0 * arow;
      if (val % a0 != 0) throw std::logic_error("non-integral finite projection");
      fin_mat[ri * m + cj] = val / a0;
    }
  }
  WeylElement v_fin = WeylElement::from_action_matrix(finite, fin_mat);
  // map labels of the finite word back into the affine group
  std::vector<int> vword = v_fin.reduced_word();
  WeylElement v_aff = WeylElement::from_reduced_word(affine, vword);
  WeylElement t = w * v_aff.inverse();
  // read lambda from t alpha_j = alpha_j - <lambda, alpha_j> delta
  const auto& tm = t.matrix();
  std::vector<Rat> pairings(m);
  for (int cj = 0; cj < m; ++cj) {
    int col = fin_positions[cj];
    long long c0 = tm[p0 * n + col];
    long long a0 = affine->marks()[p0];
    // delta-coefficient: alpha_0 coordinate equals -<lambda,alpha_j> a_0
    pairings[cj] = Rat((long)-c0, (long)a0);
  }
  // solve sum_i la_i a_{ij} = pairing_j over the finite Cartan
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) M[j][i] = Rat(finite->cartan(i, j));
    // columns j are the equations
  }
  for (int j = 0; j < m; ++j) M[j][m] = pairings[j];
  // gaussian solve
  for (int c = 0; c < m; ++c) {
    int p = -1;
    for (int r = c; r < m; ++r)
      if (sgn(M[r][c]) != 0) {
        p = r;
        break;
      }
    std::swap(M[p], M[c]);
    for (int r = 0; r < m; ++r) {
      if (r == c || sgn(M[r][c]) == 0) continue;
      Rat f = M[r][c] / M[c][c];
      for (int cc = c; cc <= m; ++cc) M[r][cc] -= f * M[c][cc];
    }
  }
  std::vector<int> mu(n, 0);
  for (int c = 0; c < m; ++c) {
    Rat v = M[c][m] / M[c][c];
    if (v.get_den() != 1) throw std::logic_error("non-integral translation part");
    int label = finite->labels()[c];
    mu[affine->index_of_label(label)] = (int)v.get_num().get_si();
  }
  // order mu by affine positions; drop node0 when returning
  return {mu, vword};
}

WeylElement SmallTorus::coset_translation(const WeylElement& w) const {
  auto [mu, vword] = factor_translation(w);
  return weyl::translation(affine, mu);
}

std::vector<WeylElement> SmallTorus::grassmannians(int length_bound) const {
  std::vector<int> J;
  for (int lab : finite->labels()) J.push_back(lab);
  return weyl::grassmannian_reps(affine, J, length_bound);
}

std::vector<WeylElement> SmallTorus::all_elements(int length_bound) const {
  std::vector<WeylElement> out;
  for (auto& level : weyl::elements_by_length(affine, length_bound))
    for (auto& w : level) out.push_back(w);
  return out;
}

PolyS xibar(const SmallTorus& st, const WeylElement& v, const WeylElement& w) {
  return st.project(nilhecke::xi(v, w));
}

GKMFn xibar_fn(const SmallTorus& st, const WeylElement& v) {
  return [st, v](const WeylElement& w) { return xibar(st, v, w); };
}

bool small_gkm_holds(const SmallTorus& st, const GKMFn& f, int length_bound,
                     int max_power) {
  // for finite roots alpha and d >= 1:
  //   f((1-t_{alpha^vee})^d w) in alpha^d S
  //   f((1-t_{alpha^vee})^{d-1}(1-s_alpha) w) in alpha^d S
  auto binom = [](int n, int r) {
    long b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return b;
  };
  int m = st.finite->rank();
  for (auto& root : weyl::positive_roots(st.finite, 2 * m + 2)) {
    // coroot coordinates of alpha^vee: for ADE types alpha^vee has the same
    // coordinates; build the reflection word in the finite group
    // find alpha^vee by peeling: alpha = g . alpha_i => alpha^vee = g . alpha_i^vee
    std::vector<long long> r = root;
    std::vector<int> conj;
    for (;;) {
      long long height = 0;
      for (auto x : r) height += x;
      if (height == 1) break;
      int which = -1;
      for (int i = 0; i < m && which < 0; ++i) {
        if (r[i] <= 0) continue;
        long long c = 0;
        for (int j = 0; j < m; ++j) c += st.finite->cartan(i, j) * r[j];
        if (c > 0) {
          auto r2 = r;
          r2[i] -= c;
          bool pos = true;
          for (auto x : r2) pos = pos && x >= 0;
          if (pos) {
            which = i;
            r = r2;
          }
        }
      }
      if (which < 0) throw std::logic_error("root reduction failed");
      conj.push_back(st.finite->labels()[which]);
    }
    int base = -1;
    for (int i = 0; i < m; ++i)
      if (r[i] == 1) base = i;
    // alpha^vee in simple-coroot coordinates: apply the conjugating word to
    // the simple coroot base using the transpose action: coroot coords of
    // g . alpha_base^vee; s_i on coroots: mu - <mu, alpha_i> alpha_i^vee
    std::vector<long long> coroot(m, 0);
    coroot[base] = 1;
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
      int i = st.finite->index_of_label(*it);
      long long c = 0;
      for (int j = 0; j < m; ++j) c += coroot[j] * st.finite->cartan(j, i);
      coroot[i] -= c;
    }
    // reflection s_alpha in the affine group (finite element)
    WeylElement s_alpha =
        weyl::reflection(st.affine, conj, st.finite->labels()[base]);
    PolyS alpha_poly = nilhecke::root_poly(st.finite, root);
    // translations by k alpha^vee
    std::vector<int> mu(st.affine->rank(), 0);
    for (int j = 0; j < m; ++j)
      mu[st.affine->index_of_label(st.finite->labels()[j])] = (int)coroot[j];
    for (auto& w : st.all_elements(length_bound)) {
      for (int dpow = 1; dpow <= max_power; ++dpow) {
        // sum_k (-1)^k binom(d,k) f(t_{k alpha^vee} w)
        PolyS acc1(st.fin_vars());
        PolyS acc2(st.fin_vars());
        for (int kk = 0; kk <= dpow; ++kk) {
          std::vector<int> kmu(mu.size());
          for (size_t z = 0; z < mu.size(); ++z) kmu[z] = kk * mu[z];
          WeylElement tk = weyl::translation(st.affine, kmu);
          Rat c = Rat(binom(dpow, kk));
          if (kk % 2) c = -c;
          acc1 = acc1 + f(tk * w) * c;
        }
        for (int kk = 0; kk + 1 <= dpow; ++kk) {
          std::vector<int> kmu(mu.size());
          for (size_t z = 0; z < mu.size(); ++z) kmu[z] = kk * mu[z];
          WeylElement tk = weyl::translation(st.affine, kmu);
          Rat c = Rat(binom(dpow - 1, kk));
          if (kk % 2) c = -c;
          acc2 = acc2 + (f(tk * w) - f(tk * s_alpha * w)) * c;
        }
        PolyS ad = alpha_poly.pow(dpow);
        if (!acc1.is_zero() && !acc1.divisible_by(ad)) return false;
        if (!acc2.is_zero() && !acc2.divisible_by(ad)) return false;
      }
    }
  }
  return true;
}

GKMFn wrongway(const SmallTorus& st, const GKMFn& f) {
  return [st, f](const WeylElement& w) { return f(st.coset_translation(w)); };
}

std::map<WeylElement, PolyS> small_gkm_expand_gr(const SmallTorus& st, const GKMFn& f,
                                                 int length_bound) {
  auto window = st.grassmannians(length_bound);
  std::map<WeylElement, PolyS> rest;
  for (auto& w : window) {
    PolyS v = f(st.coset_translation(w));
    if (!v.is_zero()) rest[w] = v;
  }
  std::map<WeylElement, PolyS> out;
  for (;;) {
    const WeylElement* x = nullptr;
    for (auto& w : window) {
      auto it = rest.find(w);
      if (it != rest.end() && !it->second.is_zero()) {
        x = &w;
        break;
      }
    }
    if (!x) break;
    PolyS diag = st.project(nilhecke::xi_diagonal(*x));
    auto q = rest[*x].divide_exact(diag);
    if (!q) throw std::domain_error("function is not in the Grassmannian span");
    out[*x] = *q;
    for (auto& w : window) {
      PolyS nv =
          (rest.count(w) ? rest[w] : PolyS(st.fin_vars())) -
          *q * xibar(st, *x, st.coset_translation(w));
      if (nv.is_zero())
        rest.erase(w);
      else
        rest[w] = nv;
    }
  }
  return out;
}

PolyS JBasisElement::at(const WeylElement& x) const {
  auto it = coeffs.find(x);
  return it == coeffs.end() ? PolyS(index.datum()->xrank() - 2) : it->second;
}

JBasisElement j_basis(const SmallTorus& st, const WeylElement& u, int bound) {
  if (bound < u.length()) throw std::invalid_argument("bound must cover l(u)");
  // lower-closed window of Grassmannians up to l(u)
  auto window = st.grassmannians(u.length());
  int n0 = (int)window.size();
  int ju = -1;
  for (int i = 0; i < n0; ++i)
    if (window[i] == u) ju = i;
  if (ju < 0) throw std::invalid_argument("index is not affine Grassmannian");
  // translations for each window element
  std::vector<WeylElement> trans;
  for (auto& w : window) trans.push_back(st.coset_translation(w));
  int nv = st.fin_vars();
  RatFn zero(nv), one = RatFn::constant(nv, Rat(1));
  Mat<RatFn> D(n0, n0, zero);
  for (int i = 0; i < n0; ++i)
    for (int j = 0; j < n0; ++j) D(i, j) = RatFn(xibar(st, window[i], trans[j]));
  auto C = invert(D, zero, one);
  if (!C) throw std::logic_error("D-matrix inversion failed");
  JBasisElement out(u);
  out.bound = bound;
  for (auto& x : st.all_elements(bound)) {
    RatFn acc = zero;
    for (int i = 0; i < n0; ++i) {
      if ((*C)(i, ju).is_zero()) continue;
      PolyS val = xibar(st, x, trans[i]);
      if (val.is_zero()) continue;
      acc += (*C)(i, ju) * RatFn(val);
    }
    if (acc.is_zero()) continue;
    if (!acc.is_polynomial())
      throw std::logic_error("j-basis coefficient has a denominator");
    PolyS p = acc.num() * (Rat(1) / acc.den().constant_term());
    out.coeffs[x] = p;
  }
  return out;
}

nilcox::NilCoxeterElement j0_basis(const SmallTorus& st, const WeylElement& u,
                                   int bound) {
  JBasisElement j = j_basis(st, u, bound);
  nilcox::NilCoxeterElement out(st.affine);
  for (auto& [x, p] : j.coeffs) {
    Rat c = p.constant_term();
    if (sgn(c) != 0) out.add(x, c);
  }
  return out;
}

PolyS hom_struct(const SmallTorus& st, const WeylElement& u, const WeylElement& v,
                 const WeylElement& w) {
  WeylElement x = w * v.inverse();
  if (x.length() + v.length() != w.length()) return PolyS(st.fin_vars());
  JBasisElement j = j_basis(st, u, x.length());
  return j.at(x);
}

nilhecke::NilHeckeElement commute_small(const SmallTorus& st, const WeylElement& x,
                                        const PolyS& q) {
  auto d = st.affine;
  std::function<NilHeckeElement(const WeylElement&, const PolyS&)> rec =
      [&](const WeylElement& w, const PolyS& poly) -> NilHeckeElement {
    NilHeckeElement res(d);
    if (poly.is_zero()) return res;
    if (w.is_identity()) {
      res.add(w, poly);
      return res;
    }
    auto word = w.reduced_word();
    int i = word.back();
    WeylElement s = WeylElement::simple(d, i);
    WeylElement wp = w * s;
    PolyS alpha = st.simple_root(i);
    PolyS s_q = st.act(s, poly);
    PolyS num = poly - s_q;
    auto dd = num.divide_exact(alpha);
    if (!dd) throw std::logic_error("small torus divided difference failed");
    NilHeckeElement left = rec(wp, *dd);
    NilHeckeElement res2(d);
    for (auto& [uu, p] : left.terms()) res2.add(uu, p);
    NilHeckeElement right = rec(wp, s_q);
    for (auto& [uu, p] : right.terms()) {
      WeylElement us = uu * s;
      if (us.length() == uu.length() + 1) res2.add(us, p);
    }
    return res2;
  };
  return rec(x, q);
}

bool commutes_with_scalars(const SmallTorus& st, const JBasisElement& j) {
  // [j_u, lambda] has vanishing coefficients at lengths <= bound - 1
  for (int lab : st.finite->labels()) {
    PolyS lambda = st.simple_root(lab);
    nilhecke::NilHeckeElement acc(st.affine);
    for (auto& [x, p] : j.coeffs) {
      // A_x lambda - lambda A_x, left-multiplied by p
      nilhecke::NilHeckeElement moved = commute_small(st, x, lambda);
      for (auto& [uu, r] : moved.terms()) acc.add(uu, p * r);
      acc.add(x, -(lambda * p));
    }
    for (auto& [uu, r] : acc.terms())
      if (uu.length() <= j.bound - 1 && !r.is_zero()) return false;
  }
  return true;
}

}  // namespace kst::peterson
