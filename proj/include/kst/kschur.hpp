#pragma once

#include <map>
#include <vector>

#include "kst/shapes.hpp"
#include "kst/symfunc.hpp"
#include "kst/weyl.hpp"

namespace kst::kschur {

using shapes::Core;
using shapes::Partition;
using symfunc::Basis;
using symfunc::QT;
using symfunc::SymFunc;

// Chain of (k+1)-cores, consecutive steps weak horizontal strips.
class WeakTableau {
 public:
  WeakTableau(int k, std::vector<Core> chain);
  static WeakTableau from_core_rows(int k, const std::vector<std::vector<int>>& rows);
  static WeakTableau from_bounded_rows(int k, const std::vector<std::vector<int>>& rows);

  int k() const { return k_; }
  const std::vector<Core>& chain() const { return chain_; }
  Core shape() const { return chain_.back(); }
  std::vector<int> weight() const;
  // filling of the core shape (letter i on chain[i]/chain[i-1]), rows bottom-up
  std::vector<std::vector<int>> core_rows() const;
  // filling of the bounded shape p(kappa^i), rows bottom-up
  std::vector<std::vector<int>> bounded_rows() const;

  int k_charge() const;          // I-index formulation
  int k_charge_J() const;        // J-index formulation
  bool operator<(const WeakTableau& o) const { return core_rows() < o.core_rows(); }

 private:
  int k_;
  std::vector<Core> chain_;
};

std::vector<WeakTableau> weak_tableaux(int k, const Core& shape,
                                       const std::vector<int>& weight);
std::vector<WeakTableau> weak_tableaux(int k, const Partition& bounded_shape,
                                       const std::vector<int>& weight);
long weak_kostka(int k, const Partition& la, const Partition& mu);
QT weak_kostka_t(int k, const Partition& la, const Partition& mu);

// Chain of strong marked covers grouped into horizontal strips by `weight`.
class StrongMarkedTableau {
 public:
  StrongMarkedTableau(int k, std::vector<Core> chain, std::vector<int> markings,
                      std::vector<int> weight);
  int k() const { return k_; }
  const std::vector<Core>& chain() const { return chain_; }
  const std::vector<int>& markings() const { return markings_; }
  const std::vector<int>& weight() const { return weight_; }
  Core shape() const { return chain_.back(); }
  int spin() const;
  // Sage-style rows: entry = strip index, negated on marked ribbon heads
  std::vector<std::vector<int>> rows() const;
  bool operator<(const StrongMarkedTableau& o) const;

 private:
  int k_;
  std::vector<Core> chain_;
  std::vector<int> markings_;
  std::vector<int> weight_;
};

std::vector<StrongMarkedTableau> strong_tableaux(int k, const Core& shape,
                                                 const std::vector<int>& weight);
std::vector<StrongMarkedTableau> strong_tableaux(int k, const Partition& bounded,
                                                 const std::vector<int>& weight);

// ---- the k-Schur family ----

// t = 1 k-Schur function in the h basis (weak Pieri definition)
SymFunc kschur_t1(const Partition& la, int k);
// expand an h-basis element with k-bounded support in the ks(k) basis (t=1)
SymFunc h_to_ks(const SymFunc& f_h, int k);
// expand any symmetric function of k-bounded h-support in ks(k) at t=1
SymFunc to_ks_t1(const SymFunc& f, int k);

// dual k-Schur (affine Schur) in the m basis, t = 1
SymFunc dual_kschur(const Partition& la, int k);
// expand a symmetric function (viewed in the quotient: m-parts <= k) in dks(k)
SymFunc to_dks(const SymFunc& f, int k);

// generic-t k-Schur via strong tableaux / spin, m basis
SymFunc kschur_t(const Partition& la, int k);
// generic-t k-Schur in the s basis
SymFunc kschur_t_s(const Partition& la, int k);
// expand in the {kschur_t} basis; throws if f is outside the span
SymFunc to_ks_t(const SymFunc& f, int k);

// weak-charge k-Schur: Q'_mu = sum K^{(k)}_{la mu}(t) stilde_la
SymFunc kschur_tilde(const Partition& la, int k);  // s basis
// expand a Qp-expansion (k-bounded support) in the stilde basis
SymFunc qp_to_kstilde(const SymFunc& f_qp, int k);

// dual k-Schur with t: sum_mu K_{la mu}(t) P_mu[X;t], s basis
SymFunc dual_kschur_t(const Partition& la, int k);

// ---- Pieri rules and products ----

SymFunc weak_pieri(int r, const SymFunc& f_ks, int k);    // h_r on ks(k), t=1
SymFunc strong_pieri(int r, const SymFunc& f_dks, int k); // h_r on dks(k)
SymFunc e_pieri(int r, const SymFunc& f_ks, int k);       // e_r on ks(k), t=1

// omega with t -> 1/t on a ks(k;t) expansion, result again in ks(k;t)
SymFunc omega_t_inverse(const SymFunc& f_ks, int k);

// multiply by the k-rectangle Schur function s_{l^{k+1-l}} (t = 1)
SymFunc rectangle_product(int l, const SymFunc& f_ks, int k);

// branch a ks(k;t) expansion into the ks(k2;t) basis (k2 > k)
SymFunc branch(const SymFunc& f_ks, int k, int k2);

// k-Murnaghan-Nakayama: p_r times a ks- (or dks-) expansion
enum class MNSide { kschur, dual };
SymFunc k_mn(int r, const SymFunc& f, int k, MNSide side);

// t = 1 product of ks expansions and the k-Littlewood-Richardson numbers
SymFunc ks_product(const SymFunc& f_ks, const SymFunc& g_ks, int k);
long klr(const Partition& la, const Partition& mu, const Partition& nu, int k);

// Macdonald H_mu in the ks(k;t) basis
SymFunc macdonald_to_ks(const Partition& mu, int k);

// coproduct of a ks(k;t) basis element: pairs ((mu,nu) -> coefficient)
std::map<std::pair<Partition, Partition>, QT> ks_coproduct(const Partition& la, int k);

// projections Theta^{(k)} (onto span of P_la, la_1 <= k) and Theta_{(k)}
// (onto span of Q'_la, la_1 <= k)
SymFunc theta_upper(const SymFunc& f, int k);   // result in s basis
SymFunc theta_lower(const SymFunc& f, int k);   // result in s basis
// projected t-products, expanded in dks_t / ks_t respectively
SymFunc dks_t_product(const Partition& la, const Partition& mu, int k);
SymFunc ks_t_product(const Partition& la, const Partition& mu, int k);

}  // namespace kst::kschur
