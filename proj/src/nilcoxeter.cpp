#include "kst/nilcoxeter.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "kst/kschur.hpp"

namespace kst::nilcox {

using shapes::Partition;
using symfunc::Basis;

NilCoxeterElement NilCoxeterElement::unit(DatumPtr d) {
  NilCoxeterElement e(d);
  e.add(WeylElement::identity(d), Rat(1));
  return e;
}

NilCoxeterElement NilCoxeterElement::basis(const WeylElement& w, const Rat& c) {
  NilCoxeterElement e(w.datum());
  e.add(w, c);
  return e;
}

Rat NilCoxeterElement::coeff(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NilCoxeterElement::add(const WeylElement& w, const Rat& c) {
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    if (sgn(c) != 0) terms_.emplace(w, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

NilCoxeterElement NilCoxeterElement::operator+(const NilCoxeterElement& o) const {
  NilCoxeterElement e = *this;
  for (auto& [w, c] : o.terms_) e.add(w, c);
  return e;
}

NilCoxeterElement NilCoxeterElement::operator-(const NilCoxeterElement& o) const {
  NilCoxeterElement e = *this;
  for (auto& [w, c] : o.terms_) e.add(w, -c);
  return e;
}

NilCoxeterElement NilCoxeterElement::operator*(const NilCoxeterElement& o) const {
  if (datum_ != o.datum_) throw std::invalid_argument("datum mismatch");
  NilCoxeterElement e(datum_);
  for (auto& [v, c] : terms_)
    for (auto& [w, d] : o.terms_) {
      WeylElement vw = v * w;
      if (vw.length() == v.length() + w.length()) e.add(vw, c * d);
    }
  return e;
}

NilCoxeterElement NilCoxeterElement::operator*(const Rat& c) const {
  NilCoxeterElement e(datum_);
  if (sgn(c) == 0) return e;
  for (auto& [w, d] : terms_) e.terms_.emplace(w, d * c);
  return e;
}

std::string NilCoxeterElement::str() const {
  if (terms_.empty()) return "0";
  // order terms by length, then lex on the reduced word
  std::vector<std::pair<std::vector<int>, Rat>> items;
  for (auto& [w, c] : terms_) items.push_back({w.reduced_word(), c});
  std::sort(items.begin(), items.end(), [](auto& a, auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [word, c] : items) {
    Rat ac = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (ac != 1) os << ac.get_str() << "*";
    os << "A[";
    for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
    os << "]";
  }
  return os.str();
}

NilCoxeterElement h_k(DatumPtr d, int k) {
  if (d->is_affine()) throw std::invalid_argument("h_k takes the finite datum");
  int n = d->rank();  // letters 1..n
  if (k < 0 || k > n) throw std::invalid_argument("h_k index out of range");
  NilCoxeterElement e(d);
  // decreasing elements of length k <-> k-subsets of the letters
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int next) {
    if ((int)subset.size() == k) {
      std::vector<int> word(subset.rbegin(), subset.rend());
      e.add(WeylElement::from_reduced_word(d, word), Rat(1));
      return;
    }
    if (next > n) return;
    subset.push_back(next);
    rec(next + 1);
    subset.pop_back();
    rec(next + 1);
  };
  rec(1);
  return e;
}

NilCoxeterElement th_k(DatumPtr d, int k) {
  if (!d->is_type_a_affine())
    throw std::invalid_argument("th_k takes the affine type A datum");
  int n = d->rank();
  if (k < 0 || k >= n) throw std::invalid_argument("th_k index out of range");
  NilCoxeterElement e(d);
  for (auto& ap : weyl::cyclically_decreasing_of_length(n, k))
    e.add(weyl::to_weyl(ap, d), Rat(1));
  return e;
}

namespace {

NilCoxeterElement substitute_h(const SymFunc& f_h, DatumPtr d,
                               const std::function<NilCoxeterElement(int)>& gen) {
  NilCoxeterElement acc(d);
  for (auto& [la, c] : f_h.terms()) {
    if (!c.is_constant()) throw std::invalid_argument("expected rational coefficients");
    NilCoxeterElement term = NilCoxeterElement::unit(d);
    for (int part : la.parts()) term = term * gen(part);
    acc = acc + term * c.as_rat();
  }
  return acc;
}

}  // namespace

NilCoxeterElement noncomm_schur(const Partition& la, DatumPtr d) {
  int n = d->rank();  // delta_{n} fits: la_i <= n - i + 1 not enforced; h_k = 0 for k > n handled
  SymFunc f = symfunc::convert(SymFunc::generator(Basis::s, la), Basis::h);
  NilCoxeterElement acc(d);
  for (auto& [mu, c] : f.terms()) {
    if (mu.part(1) > n) continue;  // bold h vanishes beyond the rank
    NilCoxeterElement term = NilCoxeterElement::unit(d);
    for (int part : mu.parts()) term = term * h_k(d, part);
    acc = acc + term * c.as_rat();
  }
  return acc;
}

NilCoxeterElement noncomm_kschur(const Partition& la, DatumPtr d) {
  int k = d->rank() - 1;
  SymFunc f = kschur::kschur_t1(la, k);
  return substitute_h(f, d, [&](int part) { return th_k(d, part); });
}

namespace {

SymFunc stanley_generic(const WeylElement& w,
                        const std::function<NilCoxeterElement(int)>& gen, int maxpart) {
  int len = w.length();
  SymFunc out(Basis::m);
  for (const Partition& la : shapes::partitions_of(len, maxpart)) {
    // coefficient of A_w in h_{la_1} h_{la_2} ...
    NilCoxeterElement acc = NilCoxeterElement::unit(w.datum());
    for (int part : la.parts()) {
      acc = acc * gen(part);
      // prune: keep only left divisors of w
      NilCoxeterElement pruned(w.datum());
      for (auto& [u, c] : acc.terms()) {
        WeylElement rest = u.inverse() * w;
        if (rest.length() == len - u.length()) pruned.add(u, c);
      }
      acc = pruned;
    }
    Rat c = acc.coeff(w);
    if (sgn(c) != 0) out.add(la, symfunc::qt_rat(c));
  }
  return out;
}

}  // namespace

SymFunc stanley(const WeylElement& w) {
  auto d = w.datum();
  if (d->is_affine()) throw std::invalid_argument("stanley takes finite elements");
  return stanley_generic(w, [&](int p) { return h_k(d, p); }, d->rank());
}

SymFunc affine_stanley(const WeylElement& w) {
  auto d = w.datum();
  if (!d->is_type_a_affine())
    throw std::invalid_argument("affine_stanley takes affine type A elements");
  return stanley_generic(w, [&](int p) { return th_k(d, p); }, d->rank() - 1);
}

Rat coeff_a(const Partition& la, const WeylElement& w, int k) {
  auto d = w.datum();
  if (d->rank() != k + 1 || !d->is_type_a_affine())
    throw std::invalid_argument("coeff_a needs the affine datum for the given k");
  if (w.length() != la.size()) return Rat(0);  // homogeneity
  return noncomm_kschur(la, d).coeff(w);
}

}  // namespace kst::nilcox
