#include "kst/nilhecke.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kst::nilhecke {

PolyS root_poly(DatumPtr d, const std::vector<long long>& root_in_q) {
  std::vector<Rat> coeffs(d->xrank(), Rat(0));
  for (int i = 0; i < d->rank(); ++i)
    for (int b = 0; b < d->xrank(); ++b)
      coeffs[b] += Rat((long)root_in_q[i]) * d->roots_in_x()[i][b];
  return MPoly::linear(coeffs);
}

PolyS simple_root_poly(DatumPtr d, int label) {
  std::vector<long long> q(d->rank(), 0);
  q[d->index_of_label(label)] = 1;
  return root_poly(d, q);
}

PolyS weyl_act(const WeylElement& w, const PolyS& q) {
  auto d = w.datum();
  int xr = d->xrank();
  // substitution for each X-basis coordinate
  std::vector<MPoly> subs;
  for (int b = 0; b < xr; ++b) {
    std::vector<Rat> unit(xr, Rat(0));
    unit[b] = Rat(1);
    std::vector<Rat> image = w.apply_x(unit);
    subs.push_back(MPoly::linear(image));
  }
  return q.substitute(subs);
}

PolyS divided_difference(DatumPtr d, int label, const PolyS& q) {
  WeylElement s = WeylElement::simple(d, label);
  PolyS num = q - weyl_act(s, q);
  auto res = num.divide_exact(simple_root_poly(d, label));
  if (!res) throw std::logic_error("divided difference must divide exactly");
  return *res;
}

NilHeckeElement NilHeckeElement::unit(DatumPtr d) {
  NilHeckeElement e(d);
  e.add(WeylElement::identity(d), MPoly::constant(d->xrank(), Rat(1)));
  return e;
}

NilHeckeElement NilHeckeElement::basis(const WeylElement& w) {
  NilHeckeElement e(w.datum());
  e.add(w, MPoly::constant(w.datum()->xrank(), Rat(1)));
  return e;
}

NilHeckeElement NilHeckeElement::scalar(DatumPtr d, const PolyS& q) {
  NilHeckeElement e(d);
  e.add(WeylElement::identity(d), q);
  return e;
}

PolyS NilHeckeElement::coeff(const WeylElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? MPoly(datum_->xrank()) : it->second;
}

void NilHeckeElement::add(const WeylElement& w, const PolyS& q) {
  if (q.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, q);
  } else {
    it->second = it->second + q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NilHeckeElement NilHeckeElement::operator+(const NilHeckeElement& o) const {
  NilHeckeElement e = *this;
  for (auto& [w, q] : o.terms_) e.add(w, q);
  return e;
}

NilHeckeElement NilHeckeElement::operator-(const NilHeckeElement& o) const {
  NilHeckeElement e = *this;
  for (auto& [w, q] : o.terms_) e.add(w, -q);
  return e;
}

NilHeckeElement commute(const NilHeckeElement& a, const PolyS& q) {
  // A_w q = A_{w'}(A_i . q) + A_{w'}(s_i . q) A_i for w = w' s_i
  auto d = a.datum();
  NilHeckeElement out(d);
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
    WeylElement wp = w * s;  // shorter
    PolyS dd = divided_difference(d, i, poly);
    PolyS si_q = weyl_act(s, poly);
    NilHeckeElement left = rec(wp, dd);  // A_{w'} (A_i . q)
    for (auto& [u, p] : left.terms()) res.add(u, p);
    NilHeckeElement right = rec(wp, si_q);  // A_{w'} (s_i . q) A_i
    for (auto& [u, p] : right.terms()) {
      WeylElement us = u * s;
      if (us.length() == u.length() + 1) res.add(us, p);
    }
    return res;
  };
  for (auto& [w, p] : a.terms()) {
    NilHeckeElement moved = rec(w, q);
    for (auto& [u, r] : moved.terms()) out.add(u, p * r);
  }
  return out;
}

NilHeckeElement NilHeckeElement::operator*(const NilHeckeElement& o) const {
  NilHeckeElement out(datum_);
  for (auto& [w, q] : o.terms_) {
    NilHeckeElement left = commute(*this, q);  // (sum p_v A_v) q
    for (auto& [u, p] : left.terms()) {
      WeylElement uw = u * w;
      if (uw.length() == u.length() + w.length()) out.add(uw, p);
    }
  }
  return out;
}

NilHeckeElement group_element(const WeylElement& w) {
  auto d = w.datum();
  NilHeckeElement e = NilHeckeElement::unit(d);
  for (int i : w.reduced_word()) {
    // e *= (1 - alpha_i A_i)
    NilHeckeElement si(d);
    si.add(WeylElement::identity(d), MPoly::constant(d->xrank(), Rat(1)));
    si.add(WeylElement::simple(d, i), -simple_root_poly(d, i));
    e = e * si;
  }
  return e;
}

std::string NilHeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, const PolyS*>> items;
  for (auto& [w, q] : terms_) items.push_back({w.reduced_word(), &q});
  std::sort(items.begin(), items.end(), [](auto& a, auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [word, q] : items) {
    if (!first) os << " + ";
    first = false;
    os << "(" << q->str(datum_->var_names()) << ")*A[";
    for (size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i];
    os << "]";
  }
  return os.str();
}

// ---- localizations ----

namespace {

struct DCacheKey {
  std::vector<long long> v, w;
  bool operator<(const DCacheKey& o) const {
    return std::tie(v, w) < std::tie(o.v, o.w);
  }
};

std::map<std::pair<const void*, DCacheKey>, PolyS>& d_cache() {
  static std::map<std::pair<const void*, DCacheKey>, PolyS> c;
  return c;
}
std::mutex d_mu;

}  // namespace

PolyS d_recursive(const WeylElement& v, const WeylElement& w) {
  auto d = v.datum();
  DCacheKey key{v.matrix(), w.matrix()};
  {
    std::scoped_lock lk(d_mu);
    auto it = d_cache().find({d.get(), key});
    if (it != d_cache().end()) return it->second;
  }
  PolyS out(d->xrank());
  if (w.is_identity()) {
    out = v.is_identity() ? MPoly::constant(d->xrank(), Rat(1)) : MPoly(d->xrank());
  } else {
    int i = w.right_descents().front();
    WeylElement s = WeylElement::simple(d, i);
    WeylElement ws = w * s;
    out = d_recursive(v, ws);
    WeylElement vs = v * s;
    if (vs.length() < v.length()) {
      // (w . alpha_i) d_{vs, ws}
      PolyS walpha = weyl_act(w, simple_root_poly(d, i));
      out = out + walpha * d_recursive(vs, ws);
    }
  }
  std::scoped_lock lk(d_mu);
  return d_cache().emplace(std::make_pair(d.get(), key), out).first->second;
}

PolyS d_subexpression(const WeylElement& v, const WeylElement& w) {
  auto d = v.datum();
  auto word = w.reduced_word();
  int l = (int)word.size();
  PolyS acc(d->xrank());
  // iterate over bit masks; for l > 20 this would be hopeless, fine here
  for (long mask = 0; mask < (1L << l); ++mask) {
    // subword must multiply (as A's) to A_v, i.e. be a reduced word for v
    WeylElement u = WeylElement::identity(d);
    bool dead = false;
    for (int j = 0; j < l && !dead; ++j)
      if (mask & (1L << j)) {
        WeylElement us = u * WeylElement::simple(d, word[j]);
        if (us.length() != u.length() + 1) dead = true;
        u = us;
      }
    if (dead || !(u == v)) continue;
    // term: product over j of (alpha_{i_j}^{b_j} s_{i_j}) applied to 1
    PolyS term = MPoly::constant(d->xrank(), Rat(1));
    WeylElement g = WeylElement::identity(d);
    for (int j = 0; j < l; ++j) {
      if (mask & (1L << j))
        term = term * weyl_act(g, simple_root_poly(d, word[j]));
      g = g * WeylElement::simple(d, word[j]);
    }
    acc = acc + term;
  }
  // the formula computes (-1)^{l(v)} d_{vw}
  if (v.length() % 2) acc = -acc;
  return acc;
}

PolyS xi_billey(const WeylElement& v, const WeylElement& w) {
  // identical subexpression structure; kept separate as the named dual route
  auto d = v.datum();
  auto word = w.reduced_word();
  int l = (int)word.size();
  int lv = v.length();
  PolyS acc(d->xrank());
  std::vector<WeylElement> prefix{WeylElement::identity(d)};
  for (int j = 0; j < l; ++j)
    prefix.push_back(prefix.back() * WeylElement::simple(d, word[j]));
  // DFS over positions of a reduced subword for v
  std::function<void(int, const WeylElement&, const PolyS&, int)> rec =
      [&](int pos, const WeylElement& u, const PolyS& term, int picked) {
        if (picked == lv) {
          if (u == v) acc = acc + term;
          return;
        }
        if (pos == l || l - pos < lv - picked) return;
        // skip position pos
        rec(pos + 1, u, term, picked);
        // pick position pos
        WeylElement us = u * WeylElement::simple(d, word[pos]);
        if (us.length() == u.length() + 1) {
          PolyS beta = weyl_act(prefix[pos], simple_root_poly(d, word[pos]));
          rec(pos + 1, us, term * beta, picked + 1);
        }
      };
  rec(0, WeylElement::identity(d), MPoly::constant(d->xrank(), Rat(1)), 0);
  if (lv % 2) acc = -acc;
  return acc;
}

PolyS xi(const WeylElement& v, const WeylElement& w) { return d_recursive(v, w); }

PolyS xi_diagonal(const WeylElement& v) {
  auto d = v.datum();
  PolyS prod = MPoly::constant(d->xrank(), Rat(1));
  for (auto& root : v.inverse().inversions()) prod = prod * root_poly(d, root);
  if (v.length() % 2) prod = -prod;
  return prod;
}

PolyS GKMFunction::at(const WeylElement& w) const {
  auto it = values.find(w);
  return it == values.end() ? MPoly(datum->xrank()) : it->second;
}

bool gkm_condition_holds(const GKMFunction& f, const std::vector<WeylElement>& window,
                         int root_height_bound) {
  auto d = f.datum;
  std::map<std::vector<long long>, bool> in_window;
  for (auto& w : window) in_window[w.matrix()] = true;
  for (auto& root : weyl::positive_roots(d, root_height_bound)) {
    // build the reflection s_alpha
    // peel the root to a simple conjugate
    std::vector<long long> r = root;
    std::vector<int> conj;
    for (;;) {
      long long height = 0;
      for (auto x : r) height += x;
      if (height == 1) break;
      int which = -1;
      for (int i = 0; i < d->rank() && which < 0; ++i) {
        if (r[i] <= 0) continue;
        long long c = 0;
        for (int j = 0; j < d->rank(); ++j) c += d->cartan(i, j) * r[j];
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
      if (which < 0) return false;  // reduction failed; bound too small
      conj.push_back(d->labels()[which]);
    }
    int base = -1;
    for (int i = 0; i < d->rank(); ++i)
      if (r[i] == 1) base = i;
    WeylElement t = weyl::reflection(d, conj, d->labels()[base]);
    PolyS alpha = root_poly(d, root);
    for (auto& w : window) {
      WeylElement sw = t * w;
      if (!in_window.count(sw.matrix())) continue;
      PolyS diff = f.at(sw) - f.at(w);
      if (!diff.is_zero() && !diff.divisible_by(alpha)) return false;
    }
  }
  return true;
}

GKMFunction xi_function(const WeylElement& v, const std::vector<WeylElement>& window) {
  GKMFunction f;
  f.datum = v.datum();
  for (auto& w : window) {
    PolyS val = xi(v, w);
    if (!val.is_zero()) f.values[w] = val;
  }
  return f;
}

GKMFunction c_lambda(DatumPtr d, const PolyS& lambda_linear,
                     const std::vector<WeylElement>& window) {
  GKMFunction f;
  f.datum = d;
  for (auto& w : window) {
    PolyS val = weyl_act(w, lambda_linear);
    if (!val.is_zero()) f.values[w] = val;
  }
  return f;
}

std::map<WeylElement, PolyS> gkm_expand(const GKMFunction& f,
                                        const std::vector<WeylElement>& window) {
  // window must be sorted by length then lex word; peel minimal support
  std::vector<WeylElement> order = window;
  std::sort(order.begin(), order.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.reduced_word() < b.reduced_word();
  });
  GKMFunction rest = f;
  std::map<WeylElement, PolyS> out;
  for (;;) {
    const WeylElement* x = nullptr;
    for (auto& w : order)
      if (!rest.at(w).is_zero()) {
        x = &w;
        break;
      }
    if (!x) break;
    PolyS diag = xi_diagonal(*x);
    auto q = rest.at(*x).divide_exact(diag);
    if (!q) throw std::domain_error("function is not in the span of Schubert classes");
    out[*x] = *q;
    for (auto& w : order) {
      PolyS nv = rest.at(w) - *q * xi(*x, w);
      if (nv.is_zero())
        rest.values.erase(w);
      else
        rest.values[w] = nv;
    }
  }
  return out;
}

std::map<WeylElement, PolyS> schubert_product(const WeylElement& u,
                                              const WeylElement& v, int length_bound) {
  auto d = u.datum();
  std::vector<WeylElement> window;
  for (auto& level : weyl::elements_by_length(d, length_bound))
    for (auto& w : level) window.push_back(w);
  GKMFunction prod;
  prod.datum = d;
  for (auto& w : window) {
    PolyS val = xi(u, w) * xi(v, w);
    if (!val.is_zero()) prod.values[w] = val;
  }
  return gkm_expand(prod, window);
}

std::map<std::pair<WeylElement, WeylElement>, PolyS> coproduct(const WeylElement& w) {
  auto d = w.datum();
  std::map<std::pair<WeylElement, WeylElement>, PolyS> acc;
  acc[{WeylElement::identity(d), WeylElement::identity(d)}] =
      MPoly::constant(d->xrank(), Rat(1));
  for (int i : w.reduced_word()) {
    WeylElement s = WeylElement::simple(d, i);
    PolyS alpha = simple_root_poly(d, i);
    std::map<std::pair<WeylElement, WeylElement>, PolyS> next;
    auto addterm = [&](const WeylElement& a, const WeylElement& b, const PolyS& p) {
      if (p.is_zero()) return;
      auto key = std::make_pair(a, b);
      auto it = next.find(key);
      if (it == next.end())
        next[key] = p;
      else {
        it->second = it->second + p;
        if (it->second.is_zero()) next.erase(it);
      }
    };
    for (auto& [key, p] : acc) {
      const WeylElement& a = key.first;
      const WeylElement& b = key.second;
      // (p A_a (x) A_b) * (A_i (x) 1 + 1 (x) A_i - alpha_i A_i (x) A_i)
      WeylElement as = a * s, bs = b * s;
      bool a_up = as.length() == a.length() + 1;
      bool b_up = bs.length() == b.length() + 1;
      if (a_up) addterm(as, b, p);
      if (b_up) addterm(a, bs, p);
      if (b_up) {
        // commute alpha through A_a: A_a (-alpha) = sum_x r_x A_x, then A_x A_i
        NilHeckeElement moved = commute(NilHeckeElement::basis(a), -alpha);
        for (auto& [x, r] : moved.terms()) {
          WeylElement xs = x * s;
          if (xs.length() == x.length() + 1) addterm(xs, bs, p * r);
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

PolyS coprod_struct(const WeylElement& u, const WeylElement& v, const WeylElement& w) {
  auto cp = coproduct(w);
  auto it = cp.find({u, v});
  return it == cp.end() ? MPoly(w.datum()->xrank()) : it->second;
}

std::vector<WeylElement> parabolic_basis(DatumPtr d, const std::vector<int>& J,
                                         int length_bound) {
  return weyl::grassmannian_reps(d, J, length_bound);
}

bool constant_on_cosets(const GKMFunction& f, const std::vector<int>& J,
                        const std::vector<WeylElement>& window) {
  std::map<std::vector<long long>, bool> in_window;
  for (auto& w : window) in_window[w.matrix()] = true;
  for (auto& w : window)
    for (int j : J) {
      WeylElement wj = w * WeylElement::simple(f.datum, j);
      if (!in_window.count(wj.matrix())) continue;
      if (!(f.at(w) - f.at(wj)).is_zero()) return false;
    }
  return true;
}

NilHeckeElement forget_equivariance(const NilHeckeElement& a) {
  NilHeckeElement out(a.datum());
  for (auto& [w, q] : a.terms())
    out.add(w, MPoly::constant(a.datum()->xrank(), q.constant_term()));
  return out;
}

std::map<WeylElement, Rat> forget_expansion(const std::map<WeylElement, PolyS>& exp) {
  std::map<WeylElement, Rat> out;
  for (auto& [w, q] : exp) {
    Rat c = q.constant_term();
    if (sgn(c) != 0) out[w] = c;
  }
  return out;
}

}  // namespace kst::nilhecke
