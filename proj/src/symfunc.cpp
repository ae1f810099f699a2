#include "kst/symfunc.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "kst/linalg.hpp"

namespace kst::symfunc {

QT qt_zero() { return QT(2); }
QT qt_one() { return QT::constant(2, Rat(1)); }
QT qt_rat(const Rat& r) { return QT::constant(2, r); }
QT qt_int(long v) { return QT::constant(2, Rat(v)); }
QT qt_q() { return QT::variable(2, 0); }
QT qt_t() { return QT::variable(2, 1); }

static const std::vector<std::string> kQTNames = {"q", "t"};

std::string qt_str(const QT& c) { return c.str(kQTNames); }

QT subs_t(const QT& c, const QT& value) {
  if (!value.is_polynomial()) throw std::invalid_argument("substitute by polynomials only");
  return c.substitute(1, value.num() * (Rat(1) / value.den().constant_term()));
}

QT subs_q(const QT& c, const QT& value) {
  if (!value.is_polynomial()) throw std::invalid_argument("substitute by polynomials only");
  return c.substitute(0, value.num() * (Rat(1) / value.den().constant_term()));
}

std::string basis_name(Basis b, int k) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::HLQp: return "Qp";
    case Basis::MacH: return "H";
    case Basis::ks: return "ks" + std::to_string(k);
    case Basis::dks: return "dks" + std::to_string(k);
    case Basis::F: return "F" + std::to_string(k);
  }
  return "?";
}

SymFunc SymFunc::unit(Basis b, int k) {
  SymFunc f(b, k);
  f.set(Partition{}, qt_one());
  return f;
}

SymFunc SymFunc::generator(Basis b, const Partition& la, int k) {
  SymFunc f(b, k);
  f.set(la, qt_one());
  return f;
}

QT SymFunc::coeff(const Partition& la) const {
  auto it = terms_.find(la);
  return it == terms_.end() ? qt_zero() : it->second;
}

void SymFunc::set(const Partition& la, const QT& c) {
  if (c.is_zero())
    terms_.erase(la);
  else
    terms_[la] = c;
}

void SymFunc::add(const Partition& la, const QT& c) {
  auto it = terms_.find(la);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[la] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SymFunc::max_degree() const {
  int d = 0;
  for (auto& [la, c] : terms_) d = std::max(d, la.size());
  return d;
}

bool SymFunc::is_homogeneous() const {
  int d = -1;
  for (auto& [la, c] : terms_) {
    if (d < 0) d = la.size();
    if (la.size() != d) return false;
  }
  return true;
}

SymFunc SymFunc::component(int degree) const {
  SymFunc f(basis_, k_);
  for (auto& [la, c] : terms_)
    if (la.size() == degree) f.set(la, c);
  return f;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  assert(basis_ == o.basis_ && k_ == o.k_);
  SymFunc f = *this;
  for (auto& [la, c] : o.terms_) f.add(la, c);
  return f;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
  return *this + o * qt_int(-1);
}

SymFunc SymFunc::operator*(const QT& c) const {
  SymFunc f(basis_, k_);
  if (c.is_zero()) return f;
  for (auto& [la, co] : terms_) f.set(la, co * c);
  return f;
}

bool SymFunc::operator==(const SymFunc& o) const {
  return basis_ == o.basis_ && k_ == o.k_ && terms_ == o.terms_;
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  // graded lex-ascending display: s[1,1,1] before s[2,1] before s[3]
  std::vector<const std::pair<const Partition, QT>*> items;
  for (auto& kv : terms_) items.push_back(&kv);
  std::sort(items.begin(), items.end(), [](auto* a, auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first.parts() < b->first.parts();
  });
  std::ostringstream os;
  std::string bname = basis_name(basis_, k_);
  bool first = true;
  for (auto* kv : items) {
    const auto& [la, c] = *kv;
    std::string cs = qt_str(c);
    bool neg = cs.size() && cs[0] == '-';
    bool simple = c.is_polynomial() && c.num().terms().size() <= 1;
    if (first) {
      if (neg && simple) {
        os << "-";
        cs = cs.substr(1);
      }
      first = false;
    } else {
      if (neg && simple) {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    }
    if (!simple) {
      os << "(" << qt_str(c) << ")*";
    } else if (cs != "1") {
      os << cs << "*";
    }
    os << bname;
    os << "[";
    for (size_t i = 0; i < la.parts().size(); ++i)
      os << (i ? ", " : "") << la.parts()[i];
    os << "]";
  }
  return os.str();
}

std::vector<Partition> partitions_of_degree(int d) {
  return shapes::partitions_of(d);
}

// ---- transition matrices ----

namespace {

using PExp = std::map<Partition, Rat>;  // expansion in a multiplicative basis

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

// one-part expansions via Newton's identities
// r h_r = sum_{i=1}^r h_{r-i} p_i        -> h_r in p
// p_r = r h_r - sum_{i=1}^{r-1} h_{r-i} p_i -> p_r in h
std::vector<PExp> h_in_p_table(int dmax) {
  std::vector<PExp> h(dmax + 1);
  h[0][Partition{}] = Rat(1);
  for (int r = 1; r <= dmax; ++r) {
    PExp acc;
    for (int i = 1; i <= r; ++i)
      for (auto& [mu, c] : h[r - i]) {
        Partition nu = concat(mu, Partition{i});
        acc[nu] += c;
      }
    for (auto& [mu, c] : acc) {
      Rat v = c / r;
      if (sgn(v) != 0) h[r][mu] = v;
    }
  }
  return h;
}

std::vector<PExp> e_in_p_table(int dmax) {
  std::vector<PExp> e(dmax + 1);
  e[0][Partition{}] = Rat(1);
  for (int r = 1; r <= dmax; ++r) {
    PExp acc;
    for (int i = 1; i <= r; ++i) {
      Rat sign = (i % 2 == 1) ? Rat(1) : Rat(-1);
      for (auto& [mu, c] : e[r - i]) acc[concat(mu, Partition{i})] += sign * c;
    }
    for (auto& [mu, c] : acc) {
      Rat v = c / r;
      if (sgn(v) != 0) e[r][mu] = v;
    }
  }
  return e;
}

std::vector<PExp> p_in_h_table(int dmax) {
  std::vector<PExp> p(dmax + 1);
  for (int r = 1; r <= dmax; ++r) {
    PExp acc;
    acc[Partition{r}] = Rat(r);
    for (int i = 1; i < r; ++i)
      for (auto& [mu, c] : p[i]) acc[concat(mu, Partition{r - i})] -= c;
    p[r] = acc;
  }
  if (dmax >= 0) p[0][Partition{}] = Rat(1);
  return p;
}

PExp mult_exp(const PExp& a, const PExp& b) {
  PExp out;
  for (auto& [la, c] : a)
    for (auto& [mu, d] : b) {
      Rat v = c * d;
      auto key = concat(la, mu);
      out[key] += v;
    }
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

PExp product_over_parts(const Partition& la, const std::vector<PExp>& one_part) {
  PExp acc;
  acc[Partition{}] = Rat(1);
  for (int part : la.parts()) acc = mult_exp(acc, one_part[part]);
  return acc;
}

// coefficient of m_nu in m_mu * p_r
// = #{positions i of nu with nu_i >= r and sort(nu - r e_i) = mu}
PExp mult_m_by_p(const PExp& f, int r) {
  PExp out;
  for (auto& [mu, c] : f) {
    // targets: insert value r into mu at a part or as a new part
    // iterate over candidate nu by adding r to one entry of mu (incl. zero)
    std::vector<int> base = mu.parts();
    base.push_back(0);
    std::vector<std::vector<int>> seen;
    for (size_t i = 0; i < base.size(); ++i) {
      std::vector<int> nu = base;
      nu[i] += r;
      std::sort(nu.rbegin(), nu.rend());
      while (!nu.empty() && nu.back() == 0) nu.pop_back();
      if (std::find(seen.begin(), seen.end(), nu) != seen.end()) continue;
      seen.push_back(nu);
      Partition nup(nu);
      // count positions j of nup with sort(nup - r e_j) = mu
      int cnt = 0;
      for (int j = 0; j < nup.length(); ++j) {
        if (nup.parts()[j] < r) continue;
        std::vector<int> test = nup.parts();
        test[j] -= r;
        std::sort(test.rbegin(), test.rend());
        while (!test.empty() && test.back() == 0) test.pop_back();
        if (Partition(test) == mu) ++cnt;
      }
      if (cnt) out[nup] += c * cnt;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

struct DegreeTables {
  std::vector<Partition> parts;           // partitions of d, graded revlex
  std::map<Partition, int> index;
  std::map<std::pair<int, int>, Mat<Rat>> conv;  // (from, to) -> matrix
};

class TransitionCache {
 public:
  static TransitionCache& get() {
    static TransitionCache c;
    return c;
  }

  // matrix taking coordinate vectors in `from` to coordinates in `to`
  const Mat<Rat>& matrix(int d, Basis from, Basis to) {
    std::scoped_lock lk(mu_);
    DegreeTables& T = tables(d);
    auto key = std::make_pair((int)from, (int)to);
    auto it = T.conv.find(key);
    if (it != T.conv.end()) return it->second;
    Mat<Rat> M = compute(d, from, to);
    return T.conv.emplace(key, std::move(M)).first->second;
  }

  const std::vector<Partition>& partitions(int d) {
    std::scoped_lock lk(mu_);
    return tables(d).parts;
  }

 private:
  std::mutex mu_;
  std::map<int, DegreeTables> tables_;

  DegreeTables& tables(int d) {
    auto it = tables_.find(d);
    if (it != tables_.end()) return it->second;
    DegreeTables T;
    T.parts = shapes::partitions_of(d);
    for (int i = 0; i < (int)T.parts.size(); ++i) T.index[T.parts[i]] = i;
    return tables_.emplace(d, std::move(T)).first->second;
  }

  Mat<Rat> from_pexp(int d, const std::vector<PExp>& exps) {
    DegreeTables& T = tables(d);
    int n = (int)T.parts.size();
    Mat<Rat> M(n, n, Rat(0));
    for (int col = 0; col < n; ++col)
      for (auto& [mu, c] : exps[col]) M(T.index.at(mu), col) = c;
    return M;
  }

  Mat<Rat> compute(int d, Basis from, Basis to) {
    DegreeTables& T = tables(d);
    int n = (int)T.parts.size();
    if (from == to) {
      Mat<Rat> I(n, n, Rat(0));
      for (int i = 0; i < n; ++i) I(i, i) = Rat(1);
      return I;
    }
    if (to == Basis::p) {
      if (from == Basis::h || from == Basis::e) {
        auto table = from == Basis::h ? h_in_p_table(d) : e_in_p_table(d);
        std::vector<PExp> exps;
        for (auto& la : T.parts) exps.push_back(product_over_parts(la, table));
        return from_pexp(d, exps);
      }
      if (from == Basis::s) {
        // s -> h -> p
        return compose(d, Basis::h, Basis::p, matrix_nolock(d, Basis::s, Basis::h));
      }
      if (from == Basis::m) {
        return *invert(matrix_nolock(d, Basis::p, Basis::m), Rat(0), Rat(1));
      }
    }
    if (from == Basis::p) {
      if (to == Basis::h) {
        auto table = p_in_h_table(d);
        std::vector<PExp> exps;
        for (auto& la : T.parts) exps.push_back(product_over_parts(la, table));
        return from_pexp(d, exps);
      }
      if (to == Basis::m) {
        std::vector<PExp> exps;
        for (auto& la : T.parts) {
          PExp f;
          f[Partition{}] = Rat(1);
          for (int part : la.parts()) f = mult_m_by_p(f, part);
          exps.push_back(f);
        }
        return from_pexp(d, exps);
      }
      if (to == Basis::e) {
        // p -> e: invert e -> p
        return *invert(matrix_nolock(d, Basis::e, Basis::p), Rat(0), Rat(1));
      }
      if (to == Basis::s) {
        return compose(d, Basis::h, Basis::s, matrix_nolock(d, Basis::p, Basis::h));
      }
    }
    if (from == Basis::s && to == Basis::h) {
      // Jacobi-Trudi: s_la = det(h_{la_i - i + j})
      std::vector<PExp> exps;
      for (auto& la : T.parts) {
        PExp acc;
        int l = la.length();
        if (l == 0) {
          acc[Partition{}] = Rat(1);
        } else {
          std::vector<int> perm(l);
          for (int i = 0; i < l; ++i) perm[i] = i;
          do {
            std::vector<int> rows;
            bool zero = false;
            int sign_count = 0;
            for (int i = 0; i < l && !zero; ++i) {
              int idx = la.parts()[i] - (i + 1) + (perm[i] + 1);
              if (idx < 0) zero = true;
              else if (idx > 0) rows.push_back(idx);
            }
            if (!zero) {
              // count permutation sign
              for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j)
                  if (perm[i] > perm[j]) ++sign_count;
              std::sort(rows.rbegin(), rows.rend());
              acc[Partition(rows)] += sign_count % 2 ? Rat(-1) : Rat(1);
            }
          } while (std::next_permutation(perm.begin(), perm.end()));
          for (auto it = acc.begin(); it != acc.end();)
            it = sgn(it->second) == 0 ? acc.erase(it) : std::next(it);
        }
        exps.push_back(acc);
      }
      return from_pexp(d, exps);
    }
    if (from == Basis::h && to == Basis::s) {
      return *invert(matrix_nolock(d, Basis::s, Basis::h), Rat(0), Rat(1));
    }
    // generic route through p
    Mat<Rat> a = matrix_nolock(d, from, Basis::p);
    return compose(d, Basis::p, to, a);
  }

  // note: callers already hold the lock
  const Mat<Rat>& matrix_nolock(int d, Basis from, Basis to) {
    DegreeTables& T = tables(d);
    auto key = std::make_pair((int)from, (int)to);
    auto it = T.conv.find(key);
    if (it != T.conv.end()) return it->second;
    Mat<Rat> M = compute(d, from, to);
    return T.conv.emplace(key, std::move(M)).first->second;
  }

  Mat<Rat> compose(int d, Basis mid, Basis to, const Mat<Rat>& first) {
    const Mat<Rat>& second = matrix_nolock(d, mid, to);
    int n = first.rows;
    Mat<Rat> M(n, n, Rat(0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (sgn(second(i, k)) == 0) continue;
        for (int j = 0; j < n; ++j) {
          if (sgn(first(k, j)) == 0) continue;
          M(i, j) += second(i, k) * first(k, j);
        }
      }
    return M;
  }
};

bool classical(Basis b) {
  return b == Basis::m || b == Basis::h || b == Basis::e || b == Basis::p ||
         b == Basis::s;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (!classical(f.basis()) || !classical(target))
    throw std::invalid_argument("convert handles the classical bases only");
  if (f.basis() == target) return f;
  SymFunc out(target);
  auto& cache = TransitionCache::get();
  // split into homogeneous components
  std::map<int, std::vector<std::pair<Partition, QT>>> comps;
  for (auto& [la, c] : f.terms()) comps[la.size()].push_back({la, c});
  for (auto& [d, items] : comps) {
    const auto& parts = cache.partitions(d);
    const auto& M = cache.matrix(d, f.basis(), target);
    std::map<Partition, int> index;
    for (int i = 0; i < (int)parts.size(); ++i) index[parts[i]] = i;
    std::vector<QT> vec(parts.size(), qt_zero());
    for (auto& [la, c] : items) vec[index.at(la)] = c;
    for (int i = 0; i < (int)parts.size(); ++i) {
      QT acc = qt_zero();
      for (int j = 0; j < (int)parts.size(); ++j) {
        if (vec[j].is_zero() || sgn(M(i, j)) == 0) continue;
        acc += vec[j] * qt_rat(M(i, j));
      }
      out.add(parts[i], acc);
    }
  }
  return out;
}

SymFunc mul(const SymFunc& f, const SymFunc& g) {
  Basis out_basis = f.basis();
  if (!classical(out_basis)) throw std::invalid_argument("mul needs classical bases");
  SymFunc fp = convert(f, Basis::p), gp = convert(g, Basis::p);
  SymFunc prod(Basis::p);
  for (auto& [la, c] : fp.terms())
    for (auto& [mu, d] : gp.terms()) {
      std::vector<int> parts = la.parts();
      parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
      std::sort(parts.rbegin(), parts.rend());
      prod.add(Partition(parts), c * d);
    }
  return convert(prod, out_basis);
}

QT scalar(const SymFunc& f, const SymFunc& g, ScalarMode mode) {
  SymFunc fp = convert(f, Basis::p), gp = convert(g, Basis::p);
  QT total = qt_zero();
  for (auto& [la, c] : fp.terms()) {
    QT d = gp.coeff(la);
    if (d.is_zero()) continue;
    QT z = qt_rat(Rat(la.zstat()));
    QT factor = z;
    if (mode == ScalarMode::t) {
      for (int part : la.parts())
        factor *= qt_one() - qt_t().pow(part);
    } else if (mode == ScalarMode::qt) {
      for (int part : la.parts())
        factor *= (qt_one() - qt_q().pow(part)) * (qt_one() - qt_t().pow(part));
    }
    total += c * d * factor;
  }
  return total;
}

SymFunc theta(const SymFunc& f, const QT& a, const QT& b) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p);
  for (auto& [la, c] : fp.terms()) {
    QT factor = qt_one();
    for (int part : la.parts()) {
      QT denom = qt_one() - b.pow(part);
      if (denom.is_zero())
        throw std::domain_error("theta substitution hits a vanishing denominator");
      factor *= (qt_one() - a.pow(part)) / denom;
    }
    out.add(la, c * factor);
  }
  return convert(out, f.basis());
}

SymFunc transform_p(const SymFunc& f, const std::vector<QT>& numer_params,
                    const std::vector<QT>& denom_params) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p);
  for (auto& [la, c] : fp.terms()) {
    QT factor = qt_one();
    for (int part : la.parts()) {
      for (auto& a : numer_params) factor *= qt_one() - a.pow(part);
      for (auto& b : denom_params) {
        QT denom = qt_one() - b.pow(part);
        if (denom.is_zero()) throw std::domain_error("vanishing denominator");
        factor /= denom;
      }
    }
    out.add(la, c * factor);
  }
  return convert(out, f.basis());
}

SymFunc plethysm_p(int m, const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p);
  MPoly qm = MPoly::variable(2, 0).pow(m), tm = MPoly::variable(2, 1).pow(m);
  for (auto& [la, c] : fp.terms()) {
    std::vector<int> parts;
    for (int part : la.parts()) parts.push_back(part * m);
    QT cc = c.substitute(0, qm).substitute(1, tm);
    out.add(Partition(parts), cc);
  }
  return out;
}

SymFunc perp(const SymFunc& f, const SymFunc& g) {
  SymFunc fp = convert(f, Basis::p), gp = convert(g, Basis::p);
  SymFunc out(Basis::p);
  for (auto& [mu, c] : fp.terms()) {
    // prod_i p_{mu_i}^perp with p_r^perp = r d/dp_r: for each term of g,
    // remove the parts of mu one by one, picking up multiplicity factors
    for (auto& [nu, d] : gp.terms()) {
      std::vector<int> rest = nu.parts();
      QT factor = d * c;
      bool ok = true;
      for (int r : mu.parts()) {
        auto it = std::find(rest.begin(), rest.end(), r);
        if (it == rest.end()) {
          ok = false;
          break;
        }
        int mult = (int)std::count(rest.begin(), rest.end(), r);
        factor *= qt_rat(Rat((long)r * mult));
        rest.erase(it);
      }
      if (ok) out.add(Partition(rest), factor);
    }
  }
  return convert(out, g.basis());
}

SymFunc h_perp(int r, const SymFunc& g) {
  return perp(SymFunc::generator(Basis::h, Partition{r}), g);
}

SymFunc e_perp(int r, const SymFunc& g) {
  return perp(SymFunc::generator(Basis::e, Partition{r}), g);
}

SymFunc bernstein(int m, const SymFunc& f) {
  // S_m = sum_{r>=0} (-1)^r h_{m+r} e_r^perp
  int dmax = f.max_degree();
  SymFunc acc(Basis::p);
  for (int r = 0; r <= dmax; ++r) {
    if (m + r < 0) continue;
    SymFunc er = e_perp(r, f);
    if (er.is_zero()) continue;
    SymFunc h = m + r == 0 ? SymFunc::unit(Basis::h)
                           : SymFunc::generator(Basis::h, Partition{m + r});
    SymFunc term = mul(convert(h, Basis::p), er);
    acc = acc + convert(term, Basis::p) * qt_rat(r % 2 ? Rat(-1) : Rat(1));
  }
  return convert(acc, Basis::s);
}

SymFunc jing(int m, const SymFunc& f) {
  // B_m = sum_{j>=0} t^j S_{m+j} h_j^perp
  int dmax = f.max_degree();
  SymFunc acc(Basis::s);
  for (int j = 0; j <= dmax; ++j) {
    SymFunc hj = h_perp(j, f);
    if (hj.is_zero()) continue;
    acc = acc + bernstein(m + j, hj) * qt_t().pow(j);
  }
  return acc;
}

SymFunc hl_qp(const Partition& la) {
  SymFunc f = SymFunc::unit(Basis::s);
  for (int i = la.length(); i >= 1; --i) f = jing(la.part(i), f);
  return f;
}

SymFunc hl_p(const Partition& la) {
  // P_la = c_la Q'_la[X(1-t); t] with c_la = <Q'_la, Q'_la[X(1-t)]>^{-1}
  SymFunc qp = hl_qp(la);
  SymFunc twisted = transform_p(qp, {qt_t()}, {});
  QT c = scalar(qp, twisted, ScalarMode::hall);
  return twisted * (qt_one() / c);
}

SymFunc creation_B(const Partition& nu, const SymFunc& f, CreationFormula which) {
  int l = nu.length();
  if (l == 0) return f;
  if (which == CreationFormula::raising) {
    // prod_{i<j} (1 - t R_ij) B_{nu_1} ... B_{nu_l} applied to f
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j) pairs.push_back({i, j});
    SymFunc acc(Basis::s);
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<int> idx(nu.parts().begin(), nu.parts().end());
      int bits = 0;
      for (size_t p = 0; p < pairs.size(); ++p)
        if (mask & (1u << p)) {
          idx[pairs[p].first]++;
          idx[pairs[p].second]--;
          ++bits;
        }
      SymFunc term = f;
      for (int i = l - 1; i >= 0; --i) term = jing(idx[i], term);
      acc = acc + term * (qt_t().pow(bits) * qt_rat(bits % 2 ? Rat(-1) : Rat(1)));
    }
    return acc;
  }
  // sum formula: sum_{nu', mu} c^{nu'}_{mu nu} s_{nu'} (s_mu[X(t-1)])^perp
  int dmax = f.max_degree();
  SymFunc acc(Basis::s);
  SymFunc fs = convert(f, Basis::s);
  for (int dm = 0; dm <= dmax; ++dm) {
    for (const Partition& mu : shapes::partitions_of(dm)) {
      if (mu.length() > l) continue;
      // s_mu[X(t-1)] = omega-type transform: p_r -> (t^r - 1) p_r
      SymFunc smu = SymFunc::generator(Basis::s, mu);
      SymFunc twisted(Basis::p);
      {
        SymFunc sp = convert(smu, Basis::p);
        for (auto& [laq, c] : sp.terms()) {
          QT factor = qt_one();
          for (int part : laq.parts()) factor *= qt_t().pow(part) - qt_one();
          twisted.add(laq, c * factor);
        }
      }
      SymFunc applied = perp(twisted, fs);
      if (applied.is_zero()) continue;
      for (const Partition& nup : shapes::partitions_of(nu.size() + dm)) {
        if (nup.length() > l) continue;
        Rat c = lr_coeff(mu, nu, nup);
        if (sgn(c) == 0) continue;
        SymFunc piece = mul(SymFunc::generator(Basis::s, nup), applied);
        acc = acc + convert(piece, Basis::s) * qt_rat(c);
      }
    }
  }
  return acc;
}

Rat lr_coeff(const Partition& mu, const Partition& nu, const Partition& la) {
  if (mu.size() + nu.size() != la.size()) return Rat(0);
  SymFunc prod = mul(SymFunc::generator(Basis::s, mu), SymFunc::generator(Basis::s, nu));
  QT c = convert(prod, Basis::s).coeff(la);
  if (c.is_zero()) return Rat(0);
  return c.as_rat();
}

SymFunc macdonald_H(const Partition& la) {
  static std::map<Partition, SymFunc> cache;
  static std::mutex mu;
  std::scoped_lock lk(mu);
  auto it = cache.find(la);
  if (it != cache.end()) return it->second;
  int n = la.size();
  // Characterization by two triangularities plus a normalization:
  //   H_la[X(1-q)] in span{s_mu : mu >= la},
  //   H_la[X(1-t)] in span{s_mu : mu <= la},
  //   <H_la, s_(n)> = t^{n(la)}.
  // Both transforms are polynomial, so the linear system is small and exact.
  std::vector<Partition> order = shapes::partitions_of(n);
  int m = (int)order.size();
  std::map<Partition, int> index;
  for (int i = 0; i < m; ++i) index[order[i]] = i;
  // transform matrices  T[nu][mu] = [s_nu] s_mu[X(1-param)]
  static std::map<int, std::pair<Mat<QT>, Mat<QT>>> tcache;
  auto tit = tcache.find(n);
  if (tit == tcache.end()) {
    Mat<QT> Tq(m, m, qt_zero()), Tt(m, m, qt_zero());
    for (int j = 0; j < m; ++j) {
      SymFunc base = SymFunc::generator(Basis::s, order[j]);
      SymFunc xq = transform_p(base, {qt_q()}, {});
      SymFunc xt = transform_p(base, {qt_t()}, {});
      for (auto& [nu, c] : xq.terms()) Tq(index.at(nu), j) = c;
      for (auto& [nu, c] : xt.terms()) Tt(index.at(nu), j) = c;
    }
    tit = tcache.emplace(n, std::make_pair(std::move(Tq), std::move(Tt))).first;
  }
  const Mat<QT>& Tq = tit->second.first;
  const Mat<QT>& Tt = tit->second.second;
  for (const Partition& cur : order) {
    if (cache.count(cur)) continue;
    std::vector<std::vector<QT>> rows;
    std::vector<QT> rhs;
    for (int nu = 0; nu < m; ++nu) {
      bool above = order[nu].size() == n && shapes::dominates(order[nu], cur);
      if (!above) {
        std::vector<QT> row(m, qt_zero());
        for (int j = 0; j < m; ++j) row[j] = Tq(nu, j);
        rows.push_back(row);
        rhs.push_back(qt_zero());
      }
      bool below = shapes::dominates(cur, order[nu]);
      if (!below) {
        std::vector<QT> row(m, qt_zero());
        for (int j = 0; j < m; ++j) row[j] = Tt(nu, j);
        rows.push_back(row);
        rhs.push_back(qt_zero());
      }
    }
    {
      std::vector<QT> row(m, qt_zero());
      row[index.at(Partition{n})] = qt_one();
      rows.push_back(row);
      rhs.push_back(qt_t().pow(cur.nstat()));
    }
    Mat<QT> A((int)rows.size(), m, qt_zero());
    for (int r = 0; r < (int)rows.size(); ++r)
      for (int c = 0; c < m; ++c) A(r, c) = rows[r][c];
    auto sol = solve_linear(A, rhs, qt_zero());
    if (!sol) throw std::logic_error("Macdonald triangularity system failed");
    SymFunc H(Basis::s);
    for (int j = 0; j < m; ++j) H.add(order[j], (*sol)[j]);
    cache[cur] = H;
  }
  return cache.at(la);
}

SymFunc hl_qp_gram_schmidt(const Partition& la) {
  static std::map<Partition, SymFunc> cache;
  static std::mutex mu;
  std::scoped_lock lk(mu);
  auto it = cache.find(la);
  if (it != cache.end()) return it->second;
  int n = la.size();
  std::vector<Partition> order = shapes::partitions_of(n);
  std::vector<SymFunc> done;
  for (const Partition& cur : order) {
    auto jt = cache.find(cur);
    SymFunc g(Basis::s);
    if (jt != cache.end()) {
      g = jt->second;
    } else {
      g = SymFunc::generator(Basis::s, cur);
      for (auto& H : done) {
        QT num = scalar(g, H, ScalarMode::t);
        if (num.is_zero()) continue;
        QT den = scalar(H, H, ScalarMode::t);
        g = g - H * (num / den);
      }
      cache[cur] = g;
    }
    done.push_back(g);
  }
  return cache.at(la);
}

SymFunc omega(const SymFunc& f) {
  SymFunc fp = convert(f, Basis::p);
  SymFunc out(Basis::p);
  for (auto& [la, c] : fp.terms()) {
    int sign = (la.size() - la.length()) % 2 ? -1 : 1;
    out.add(la, c * qt_int(sign));
  }
  return convert(out, f.basis());
}

SymFunc restrict_parts(const SymFunc& f, int k, Basis basis) {
  SymFunc g = classical(basis) ? convert(f, basis) : f;
  SymFunc out(g.basis(), g.k());
  for (auto& [la, c] : g.terms())
    if (la.part(1) <= k) out.set(la, c);
  return out;
}

SymFunc to_hl_qp(const SymFunc& f) {
  // triangular solve: Q'_la = s_la + (dominance-larger terms)
  SymFunc rest = convert(f, Basis::s);
  SymFunc out(Basis::HLQp);
  int guard = 0;
  while (!rest.is_zero()) {
    // pick the lex-smallest partition (dominance-minimal among extremes)
    auto best = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.size() > best->first.size() ||
          (it->first.size() == best->first.size() &&
           it->first.parts() < best->first.parts()))
        best = it;
    Partition la = best->first;
    QT c = best->second;
    out.add(la, c);
    rest = rest - hl_qp(la) * c;
    if (++guard > 100000) throw std::logic_error("Qp expansion failed to terminate");
  }
  return out;
}

}  // namespace kst::symfunc
