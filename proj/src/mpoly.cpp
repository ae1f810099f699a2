#include "kst/mpoly.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace kst {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (!kst::is_zero(c)) p.terms_[Expo(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(int nvars, int idx) {
  MPoly p(nvars);
  Expo e(nvars, 0);
  e.at(idx) = 1;
  p.terms_[e] = Rat(1);
  return p;
}

MPoly MPoly::linear(const std::vector<Rat>& coeffs) {
  MPoly p((int)coeffs.size());
  for (int i = 0; i < (int)coeffs.size(); ++i) {
    if (!kst::is_zero(coeffs[i])) {
      Expo e(coeffs.size(), 0);
      e[i] = 1;
      p.terms_[e] = coeffs[i];
    }
  }
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Expo(nvars_, 0);
}

Rat MPoly::constant_term() const {
  auto it = terms_.find(Expo(nvars_, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.rbegin()->first) d += e;
  return d;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
  assert((int)e.size() == nvars_);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!kst::is_zero(c)) terms_[e] = c;
  } else {
    it->second += c;
    if (kst::is_zero(it->second)) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  assert(nvars_ == o.nvars_);
  MPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  assert(nvars_ == o.nvars_);
  MPoly r = *this;
  for (auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  assert(nvars_ == o.nvars_);
  MPoly r(nvars_);
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      Expo e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r(nvars_);
  if (kst::is_zero(c)) return r;
  for (auto& [e, a] : terms_) r.terms_[e] = a * c;
  return r;
}

bool MPoly::operator<(const MPoly& o) const {
  if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  ExpoCmp cmp;
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (cmp(it->first, jt->first)) return true;
    if (cmp(jt->first, it->first)) return false;
    int s = ::cmp(it->second, jt->second);
    if (s != 0) return s < 0;
  }
  return it == terms_.end() && jt != o.terms_.end();
}

MPoly MPoly::pow(int e) const {
  assert(e >= 0);
  MPoly r = constant(nvars_, Rat(1));
  MPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

const MPoly::Expo& MPoly::lead_expo() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const Rat& MPoly::lead_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  assert(nvars_ == d.nvars_);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  MPoly q(nvars_), r = *this;
  const Expo& de = d.lead_expo();
  while (!r.is_zero()) {
    const Expo& re = r.lead_expo();
    Expo qe(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      qe[i] = re[i] - de[i];
      if (qe[i] < 0) return std::nullopt;
    }
    Rat qc = r.lead_coeff() / d.lead_coeff();
    MPoly t(nvars_);
    t.terms_[qe] = qc;
    q.add_term(qe, qc);
    r = r - t * d;
  }
  return q;
}

Rat MPoly::content() const {
  if (terms_.empty()) return Rat(0);
  Int num_g(0), den_l(1);
  for (auto& [e, c] : terms_) {
    mpz_gcd(num_g.get_mpz_t(), num_g.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_l.get_mpz_t(), den_l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat g(num_g, den_l);
  g.canonicalize();
  if (sgn(lead_coeff()) < 0) g = -g;
  return g;
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return *this;
  Rat g = content();
  MPoly r(nvars_);
  for (auto& [e, c] : terms_) r.terms_[e] = c / g;
  return r;
}

namespace {

// view p as a univariate polynomial in x_var with MPoly coefficients
std::vector<MPoly> coeffs_in(const MPoly& p, int var) {
  std::vector<MPoly> cs(p.degree_in(var) + 1, MPoly(p.nvars()));
  for (auto& [e, c] : p.terms()) {
    MPoly::Expo e2 = e;
    int d = e2[var];
    e2[var] = 0;
    cs[d].add_term(e2, c);
  }
  return cs;
}

MPoly from_coeffs(const std::vector<MPoly>& cs, int var, int nvars) {
  MPoly r(nvars);
  for (int d = 0; d < (int)cs.size(); ++d)
    for (auto& [e, c] : cs[d].terms()) {
      MPoly::Expo e2 = e;
      e2[var] = d;
      r.add_term(e2, c);
    }
  return r;
}

// content of p with respect to the variables other than var
MPoly content_wrt(const MPoly& p, int var) {
  MPoly g(p.nvars());
  for (auto& c : coeffs_in(p, var)) g = MPoly::gcd(g, c);
  return g;
}

// pseudo-remainder of a by b in variable var, stripping content after each
// reduction step to keep coefficients small
MPoly pseudo_rem(MPoly a, const MPoly& b, int var) {
  int db = b.degree_in(var);
  auto bc = coeffs_in(b, var);
  MPoly lb = bc[db];
  int nv = a.nvars();
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    auto ac = coeffs_in(a, var);
    MPoly la = ac[da];
    MPoly shift = MPoly::variable(nv, var).pow(da - db);
    a = lb * a - la * shift * b;
    if (a.is_zero()) break;
    MPoly cont = content_wrt(a, var);
    if (!cont.is_constant()) a = *a.divide_exact(cont);
    a = a.primitive_part();
  }
  return a;
}

}  // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b) {
  assert(a.nvars() == b.nvars());
  int nv = a.nvars();
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return constant(nv, Rat(1));
  // mutual-divisibility fast paths cover most reductions in practice
  if (a.total_degree() >= b.total_degree() && a.divisible_by(b))
    return b.primitive_part();
  if (b.total_degree() >= a.total_degree() && b.divisible_by(a))
    return a.primitive_part();
  int var = -1;
  for (int v = nv - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) {
      var = v;
      break;
    }
  if (a.degree_in(var) == 0 || b.degree_in(var) == 0) {
    // var appears in only one of them: gcd divides the contents
    auto ca = coeffs_in(a, var);
    auto cb = coeffs_in(b, var);
    MPoly g(nv);
    for (auto& c : ca) g = gcd(g, c);
    MPoly h(nv);
    for (auto& c : cb) h = gcd(h, c);
    return gcd(g, h);
  }
  MPoly ca = content_wrt(a, var), cb = content_wrt(b, var);
  MPoly pa = *a.divide_exact(ca), pb = *b.divide_exact(cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    MPoly r = pseudo_rem(pa, pb, var);
    pa = pb;
    if (r.is_zero()) {
      pb = r;
    } else {
      MPoly cr = content_wrt(r, var);
      if (!cr.is_constant()) r = *r.divide_exact(cr);
      pb = r.primitive_part();
    }
  }
  MPoly g = gcd(ca, cb) * pa;
  return g.primitive_part();
}

MPoly MPoly::substitute(const std::vector<MPoly>& subs) const {
  assert((int)subs.size() == nvars_);
  int target = subs.empty() ? 0 : subs[0].nvars();
  MPoly r(target);
  for (auto& [e, c] : terms_) {
    MPoly t = constant(target, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) t = t * subs[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

Rat MPoly::evaluate(const std::vector<Rat>& vals) const {
  assert((int)vals.size() == nvars_);
  Rat r(0);
  for (auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= vals[i];
    r += t;
  }
  return r;
}

bool MPoly::nonneg_integer_coeffs() const {
  for (auto& [e, c] : terms_)
    if (sgn(c) < 0 || c.get_den() != 1) return false;
  return true;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print high-degree terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat ac = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (ac == 1);
    bool has_var = false;
    for (int i = 0; i < nvars_; ++i) has_var = has_var || e[i] > 0;
    if (!unit || !has_var) os << ac.get_str();
    bool need_star = !unit || !has_var;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace kst
