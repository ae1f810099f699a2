#include "kst/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kst::weyl {

using shapes::SkewShape;
using shapes::residues_and_corners;
using shapes::core_to_bounded;
using shapes::addable_corners;
using shapes::removable_corners;

namespace {

int mod(long long a, int n) {
  int r = (int)(a % n);
  return r < 0 ? r + n : r;
}

}  // namespace

RootDatum::RootDatum(std::string name, std::vector<int> labels,
                     std::vector<std::vector<int>> cartan,
                     std::vector<std::vector<Rat>> roots_in_x,
                     std::vector<std::vector<Rat>> coroot_pairings,
                     std::vector<std::string> var_names)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      cartan_(std::move(cartan)),
      roots_in_x_(std::move(roots_in_x)),
      coroot_pairings_(std::move(coroot_pairings)),
      var_names_(std::move(var_names)) {
  int n = (int)labels_.size();
  if ((int)cartan_.size() != n) throw std::invalid_argument("cartan size mismatch");
  for (int i = 0; i < n; ++i) {
    if (cartan_[i][i] != 2) throw std::invalid_argument("cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && cartan_[i][j] > 0)
        throw std::invalid_argument("off-diagonal cartan entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw std::invalid_argument("cartan zero pattern must be symmetric");
    }
  }
  // <alpha^vee_i, alpha_j> = a_ij
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat s(0);
      for (int b = 0; b < xrank(); ++b)
        s += coroot_pairings_[i][b] * roots_in_x_[j][b];
      if (s != cartan_[i][j])
        throw std::invalid_argument("coroot/root pairing disagrees with cartan");
    }
  detect_affine();
}

void RootDatum::detect_affine() {
  // affine <=> singular Cartan with positive integer null vectors on both sides
  int n = rank();
  node0_ = -1;
  for (int i = 0; i < n; ++i)
    if (labels_[i] == 0) node0_ = i;
  if (node0_ < 0) return;
  // solve A^T a = 0 for column marks: sum_j a_j a_{ij} = 0
  auto null_vec = [&](bool rows) -> std::optional<std::vector<int>> {
    // integer kernel by rational elimination on the n x n system
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = Rat(rows ? cartan_[j][i] : cartan_[i][j]);
    // eliminate
    std::vector<int> pivot_col(n, -1);
    int pr = 0;
    for (int c = 0; c < n && pr < n; ++c) {
      int p = -1;
      for (int r = pr; r < n; ++r)
        if (sgn(m[r][c]) != 0) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(m[p], m[pr]);
      for (int r = 0; r < n; ++r) {
        if (r == pr || sgn(m[r][c]) == 0) continue;
        Rat f = m[r][c] / m[pr][c];
        for (int cc = 0; cc < n; ++cc) m[r][cc] -= f * m[pr][cc];
      }
      pivot_col[pr] = c;
      ++pr;
    }
    if (pr != n - 1) return std::nullopt;  // corank must be exactly 1
    // back out the kernel vector with free variable = last non-pivot column
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < pr; ++r) is_pivot[pivot_col[r]] = true;
    int freec = -1;
    for (int c = 0; c < n; ++c)
      if (!is_pivot[c]) freec = c;
    std::vector<Rat> v(n, Rat(0));
    v[freec] = Rat(1);
    for (int r = pr - 1; r >= 0; --r) {
      Rat s(0);
      for (int c = pivot_col[r] + 1; c < n; ++c) s += m[r][c] * v[c];
      v[pivot_col[r]] = -s / m[r][pivot_col[r]];
    }
    Int l(1);
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) {
      Rat x = v[i] * Rat(l);
      if (x.get_den() != 1 || sgn(x) <= 0) return std::nullopt;
      out[i] = (int)x.get_num().get_si();
    }
    // normalize to relatively prime entries
    int g = 0;
    for (int x : out) g = std::gcd(g, x);
    for (auto& x : out) x /= g;
    return out;
  };
  auto a = null_vec(false);
  auto av = null_vec(true);
  if (!a || !av) return;
  affine_ = true;
  marks_ = *a;
  comarks_ = *av;
  theta_.assign(n, 0);
  theta_vee_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (i == node0_) continue;
    theta_[i] = marks_[i];
    theta_vee_[i] = comarks_[i];
  }
}

int RootDatum::index_of_label(int label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("invalid generator label " + std::to_string(label));
}

Rat RootDatum::pair(int i, const std::vector<Rat>& v) const {
  Rat s(0);
  for (int b = 0; b < xrank(); ++b) s += coroot_pairings_[i][b] * v[b];
  return s;
}

std::vector<Rat> RootDatum::reflect_x(int i, const std::vector<Rat>& v) const {
  Rat c = pair(i, v);
  std::vector<Rat> out = v;
  for (int b = 0; b < xrank(); ++b) out[b] -= c * roots_in_x_[i][b];
  return out;
}

std::vector<Rat> RootDatum::fundamental_weight(int i) const {
  if (affine_) throw std::invalid_argument("fundamental weights: finite datum only");
  // solve <alpha^vee_j, omega_i> = delta_ij with omega_i in the span of roots
  int n = rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m[r][c] = Rat(cartan_[r][c]);
    m[r][n] = Rat(r == i ? 1 : 0);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (sgn(m[r][c]) != 0) {
        p = r;
        break;
      }
    std::swap(m[p], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (int cc = c; cc <= n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  std::vector<Rat> coeff(n);
  for (int c = 0; c < n; ++c) coeff[c] = m[c][n] / m[c][c];
  std::vector<Rat> x(xrank(), Rat(0));
  for (int j = 0; j < n; ++j)
    for (int b = 0; b < xrank(); ++b) x[b] += coeff[j] * roots_in_x_[j][b];
  return x;
}

bool RootDatum::is_type_a_affine() const {
  if (!affine_) return false;
  int n = rank();
  if (n == 1) return false;
  for (int i = 0; i < n; ++i)
    if (labels_[i] != i) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int d = std::min(mod(i - j, n), mod(j - i, n));
      int expect = i == j ? 2 : (d == 1 ? -1 : 0);
      if (n == 2) expect = i == j ? 2 : -2;
      if (cartan_[i][j] != expect) return false;
    }
  return true;
}

namespace {

std::shared_ptr<const RootDatum> build_named(const std::string& name) {
  bool affine = !name.empty() && name.back() == '~';
  std::string base = affine ? name.substr(0, name.size() - 1) : name;
  if (base.size() < 2) throw std::invalid_argument("unknown datum " + name);
  char family = base[0];
  int m = std::stoi(base.substr(1));  // finite rank
  if (m < 1 || (family != 'A' && family != 'C'))
    throw std::invalid_argument("unknown datum " + name);
  auto fin_cartan = [&](int n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    if (family == 'C' && n >= 2) a[n - 2][n - 1] = -2;
    return a;
  };
  if (!affine) {
    std::vector<int> labels(m);
    std::iota(labels.begin(), labels.end(), 1);
    auto cartan = fin_cartan(m);
    // adjoint-style datum: X = Q with basis the simple roots
    std::vector<std::vector<Rat>> roots(m, std::vector<Rat>(m, Rat(0)));
    std::vector<std::vector<Rat>> coroots(m, std::vector<Rat>(m));
    std::vector<std::string> vars(m);
    for (int i = 0; i < m; ++i) {
      roots[i][i] = Rat(1);
      for (int j = 0; j < m; ++j) coroots[i][j] = Rat(cartan[i][j]);
      vars[i] = "a" + std::to_string(i + 1);
    }
    return std::make_shared<RootDatum>(name, labels, cartan, roots, coroots, vars);
  }
  // untwisted affine datum on nodes 0..m, X = Q_af + Z Lambda0
  int n = m + 1;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto fin = fin_cartan(m);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) a[i][j] = fin[i - 1][j - 1];
  a[0][0] = 2;
  if (family == 'A') {
    if (m == 1) {
      a[0][1] = a[1][0] = -2;
    } else {
      a[0][1] = a[1][0] = -1;
      a[0][m] = a[m][0] = -1;
    }
  } else {  // C~: 0 => 1 double arrow toward 1
    a[0][1] = -2;
    a[1][0] = -1;
  }
  int xr = n + 1;
  std::vector<std::vector<Rat>> roots(n, std::vector<Rat>(xr, Rat(0)));
  std::vector<std::vector<Rat>> coroots(n, std::vector<Rat>(xr, Rat(0)));
  std::vector<std::string> vars(xr);
  for (int i = 0; i < n; ++i) {
    roots[i][i] = Rat(1);
    for (int j = 0; j < n; ++j) coroots[i][j] = Rat(a[i][j]);
    coroots[i][n] = Rat(i == 0 ? 1 : 0);  // <alpha^vee_i, Lambda0>
    vars[i] = "a" + std::to_string(i);
  }
  vars[n] = "L0";
  return std::make_shared<RootDatum>(name, labels, a, roots, coroots, vars);
}

}  // namespace

std::shared_ptr<const RootDatum> RootDatum::named(const std::string& name) {
  static std::map<std::string, std::shared_ptr<const RootDatum>> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto d = build_named(name);
  cache[name] = d;
  return d;
}

std::shared_ptr<const RootDatum> RootDatum::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::vector<int>> cartan = j.at("cartan");
  int n = (int)cartan.size();
  std::vector<int> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<int>>();
  else
    for (int i = 0; i < n; ++i) labels.push_back(i + 1);
  auto get_mat = [&](const char* key) {
    std::vector<std::vector<Rat>> m;
    for (auto& row : j.at(key)) {
      std::vector<Rat> r;
      for (auto& v : row) {
        if (v.is_number_integer())
          r.push_back(Rat((long)v.get<long>()));
        else
          r.push_back(Rat(std::string(v.get<std::string>())));
      }
      m.push_back(r);
    }
    return m;
  };
  auto roots = get_mat("simple_roots");
  auto coroots = get_mat("simple_coroots");
  std::vector<std::string> vars;
  if (j.contains("variables"))
    vars = j.at("variables").get<std::vector<std::string>>();
  else
    for (size_t i = 0; i < roots[0].size(); ++i) vars.push_back("x" + std::to_string(i + 1));
  std::string name = j.value("name", "custom");
  return std::make_shared<RootDatum>(name, labels, cartan, roots, coroots, vars);
}

std::shared_ptr<const RootDatum> RootDatum::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

// ---- WeylElement ----

namespace {

std::vector<long long> identity_matrix(int n) {
  std::vector<long long> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

// matrix of s_i acting on Q: column j = alpha_j - a_ij alpha_i
std::vector<long long> simple_matrix(const RootDatum& d, int i) {
  int n = d.rank();
  auto m = identity_matrix(n);
  for (int j = 0; j < n; ++j) m[i * n + j] -= d.cartan(i, j);
  return m;
}

std::vector<long long> mat_mul(const std::vector<long long>& a,
                               const std::vector<long long>& b, int n) {
  std::vector<long long> c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a[i * n + k];
      if (!aik) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

std::vector<long long> mat_inverse(const std::vector<long long>& a, int n) {
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat((long)a[i * n + j]);
    m[i][n + i] = Rat(1);
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (sgn(m[r][c]) != 0) {
        p = r;
        break;
      }
    if (p < 0) throw std::logic_error("singular Weyl matrix");
    std::swap(m[p], m[c]);
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (int cc = 0; cc < 2 * n; ++cc) m[r][cc] -= f * m[c][cc];
    }
  }
  std::vector<long long> inv(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat v = m[i][n + j] / m[i][i];
      assert(v.get_den() == 1);
      inv[i * n + j] = (long long)v.get_num().get_si();
    }
  return inv;
}

// is column c of the matrix a negative root vector (all entries <= 0)?
bool column_nonpositive(const std::vector<long long>& m, int n, int c) {
  for (int r = 0; r < n; ++r)
    if (m[r * n + c] > 0) return false;
  return true;
}

}  // namespace

WeylElement WeylElement::identity(DatumPtr d) {
  int n = d->rank();
  return WeylElement(std::move(d), identity_matrix(n));
}

WeylElement WeylElement::simple(DatumPtr d, int label) {
  int i = d->index_of_label(label);
  auto m = simple_matrix(*d, i);
  return WeylElement(std::move(d), std::move(m));
}

WeylElement WeylElement::from_reduced_word(DatumPtr d, const std::vector<int>& word) {
  WeylElement w = identity(d);
  for (int l : word) w = w * simple(d, l);
  return w;
}

WeylElement WeylElement::from_action_matrix(DatumPtr d, std::vector<long long> m) {
  WeylElement w(std::move(d), std::move(m));
  w.reduced_word();  // throws if the matrix is not in the group
  return w;
}

bool WeylElement::is_identity() const {
  return mat_ == identity_matrix(datum_->rank());
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  assert(datum_ == o.datum_);
  return WeylElement(datum_, mat_mul(mat_, o.mat_, datum_->rank()));
}

WeylElement WeylElement::inverse() const {
  return WeylElement(datum_, mat_inverse(mat_, datum_->rank()));
}

bool WeylElement::operator<(const WeylElement& o) const { return mat_ < o.mat_; }

const std::vector<int>& WeylElement::reduced_word() const {
  if (word_) return *word_;
  int n = datum_->rank();
  std::vector<int> w;
  auto m = mat_;
  auto inv = mat_inverse(mat_, n);
  // strip the smallest left descent repeatedly: lex-min reduced word
  int guard = 0;
  while (m != identity_matrix(n)) {
    int found = -1;
    for (int i = 0; i < n; ++i) {
      if (column_nonpositive(inv, n, i)) {  // w^{-1} alpha_i < 0
        found = i;
        break;
      }
    }
    if (found < 0) throw std::logic_error("matrix is not a Weyl group element");
    w.push_back(datum_->labels()[found]);
    auto s = simple_matrix(*datum_, found);
    m = mat_mul(s, m, n);
    inv = mat_mul(inv, s, n);
    if (++guard > 100000) throw std::logic_error("reduced word extraction diverged");
  }
  word_ = std::move(w);
  return *word_;
}

int WeylElement::length() const { return (int)reduced_word().size(); }

std::vector<int> WeylElement::left_descents() const {
  int n = datum_->rank();
  auto inv = mat_inverse(mat_, n);
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (column_nonpositive(inv, n, i)) out.push_back(datum_->labels()[i]);
  return out;
}

std::vector<int> WeylElement::right_descents() const {
  int n = datum_->rank();
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (column_nonpositive(mat_, n, i)) out.push_back(datum_->labels()[i]);
  return out;
}

std::vector<long long> WeylElement::apply(const std::vector<long long>& v) const {
  int n = datum_->rank();
  std::vector<long long> out(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out[r] += mat_[r * n + c] * v[c];
  return out;
}

std::vector<Rat> WeylElement::apply_x(const std::vector<Rat>& v) const {
  std::vector<Rat> out = v;
  // apply the reduced word right-to-left
  auto& w = reduced_word();
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out = datum_->reflect_x(datum_->index_of_label(*it), out);
  return out;
}

std::vector<std::vector<long long>> WeylElement::inversions() const {
  // Inv(w) = { s_{i_1} ... s_{i_{j-1}} . alpha_{i_j} } for w = s_{i_l} ... s_{i_1}
  std::vector<int> w = reduced_word();
  std::reverse(w.begin(), w.end());
  int n = datum_->rank();
  std::vector<std::vector<long long>> roots;
  WeylElement prefix = identity(datum_);
  for (int j = 0; j < (int)w.size(); ++j) {
    std::vector<long long> alpha(n, 0);
    alpha[datum_->index_of_label(w[j])] = 1;
    roots.push_back(prefix.apply(alpha));
    prefix = prefix * simple(datum_, w[j]);
  }
  return roots;
}

std::string WeylElement::str() const {
  auto& w = reduced_word();
  if (w.empty()) return "id";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) os << (i ? "*" : "") << "s" << w[i];
  return os.str();
}

bool bruhat_le(const WeylElement& v, const WeylElement& w) {
  if (v.datum() != w.datum()) throw std::invalid_argument("datum mismatch");
  // subword criterion, peeling left descents of w
  WeylElement a = v, b = w;
  for (;;) {
    if (a.is_identity()) return true;
    if (a.length() > b.length()) return false;
    int i = b.reduced_word().front();
    auto s = WeylElement::simple(a.datum(), i);
    WeylElement sa = s * a;
    if (sa.length() < a.length()) a = sa;
    b = s * b;
  }
}

WeylElement reflection(DatumPtr d, const std::vector<int>& w_word, int label) {
  WeylElement w = WeylElement::from_reduced_word(d, w_word);
  return w * WeylElement::simple(d, label) * w.inverse();
}

std::vector<std::vector<WeylElement>> elements_by_length(DatumPtr d, int bound) {
  std::vector<std::vector<WeylElement>> out;
  out.push_back({WeylElement::identity(d)});
  std::set<std::vector<long long>> seen{out[0][0].matrix()};
  for (int l = 1; l <= bound; ++l) {
    std::vector<WeylElement> next;
    for (const auto& w : out[l - 1])
      for (int lab : d->labels()) {
        WeylElement u = WeylElement::simple(d, lab) * w;
        if (seen.insert(u.matrix()).second) next.push_back(u);
      }
    std::sort(next.begin(), next.end(), [](const WeylElement& a, const WeylElement& b) {
      return a.reduced_word() < b.reduced_word();
    });
    out.push_back(std::move(next));
    if (out[l].empty()) break;
  }
  while ((int)out.size() <= bound) out.push_back({});
  return out;
}

std::vector<WeylElement> grassmannian_reps(DatumPtr d, const std::vector<int>& J,
                                           int bound) {
  std::vector<WeylElement> reps;
  for (auto& level : elements_by_length(d, bound))
    for (const auto& w : level) {
      bool ok = true;
      auto rd = w.right_descents();
      for (int j : J)
        if (std::find(rd.begin(), rd.end(), j) != rd.end()) ok = false;
      if (ok) reps.push_back(w);
    }
  return reps;
}

std::vector<std::vector<long long>> positive_roots(DatumPtr d, int height_bound) {
  int n = d->rank();
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> a(n, 0);
    a[i] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    auto root = queue[q];
    for (int i = 0; i < n; ++i) {
      // s_i . root
      long long c = 0;
      for (int j = 0; j < n; ++j) c += d->cartan(i, j) * root[j];
      auto r2 = root;
      r2[i] -= c;
      long long h = 0;
      bool pos = true;
      for (long long x : r2) {
        h += x;
        if (x < 0) pos = false;
      }
      if (!pos || h > height_bound) continue;
      if (seen.insert(r2).second) queue.push_back(r2);
    }
  }
  std::vector<std::vector<long long>> out(seen.begin(), seen.end());
  return out;
}

std::vector<WeylElement> bruhat_covers_up(const WeylElement& w, int root_height_bound) {
  auto d = w.datum();
  int n = d->rank();
  std::vector<WeylElement> covers;
  std::set<std::vector<long long>> seen;
  for (auto& root : positive_roots(d, root_height_bound)) {
    // reflection for this root: find w' with w' alpha_i = root by BFS over words
    // cheaper: t = product over a word obtained by peeling the root
    // use: if root is simple, t = s_i; otherwise find i with <alpha^vee_i, root> > 0
    // and recurse on s_i(root)
    std::vector<long long> r = root;
    std::vector<int> conj;
    for (;;) {
      int which = -1;
      for (int i = 0; i < n && which < 0; ++i) {
        long long sum = 0;
        for (int j = 0; j < n; ++j) sum += (j == i ? r[j] : 0);
        if (r[i] > 0) {
          long long c = 0;
          for (int j = 0; j < n; ++j) c += d->cartan(i, j) * r[j];
          if (c > 0) which = i;
        }
        (void)sum;
      }
      if (which < 0) break;
      long long height = 0;
      for (auto x : r) height += x;
      if (height == 1) break;
      long long c = 0;
      for (int j = 0; j < n; ++j) c += d->cartan(which, j) * r[j];
      auto r2 = r;
      r2[which] -= c;
      bool pos = true;
      for (auto x : r2) pos = pos && x >= 0;
      if (!pos) break;
      conj.push_back(d->labels()[which]);
      r = r2;
    }
    int base = -1;
    long long height = 0;
    for (int i = 0; i < n; ++i) {
      height += r[i];
      if (r[i] == 1) base = i;
    }
    if (height != 1 || base < 0) continue;  // reduction failed (shouldn't happen)
    WeylElement t = reflection(d, conj, d->labels()[base]);
    WeylElement u = t * w;
    if (u.length() == w.length() + 1 && seen.insert(u.matrix()).second)
      covers.push_back(u);
  }
  std::sort(covers.begin(), covers.end(), [](const WeylElement& a, const WeylElement& b) {
    return a.reduced_word() < b.reduced_word();
  });
  return covers;
}

WeylElement translation(DatumPtr d, const std::vector<int>& mu) {
  if (!d->is_affine()) throw std::invalid_argument("translation needs an affine datum");
  int n = d->rank();
  // t_mu(alpha_j) = alpha_j - <mu, alpha_j> delta, delta = sum marks_i alpha_i
  std::vector<long long> m = identity_matrix(n);
  for (int j = 0; j < n; ++j) {
    long long pairing = 0;
    for (int i = 0; i < n; ++i) {
      if (i == d->node0()) continue;
      pairing += (long long)mu[i] * d->cartan(i, j);
    }
    for (int r = 0; r < n; ++r) m[r * n + j] -= pairing * d->marks()[r];
  }
  return WeylElement::from_action_matrix(d, m);
}

// ---- AffinePermutation ----

AffinePermutation::AffinePermutation(int n, std::vector<long long> window)
    : n_(n), window_(std::move(window)) {
  if ((int)window_.size() != n_) throw std::invalid_argument("window size mismatch");
  long long sum = 0;
  std::set<int> residues;
  for (int i = 1; i <= n_; ++i) {
    sum += window_[i - 1] - i;
    residues.insert(mod(window_[i - 1], n_));
  }
  if (sum != 0 || (int)residues.size() != n_)
    throw std::invalid_argument("malformed affine permutation window");
}

AffinePermutation AffinePermutation::identity(int n) {
  std::vector<long long> w(n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(n, w);
}

AffinePermutation AffinePermutation::simple(int n, int i) {
  auto w = identity(n);
  std::vector<long long> v = w.window_;
  if (i == 0) {
    v[0] = 0;
    v[n - 1] = n + 1;
  } else {
    std::swap(v[i - 1], v[i]);
  }
  return AffinePermutation(n, v);
}

AffinePermutation AffinePermutation::from_reduced_word(int n, const std::vector<int>& word) {
  auto w = identity(n);
  for (int i : word) w = w * simple(n, i);
  return w;
}

AffinePermutation AffinePermutation::transposition(int n, long long i, long long j) {
  if (mod(i, n) == mod(j, n)) throw std::invalid_argument("t_ij needs i != j mod n");
  auto id = identity(n);
  std::vector<long long> v(n);
  for (int p = 1; p <= n; ++p) {
    long long x = p;
    if (mod(x - i, n) == 0)
      v[p - 1] = j + (x - i);
    else if (mod(x - j, n) == 0)
      v[p - 1] = i + (x - j);
    else
      v[p - 1] = x;
  }
  return AffinePermutation(n, v);
}

long long AffinePermutation::operator()(long long x) const {
  long long q = (x - 1) / n_;
  long long r = (x - 1) % n_;
  if (r < 0) {
    r += n_;
    q -= 1;
  }
  return window_[r] + q * n_;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& o) const {
  assert(n_ == o.n_);
  std::vector<long long> v(n_);
  for (int i = 1; i <= n_; ++i) v[i - 1] = (*this)(o(i));
  return AffinePermutation(n_, v);
}

AffinePermutation AffinePermutation::inverse() const {
  std::vector<long long> v(n_);
  for (int i = 1; i <= n_; ++i) {
    long long val = window_[i - 1];
    long long r = mod(val, n_) == 0 ? n_ : mod(val, n_);
    // value at position r of inverse: solve w(x) = r
    v[r - 1] = i + (r - val);
  }
  return AffinePermutation(n_, v);
}

bool AffinePermutation::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if (window_[i - 1] != i) return false;
  return true;
}

bool AffinePermutation::is_grassmannian() const {
  for (int i = 1; i < n_; ++i)
    if (window_[i - 1] > window_[i]) return false;
  return true;
}

std::vector<int> AffinePermutation::reduced_word() const {
  // lex-min via smallest left descent: descent at i iff position of value i is
  // right of position of value i+1, i.e. w^{-1}(i) > w^{-1}(i+1)
  AffinePermutation w = *this;
  std::vector<int> out;
  while (!w.is_identity()) {
    AffinePermutation inv = w.inverse();
    int best = -1;
    for (int i = 0; i < n_; ++i) {
      long long a = i == 0 ? inv(0) : inv(i);
      long long b = inv(i + 1);
      if (a > b) {
        best = i;
        break;
      }
    }
    if (best < 0) throw std::logic_error("no descent found");
    out.push_back(best);
    w = simple(n_, best) * w;
  }
  return out;
}

int AffinePermutation::length() const {
  // l(w) = sum_{i<j<=n} |floor((w(j)-w(i))/n)|
  long long total = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) {
      long long diff = window_[j - 1] - window_[i - 1];
      long long q = diff >= 0 ? diff / n_ : -((-diff + n_ - 1) / n_);
      total += q >= 0 ? q : -q;
    }
  return (int)total;
}

std::string AffinePermutation::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) os << (i ? ", " : "") << window_[i];
  os << "]";
  return os.str();
}

// ---- cores ----

Core core_action(int i, const Core& c) {
  auto corners = residues_and_corners(c, i);
  Partition s = c.shape();
  if (!corners.addable.empty()) {
    // add all addable corners of residue i (rows from top so indices stay valid)
    std::vector<int> rows;
    for (auto& cell : corners.addable) rows.push_back(cell.row);
    std::sort(rows.rbegin(), rows.rend());
    for (int r : rows) s = s.add_cell(r);
  } else if (!corners.removable.empty()) {
    for (auto& cell : corners.removable) s = s.remove_cell(cell.row);
  }
  return Core(s, c.modulus());
}

Core affine_to_core(const AffinePermutation& w, int modulus) {
  assert(w.n() == modulus);
  Core c(Partition{}, modulus);
  auto word = w.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Core next = core_action(*it, c);
    if (next.length() != c.length() + 1)
      throw std::invalid_argument("element is not affine Grassmannian");
    c = next;
  }
  return c;
}

AffinePermutation bounded_to_affine(const Partition& p, int k) {
  int n = k + 1;
  std::vector<int> word;
  // rows from the top (shortest) down, each right to left
  for (int r = p.length(); r >= 1; --r)
    for (int col = p.part(r); col >= 1; --col) word.push_back(mod(col - r, n));
  return AffinePermutation::from_reduced_word(n, word);
}

AffinePermutation core_to_affine(const Core& c) {
  return bounded_to_affine(core_to_bounded(c), c.k());
}

std::vector<Core> weak_covers(const Core& c) {
  std::vector<Core> out;
  for (int i = 0; i < c.modulus(); ++i) {
    Core u = core_action(i, c);
    if (u.length() == c.length() + 1) out.push_back(u);
  }
  std::sort(out.begin(), out.end(), [](const Core& a, const Core& b) {
    return a.shape().parts() > b.shape().parts();
  });
  return out;
}

bool weak_le(const Core& lo, const Core& hi) {
  int dl = hi.length() - lo.length();
  if (dl < 0) return false;
  AffinePermutation u =
      core_to_affine(hi) * core_to_affine(lo).inverse();
  return u.length() == dl;
}

bool strong_le(const Core& lo, const Core& hi) {
  return hi.shape().contains(lo.shape());
}

std::vector<StrongMarkedCover> strong_marked_covers(const Core& c) {
  static std::map<std::pair<int, std::vector<int>>, std::vector<StrongMarkedCover>> cache;
  static std::mutex mu;
  {
    std::scoped_lock lk(mu);
    auto it = cache.find({c.modulus(), c.shape().parts()});
    if (it != cache.end()) return it->second;
  }
  int n = c.modulus();
  AffinePermutation w = core_to_affine(c);
  AffinePermutation winv = w.inverse();
  int m = c.length();
  long long lo = -(long long)(c.shape().length() + n + 1);
  long long hi = c.shape().part(1) + n + 1;
  std::vector<StrongMarkedCover> out;
  for (long long i = lo; i <= hi; ++i)
    for (long long j = i + 1; j <= hi; ++j) {
      if (mod(j - i, n) == 0) continue;
      if (!(winv(i) <= 0 && winv(j) > 0)) continue;
      AffinePermutation u = AffinePermutation::transposition(n, i, j) * w;
      if (!u.is_grassmannian()) continue;
      Core kappa = affine_to_core(u, n);
      if (kappa.length() != m + 1) continue;
      if (!kappa.shape().contains(c.shape())) continue;
      StrongMarkedCover smc;
      smc.target = kappa;
      smc.content = (int)(j - 1);
      long long a = mod(-winv(i), n);
      long long b = mod(winv(j), n);
      long long below = (-winv(i) - a) / n;
      long long above = (winv(j) - b) / n;
      smc.components = (int)(1 + below + above);
      smc.above = (int)above;
      smc.size = (int)(j - i);
      int height = 0;
      for (long long dd = i; dd < j; ++dd)
        if (winv(dd) <= 0) ++height;
      smc.height = height;
      out.push_back(smc);
    }
  std::sort(out.begin(), out.end(), [](const StrongMarkedCover& x, const StrongMarkedCover& y) {
    if (x.target.shape().parts() != y.target.shape().parts())
      return x.target.shape().parts() > y.target.shape().parts();
    return x.content < y.content;
  });
  std::scoped_lock lk(mu);
  return cache.emplace(std::make_pair(c.modulus(), c.shape().parts()), out).first->second;
}

std::vector<Core> strong_covers(const Core& c) {
  std::vector<Core> out;
  for (auto& smc : strong_marked_covers(c))
    if (out.empty() || !(out.back() == smc.target)) out.push_back(smc.target);
  return out;
}

bool is_weak_horizontal_strip(const Core& lo, const Core& hi) {
  if (!hi.shape().contains(lo.shape())) return false;
  SkewShape skew(hi.shape(), lo.shape());
  if (!skew.is_horizontal_strip()) return false;
  int r = hi.length() - lo.length();
  std::set<int> residues;
  for (auto& cell : skew.cells()) residues.insert(hi.residue(cell));
  return (int)residues.size() == r;
}

AffinePermutation cyclically_decreasing(int n, const std::vector<int>& subset) {
  std::set<int> s(subset.begin(), subset.end());
  if ((int)s.size() >= n)
    throw std::invalid_argument("cyclically decreasing subsets must be proper");
  std::vector<int> word;
  std::set<int> used;
  for (int start = 0; start < n; ++start) {
    if (!s.count(start) || used.count(start)) continue;
    if (s.count(mod(start + 1, n))) continue;  // not the top of a run
    // run goes start, start-1, ... downwards
    int x = start;
    while (s.count(mod(x, n)) && !used.count(mod(x, n))) {
      word.push_back(mod(x, n));
      used.insert(mod(x, n));
      --x;
    }
  }
  return AffinePermutation::from_reduced_word(n, word);
}

std::vector<AffinePermutation> cyclically_decreasing_of_length(int n, int r) {
  std::vector<AffinePermutation> out;
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int next) {
    if ((int)subset.size() == r) {
      out.push_back(cyclically_decreasing(n, subset));
      return;
    }
    if (next >= n) return;
    subset.push_back(next);
    rec(next + 1);
    subset.pop_back();
    rec(next + 1);
  };
  if (r >= n || r < 0) return out;
  rec(0);
  return out;
}

WeylElement to_weyl(const AffinePermutation& w, DatumPtr d) {
  return WeylElement::from_reduced_word(d, w.reduced_word());
}

AffinePermutation to_affine_permutation(const WeylElement& w) {
  if (!w.datum()->is_type_a_affine())
    throw std::invalid_argument("window notation needs an affine type A datum");
  return AffinePermutation::from_reduced_word(w.datum()->rank(), w.reduced_word());
}

}  // namespace kst::weyl
