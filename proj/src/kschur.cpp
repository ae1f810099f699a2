#include "kst/kschur.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

#include "kst/linalg.hpp"

namespace kst::kschur {

using shapes::SkewShape;
using symfunc::qt_one;
using symfunc::qt_rat;
using symfunc::qt_t;
using symfunc::qt_zero;
using weyl::StrongMarkedCover;

namespace {

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

// ---- WeakTableau ----

WeakTableau::WeakTableau(int k, std::vector<Core> chain)
    : k_(k), chain_(std::move(chain)) {
  if (chain_.empty() || !chain_.front().shape().empty())
    throw std::invalid_argument("weak tableau chains start at the empty core");
  for (size_t i = 1; i < chain_.size(); ++i)
    if (!weyl::is_weak_horizontal_strip(chain_[i - 1], chain_[i]))
      throw std::invalid_argument("chain step is not a weak horizontal strip");
}

WeakTableau WeakTableau::from_core_rows(int k,
                                        const std::vector<std::vector<int>>& rows) {
  int maxletter = 0;
  for (auto& r : rows)
    for (int e : r) maxletter = std::max(maxletter, e);
  std::vector<Core> chain;
  for (int i = 0; i <= maxletter; ++i) {
    std::vector<int> parts;
    for (auto& r : rows) {
      int cnt = 0;
      for (int e : r)
        if (e <= i) ++cnt;
      if (cnt) parts.push_back(cnt);
    }
    std::sort(parts.rbegin(), parts.rend());
    chain.push_back(Core(Partition(parts), k + 1));
  }
  return WeakTableau(k, chain);
}

WeakTableau WeakTableau::from_bounded_rows(
    int k, const std::vector<std::vector<int>>& rows) {
  int maxletter = 0;
  for (auto& r : rows)
    for (int e : r) maxletter = std::max(maxletter, e);
  std::vector<Core> chain;
  for (int i = 0; i <= maxletter; ++i) {
    std::vector<int> parts;
    for (auto& r : rows) {
      int cnt = 0;
      for (int e : r)
        if (e <= i) ++cnt;
      if (cnt) parts.push_back(cnt);
    }
    std::sort(parts.rbegin(), parts.rend());
    chain.push_back(shapes::bounded_to_core(Partition(parts), k));
  }
  return WeakTableau(k, chain);
}

std::vector<int> WeakTableau::weight() const {
  std::vector<int> w;
  for (size_t i = 1; i < chain_.size(); ++i)
    w.push_back(chain_[i].length() - chain_[i - 1].length());
  return w;
}

std::vector<std::vector<int>> WeakTableau::core_rows() const {
  Partition sh = shape().shape();
  std::vector<std::vector<int>> rows(sh.length());
  for (int r = 1; r <= sh.length(); ++r) rows[r - 1].assign(sh.part(r), 0);
  for (size_t i = 1; i < chain_.size(); ++i)
    for (int r = 1; r <= chain_[i].shape().length(); ++r)
      for (int c = chain_[i - 1].shape().part(r) + 1; c <= chain_[i].shape().part(r);
           ++c)
        rows[r - 1][c - 1] = (int)i;
  return rows;
}

std::vector<std::vector<int>> WeakTableau::bounded_rows() const {
  Partition sh = shapes::core_to_bounded(shape());
  std::vector<std::vector<int>> rows(sh.length());
  Partition prev{};
  for (size_t i = 1; i < chain_.size(); ++i) {
    Partition cur = shapes::core_to_bounded(chain_[i]);
    for (int r = 1; r <= cur.length(); ++r)
      for (int c = prev.part(r) + 1; c <= cur.part(r); ++c)
        rows[r - 1].push_back((int)i);
    prev = cur;
  }
  return rows;
}

namespace {

struct Unit {  // all cells of one letter carrying one residue
  int letter = 0;
  int residue = 0;
  std::vector<shapes::Cell> cells;  // sorted by row
  shapes::Cell top_cell() const { return cells.back(); }
  int max_content() const {
    int m = cells[0].content();
    for (auto& c : cells) m = std::max(m, c.content());
    return m;
  }
};

// integers strictly between a and b congruent to a mod n
int diag_between(int a, int b, int n) {
  int lo = std::min(a, b), hi = std::max(a, b);
  int cnt = 0;
  for (int d = lo + 1; d < hi; ++d)
    if ((d - a) % n == 0) ++cnt;
  return cnt;
}

std::vector<std::vector<Unit>> standard_sequences(const std::vector<std::vector<int>>& rows,
                                                  int n) {
  std::map<std::pair<int, int>, Unit> units;
  for (int r = 1; r <= (int)rows.size(); ++r)
    for (int c = 1; c <= (int)rows[r - 1].size(); ++c) {
      int letter = rows[r - 1][c - 1];
      int res = mod(c - r, n);
      auto& u = units[{letter, res}];
      u.letter = letter;
      u.residue = res;
      u.cells.push_back({r, c});
    }
  for (auto& [key, u] : units)
    std::sort(u.cells.begin(), u.cells.end(),
              [](const shapes::Cell& a, const shapes::Cell& b) { return a.row < b.row; });
  std::set<std::pair<int, int>> remaining;
  for (auto& [key, u] : units) remaining.insert(key);
  std::vector<std::vector<Unit>> seqs;
  for (;;) {
    int best_res = -1, best_content = INT_MIN;
    for (auto& key : remaining) {
      if (key.first != 1) continue;
      const Unit& u = units[key];
      if (u.max_content() > best_content) {
        best_content = u.max_content();
        best_res = key.second;
      }
    }
    if (best_res < 0) break;
    std::vector<Unit> seq;
    seq.push_back(units[{1, best_res}]);
    remaining.erase({1, best_res});
    for (int x = 2;; ++x) {
      int i = seq.back().residue;
      int pick = -1;
      for (int step = 0; step < n; ++step) {  // counterclockwise scan from i
        int j = mod(i - step, n);
        if (remaining.count({x, j})) {
          pick = j;
          break;
        }
      }
      if (pick < 0) break;
      seq.push_back(units[{x, pick}]);
      remaining.erase({x, pick});
    }
    seqs.push_back(std::move(seq));
  }
  return seqs;
}

}  // namespace

int WeakTableau::k_charge() const {
  int n = k_ + 1;
  auto rows = core_rows();
  int total = 0;
  for (auto& seq : standard_sequences(rows, n)) {
    int index = 0;
    for (size_t r = 1; r < seq.size(); ++r) {
      shapes::Cell cur = seq[r].top_cell(), prev = seq[r - 1].top_cell();
      int d = diag_between(cur.content(), prev.content(), n);
      if (cur.col > prev.col)
        index += 1 + d;
      else
        index -= d;
      total += index;
    }
  }
  return total;
}

int WeakTableau::k_charge_J() const {
  int n = k_ + 1;
  auto rows = core_rows();
  auto seqs = standard_sequences(rows, n);
  std::map<std::pair<int, int>, int> seq_of;
  for (int s = 0; s < (int)seqs.size(); ++s)
    for (auto& u : seqs[s]) seq_of[{u.letter, u.residue}] = s;
  int total = 0;
  for (int s = 0; s < (int)seqs.size(); ++s) {
    auto& seq = seqs[s];
    int J = 0;
    for (size_t r = 0; r < seq.size(); ++r) {
      int letter = seq[r].letter;
      // T<=r: letters below `letter`, plus letter-units of sequences >= s
      auto included = [&](int rr, int cc) {
        int e = rows[rr - 1][cc - 1];
        if (e < letter) return true;
        if (e > letter) return false;
        return seq_of.at({letter, mod(cc - rr, n)}) >= s;
      };
      int nrows = 0;
      for (int rr = 1; rr <= (int)rows.size(); ++rr) {
        bool any = false;
        for (int cc = 1; cc <= (int)rows[rr - 1].size() && !any; ++cc)
          if (included(rr, cc)) any = true;
        if (any) ++nrows;
      }
      if (r > 0) {
        int xtop = mod(-nrows, n);
        auto ord = [&](int rho) { return mod(xtop - rho, n); };
        if (ord(seq[r].residue) < ord(seq[r - 1].residue)) J += 1;
        total += J;
      }
      total += diag_between(seq[r].top_cell().content(), -nrows, n);
    }
  }
  return total;
}

// ---- weak tableaux enumeration ----

namespace {

void weak_rec(int k, const Core& shape, const std::vector<int>& weight, size_t idx,
              std::vector<Core>& chain, std::vector<WeakTableau>& out) {
  const Core cur = chain.back();
  if (idx == weight.size()) {
    if (cur == shape) out.push_back(WeakTableau(k, chain));
    return;
  }
  int r = weight[idx];
  if (r > k || r < 0) return;
  if (r == 0) {
    // empty strips are allowed for composition weights with zero entries
    chain.push_back(cur);
    weak_rec(k, shape, weight, idx + 1, chain, out);
    chain.pop_back();
    return;
  }
  // enumerate cores reachable by r weak covers that stay inside shape, then
  // keep those forming a weak horizontal strip over cur
  std::set<std::vector<int>> seen;
  std::function<void(const Core&, int)> grow = [&](const Core& c, int left) {
    if (left == 0) {
      if (!weyl::is_weak_horizontal_strip(cur, c)) return;
      if (!seen.insert(c.shape().parts()).second) return;
      chain.push_back(c);
      weak_rec(k, shape, weight, idx + 1, chain, out);
      chain.pop_back();
      return;
    }
    for (int i = 0; i < k + 1; ++i) {
      Core next = weyl::core_action(i, c);
      if (next.length() != c.length() + 1) continue;
      if (!shape.shape().contains(next.shape())) continue;
      grow(next, left - 1);
    }
  };
  grow(cur, r);
}

}  // namespace

std::vector<WeakTableau> weak_tableaux(int k, const Core& shape,
                                       const std::vector<int>& weight) {
  int total = 0;
  for (int w : weight) total += w;
  if (total != shape.length())
    throw std::invalid_argument("weight total must equal the core length");
  std::vector<Core> chain{Core(Partition{}, k + 1)};
  std::vector<WeakTableau> out;
  weak_rec(k, shape, weight, 0, chain, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeakTableau> weak_tableaux(int k, const Partition& bounded,
                                       const std::vector<int>& weight) {
  return weak_tableaux(k, shapes::bounded_to_core(bounded, k), weight);
}

long weak_kostka(int k, const Partition& la, const Partition& mu) {
  return (long)weak_tableaux(k, la, mu.parts()).size();
}

QT weak_kostka_t(int k, const Partition& la, const Partition& mu) {
  QT acc = qt_zero();
  for (auto& T : weak_tableaux(k, la, mu.parts())) acc += qt_t().pow(T.k_charge());
  return acc;
}

// ---- StrongMarkedTableau ----

StrongMarkedTableau::StrongMarkedTableau(int k, std::vector<Core> chain,
                                         std::vector<int> markings,
                                         std::vector<int> weight)
    : k_(k),
      chain_(std::move(chain)),
      markings_(std::move(markings)),
      weight_(std::move(weight)) {
  int total = 0;
  for (int w : weight_) total += w;
  if ((int)markings_.size() != total || chain_.size() != markings_.size() + 1)
    throw std::invalid_argument("strong tableau data sizes disagree");
}

int StrongMarkedTableau::spin() const {
  int total = 0;
  for (size_t i = 1; i < chain_.size(); ++i)
    for (auto& mc : weyl::strong_marked_covers(chain_[i - 1]))
      if (mc.target == chain_[i] && mc.content == markings_[i - 1]) {
        total += (mc.height - 1) * mc.components + mc.above;
        break;
      }
  return total;
}

std::vector<std::vector<int>> StrongMarkedTableau::rows() const {
  Partition sh = shape().shape();
  std::vector<std::vector<int>> rows(sh.length());
  for (int r = 1; r <= sh.length(); ++r) rows[r - 1].assign(sh.part(r), 0);
  std::vector<int> strip(markings_.size());
  {
    size_t pos = 0;
    for (size_t s = 0; s < weight_.size(); ++s)
      for (int j = 0; j < weight_[s]; ++j) strip[pos++] = (int)s + 1;
  }
  for (size_t i = 1; i < chain_.size(); ++i) {
    const Partition& prev = chain_[i - 1].shape();
    const Partition& cur = chain_[i].shape();
    for (int r = 1; r <= cur.length(); ++r)
      for (int c = prev.part(r) + 1; c <= cur.part(r); ++c)
        rows[r - 1][c - 1] = (c - r == markings_[i - 1]) ? -strip[i - 1] : strip[i - 1];
  }
  return rows;
}

bool StrongMarkedTableau::operator<(const StrongMarkedTableau& o) const {
  if (!(shape() == o.shape())) return shape().shape() < o.shape().shape();
  return rows() < o.rows();
}

namespace {

void strong_strips(const Core& from, int r, const Core& shape, int min_content,
                   std::vector<Core>& chain, std::vector<int>& marks,
                   const std::function<void()>& done) {
  if (r == 0) {
    done();
    return;
  }
  for (auto& mc : weyl::strong_marked_covers(from)) {
    if (mc.content <= min_content) continue;
    if (!shape.shape().contains(mc.target.shape())) continue;
    chain.push_back(mc.target);
    marks.push_back(mc.content);
    strong_strips(mc.target, r - 1, shape, mc.content, chain, marks, done);
    chain.pop_back();
    marks.pop_back();
  }
}

}  // namespace

std::vector<StrongMarkedTableau> strong_tableaux(int k, const Core& shape,
                                                 const std::vector<int>& weight) {
  int total = 0;
  for (int w : weight) {
    if (w < 1) throw std::invalid_argument("strong tableau weights are positive");
    total += w;
  }
  if (total != shape.length())
    throw std::invalid_argument("weight total must equal the core length");
  std::vector<StrongMarkedTableau> out;
  std::vector<Core> chain{Core(Partition{}, k + 1)};
  std::vector<int> marks;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == weight.size()) {
      if (chain.back() == shape)
        out.push_back(StrongMarkedTableau(k, chain, marks, weight));
      return;
    }
    strong_strips(chain.back(), weight[idx], shape, INT_MIN, chain, marks,
                  [&] { rec(idx + 1); });
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StrongMarkedTableau> strong_tableaux(int k, const Partition& bounded,
                                                 const std::vector<int>& weight) {
  return strong_tableaux(k, shapes::bounded_to_core(bounded, k), weight);
}

// ---- k-Schur bases ----

namespace {

std::vector<Partition> bounded_partitions(int d, int k) {
  return shapes::partitions_of(d, k);
}

std::mutex cache_mu;

}  // namespace

SymFunc kschur_t1(const Partition& la, int k) {
  static std::map<std::pair<int, Partition>, SymFunc> cache;
  {
    std::scoped_lock lk(cache_mu);
    auto it = cache.find({k, la});
    if (it != cache.end()) return it->second;
  }
  if (la.part(1) > k) throw std::invalid_argument("index must be k-bounded");
  SymFunc f = SymFunc::generator(Basis::h, la);
  for (const Partition& mu : bounded_partitions(la.size(), k)) {
    if (mu == la || !shapes::dominates(mu, la)) continue;
    long K = weak_kostka(k, mu, la);
    if (K) f = f - kschur_t1(mu, k) * qt_rat(Rat(K));
  }
  std::scoped_lock lk(cache_mu);
  return cache.emplace(std::make_pair(k, la), f).first->second;
}

SymFunc h_to_ks(const SymFunc& f_h, int k) {
  SymFunc out(Basis::ks, k);
  for (auto& [mu, c] : f_h.terms()) {
    if (mu.part(1) > k) throw std::invalid_argument("h-support must be k-bounded");
    for (const Partition& la : bounded_partitions(mu.size(), k)) {
      long K = weak_kostka(k, la, mu);
      if (K) out.add(la, c * qt_rat(Rat(K)));
    }
  }
  return out;
}

SymFunc to_ks_t1(const SymFunc& f, int k) {
  return h_to_ks(symfunc::convert(f, Basis::h), k);
}

SymFunc dual_kschur(const Partition& la, int k) {
  SymFunc out(Basis::m);
  for (const Partition& mu : bounded_partitions(la.size(), k)) {
    long K = weak_kostka(k, la, mu);
    if (K) out.add(mu, qt_rat(Rat(K)));
  }
  return out;
}

SymFunc to_dks(const SymFunc& f, int k) {
  SymFunc rest = symfunc::restrict_parts(symfunc::convert(f, Basis::m), k, Basis::m);
  SymFunc out(Basis::dks, k);
  int guard = 0;
  while (!rest.is_zero()) {
    auto best = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.size() > best->first.size() ||
          (it->first.size() == best->first.size() &&
           it->first.parts() > best->first.parts()))
        best = it;
    Partition la = best->first;
    QT c = best->second;
    out.add(la, c);
    rest = rest - dual_kschur(la, k) * c;
    if (++guard > 200000) throw std::logic_error("dks expansion failed");
  }
  return out;
}

SymFunc kschur_t(const Partition& la, int k) {
  static std::map<std::pair<int, Partition>, SymFunc> cache;
  {
    std::scoped_lock lk(cache_mu);
    auto it = cache.find({k, la});
    if (it != cache.end()) return it->second;
  }
  if (la.part(1) > k) throw std::invalid_argument("index must be k-bounded");
  Core shape = shapes::bounded_to_core(la, k);
  SymFunc out(Basis::m);
  for (const Partition& mu : shapes::partitions_of(la.size())) {
    QT acc = qt_zero();
    for (auto& T : strong_tableaux(k, shape, mu.parts())) acc += qt_t().pow(T.spin());
    out.add(mu, acc);
  }
  std::scoped_lock lk(cache_mu);
  return cache.emplace(std::make_pair(k, la), out).first->second;
}

SymFunc kschur_t_s(const Partition& la, int k) {
  return symfunc::convert(kschur_t(la, k), Basis::s);
}

SymFunc to_ks_t(const SymFunc& f, int k) {
  SymFunc fm = symfunc::convert(f, Basis::m);
  SymFunc out(Basis::ks, k);
  std::map<int, std::vector<std::pair<Partition, QT>>> comps;
  for (auto& [mu, c] : fm.terms()) comps[mu.size()].push_back({mu, c});
  for (auto& [d, items] : comps) {
    auto all = shapes::partitions_of(d);
    auto cols = bounded_partitions(d, k);
    std::map<Partition, int> row_index;
    for (int i = 0; i < (int)all.size(); ++i) row_index[all[i]] = i;
    Mat<QT> M((int)all.size(), (int)cols.size(), qt_zero());
    for (int j = 0; j < (int)cols.size(); ++j) {
      SymFunc col = kschur_t(cols[j], k);
      for (auto& [mu, c] : col.terms()) M(row_index.at(mu), j) = c;
    }
    std::vector<QT> b(all.size(), qt_zero());
    for (auto& [mu, c] : items) b[row_index.at(mu)] = c;
    auto x = solve_linear(M, b, qt_zero());
    if (!x) throw std::domain_error("function is not in the k-Schur span");
    for (int j = 0; j < (int)cols.size(); ++j) out.add(cols[j], (*x)[j]);
  }
  return out;
}

SymFunc kschur_tilde(const Partition& la, int k) {
  static std::map<std::pair<int, Partition>, SymFunc> cache;
  {
    std::scoped_lock lk(cache_mu);
    auto it = cache.find({k, la});
    if (it != cache.end()) return it->second;
  }
  SymFunc f = symfunc::hl_qp(la);
  for (const Partition& mu : bounded_partitions(la.size(), k)) {
    if (mu == la || !shapes::dominates(mu, la)) continue;
    QT K = weak_kostka_t(k, mu, la);
    if (!K.is_zero()) f = f - kschur_tilde(mu, k) * K;
  }
  std::scoped_lock lk(cache_mu);
  return cache.emplace(std::make_pair(k, la), f).first->second;
}

SymFunc qp_to_kstilde(const SymFunc& f_qp, int k) {
  SymFunc out(Basis::ks, k);
  for (auto& [mu, c] : f_qp.terms()) {
    if (mu.part(1) > k) throw std::invalid_argument("Qp-support must be k-bounded");
    for (const Partition& la : bounded_partitions(mu.size(), k)) {
      QT K = weak_kostka_t(k, la, mu);
      if (!K.is_zero()) out.add(la, c * K);
    }
  }
  return out;
}

SymFunc dual_kschur_t(const Partition& la, int k) {
  SymFunc out(Basis::s);
  for (const Partition& mu : bounded_partitions(la.size(), k)) {
    QT K = weak_kostka_t(k, la, mu);
    if (!K.is_zero()) out = out + symfunc::hl_p(mu) * K;
  }
  return out;
}

// ---- Pieri rules, involutions, products ----

SymFunc weak_pieri(int r, const SymFunc& f_ks, int k) {
  if (r < 1 || r > k) throw std::invalid_argument("weak Pieri needs 1 <= r <= k");
  SymFunc out(Basis::ks, k);
  for (auto& [la, c] : f_ks.terms()) {
    Core from = shapes::bounded_to_core(la, k);
    for (const Partition& mu : bounded_partitions(la.size() + r, k)) {
      Core to = shapes::bounded_to_core(mu, k);
      if (weyl::is_weak_horizontal_strip(from, to)) out.add(mu, c);
    }
  }
  return out;
}

SymFunc strong_pieri(int r, const SymFunc& f_dks, int k) {
  if (r < 1) throw std::invalid_argument("strong Pieri needs r >= 1");
  SymFunc out(Basis::dks, k);
  for (auto& [la, c] : f_dks.terms()) {
    Core from = shapes::bounded_to_core(la, k);
    std::function<void(const Core&, int, int)> rec = [&](const Core& cur, int left,
                                                         int min_content) {
      if (left == 0) {
        out.add(shapes::core_to_bounded(cur), c);
        return;
      }
      for (auto& mc : weyl::strong_marked_covers(cur)) {
        if (mc.content <= min_content) continue;
        rec(mc.target, left - 1, mc.content);
      }
    };
    rec(from, r, INT_MIN);
  }
  return out;
}

SymFunc e_pieri(int r, const SymFunc& f_ks, int k) {
  if (r < 1 || r > k) throw std::invalid_argument("e Pieri needs 1 <= r <= k");
  SymFunc out(Basis::ks, k);
  for (auto& [la, c] : f_ks.terms()) {
    Partition lak = shapes::k_conjugate(la, k);
    for (const Partition& mu : bounded_partitions(la.size() + r, k)) {
      if (!mu.contains(la)) continue;
      if (!SkewShape(mu, la).is_vertical_strip()) continue;
      Partition muk = shapes::k_conjugate(mu, k);
      if (!muk.contains(lak)) continue;
      if (!SkewShape(muk, lak).is_horizontal_strip()) continue;
      out.add(mu, c);
    }
  }
  return out;
}

namespace {

// substitute t -> 1/t exactly
QT invert_t(const QT& c) {
  int D = std::max(c.num().degree_in(1), c.den().degree_in(1));
  auto lift = [&](const kst::MPoly& p) {
    kst::MPoly out(2);
    for (auto& [e, co] : p.terms()) {
      kst::MPoly::Expo e2 = e;
      e2[1] = D - e[1];
      out.add_term(e2, co);
    }
    return out;
  };
  return QT(lift(c.num()), lift(c.den()));
}

}  // namespace

SymFunc omega_t_inverse(const SymFunc& f_ks, int k) {
  SymFunc acc(Basis::s);
  for (auto& [la, c] : f_ks.terms()) {
    SymFunc s = kschur_t_s(la, k);
    SymFunc twisted(Basis::s);
    for (auto& [mu, d] : s.terms()) twisted.add(mu.conjugate(), invert_t(d));
    acc = acc + twisted * invert_t(c);
  }
  return to_ks_t(acc, k);
}

SymFunc rectangle_product(int l, const SymFunc& f_ks, int k) {
  if (l < 1 || l > k) throw std::invalid_argument("rectangle width must be in [1,k]");
  SymFunc out(Basis::ks, k);
  for (auto& [la, c] : f_ks.terms()) {
    std::vector<int> parts = la.parts();
    for (int i = 0; i < k + 1 - l; ++i) parts.push_back(l);
    std::sort(parts.rbegin(), parts.rend());
    out.add(Partition(parts), c);
  }
  return out;
}

SymFunc branch(const SymFunc& f_ks, int k, int k2) {
  if (k2 < k) throw std::invalid_argument("branching goes to larger k");
  SymFunc acc(Basis::s);
  for (auto& [la, c] : f_ks.terms()) acc = acc + kschur_t_s(la, k) * c;
  return to_ks_t(acc, k2);
}

SymFunc k_mn(int r, const SymFunc& f, int k, MNSide side) {
  if (r < 1 || r > k) throw std::invalid_argument("k-MN needs 1 <= r <= k");
  if (side == MNSide::kschur) {
    SymFunc out(Basis::ks, k);
    for (auto& [la, c] : f.terms())
      for (const Partition& mu : bounded_partitions(la.size() + r, k)) {
        auto kr = shapes::k_ribbon_test(la, mu, k);
        if (kr.ok) out.add(mu, c * qt_rat(kr.height % 2 ? Rat(-1) : Rat(1)));
      }
    return out;
  }
  // dual side by pairing: [dks_mu] (p_r dks_la) = [ks_la] (p_r^perp ks_mu)
  SymFunc out(Basis::dks, k);
  for (auto& [la, c] : f.terms())
    for (const Partition& mu : bounded_partitions(la.size() + r, k)) {
      SymFunc ksm = kschur_t1(mu, k);  // h basis
      SymFunc dropped = symfunc::perp(SymFunc::generator(Basis::p, Partition{r}), ksm);
      QT coeff = to_ks_t1(dropped, k).coeff(la);
      if (!coeff.is_zero()) out.add(mu, c * coeff);
    }
  return out;
}

SymFunc ks_product(const SymFunc& f_ks, const SymFunc& g_ks, int k) {
  SymFunc fh(Basis::h), gh(Basis::h);
  for (auto& [la, c] : f_ks.terms()) fh = fh + kschur_t1(la, k) * c;
  for (auto& [la, c] : g_ks.terms()) gh = gh + kschur_t1(la, k) * c;
  return h_to_ks(symfunc::convert(symfunc::mul(fh, gh), Basis::h), k);
}

long klr(const Partition& la, const Partition& mu, const Partition& nu, int k) {
  SymFunc prod = ks_product(SymFunc::generator(Basis::ks, la, k),
                            SymFunc::generator(Basis::ks, mu, k), k);
  QT c = prod.coeff(nu);
  if (c.is_zero()) return 0;
  Rat r = c.as_rat();
  assert(r.get_den() == 1);
  return (long)r.get_num().get_si();
}

SymFunc macdonald_to_ks(const Partition& mu, int k) {
  if (mu.part(1) > k) throw std::invalid_argument("index must be k-bounded");
  return to_ks_t(symfunc::macdonald_H(mu), k);
}

std::map<std::pair<Partition, Partition>, QT> ks_coproduct(const Partition& la, int k) {
  SymFunc fs = kschur_t_s(la, k);
  std::map<std::pair<Partition, Partition>, QT> tensor;
  for (auto& [nu, c] : fs.terms())
    for (int d1 = 0; d1 <= nu.size(); ++d1)
      for (auto& mu : shapes::partitions_of(d1))
        for (auto& rho : shapes::partitions_of(nu.size() - d1)) {
          Rat lr = symfunc::lr_coeff(mu, rho, nu);
          if (sgn(lr) == 0) continue;
          auto key = std::make_pair(mu, rho);
          auto it = tensor.find(key);
          if (it == tensor.end()) {
            tensor[key] = c * qt_rat(lr);
          } else {
            it->second += c * qt_rat(lr);
            if (it->second.is_zero()) tensor.erase(it);
          }
        }
  // re-expand both legs in ks(k;t)
  std::map<std::pair<Partition, Partition>, QT> mid;
  {
    std::map<Partition, SymFunc> by_right;
    for (auto& [key, c] : tensor) {
      auto& f = by_right.try_emplace(key.second, Basis::s).first->second;
      f.add(key.first, c);
    }
    for (auto& [rho, f] : by_right) {
      SymFunc e = to_ks_t(f, k);
      for (auto& [al, c] : e.terms()) mid[{al, rho}] = c;
    }
  }
  std::map<std::pair<Partition, Partition>, QT> out;
  {
    std::map<Partition, SymFunc> by_left;
    for (auto& [key, c] : mid) {
      auto& f = by_left.try_emplace(key.first, Basis::s).first->second;
      f.add(key.second, c);
    }
    for (auto& [al, f] : by_left) {
      SymFunc e = to_ks_t(f, k);
      for (auto& [be, c] : e.terms()) out[{al, be}] = c;
    }
  }
  return out;
}

SymFunc theta_upper(const SymFunc& f, int k) {
  SymFunc fs = symfunc::convert(f, Basis::s);
  SymFunc out(Basis::s);
  for (int d = 0; d <= fs.max_degree(); ++d) {
    SymFunc comp = fs.component(d);
    if (comp.is_zero()) continue;
    for (auto& la : bounded_partitions(d, k)) {
      QT c = symfunc::scalar(symfunc::hl_qp(la), comp);
      if (!c.is_zero()) out = out + symfunc::hl_p(la) * c;
    }
  }
  return out;
}

SymFunc theta_lower(const SymFunc& f, int k) {
  SymFunc qp = symfunc::to_hl_qp(f);
  SymFunc kept(Basis::s);
  for (auto& [la, c] : qp.terms())
    if (la.part(1) <= k) kept = kept + symfunc::hl_qp(la) * c;
  return kept;
}

SymFunc dks_t_product(const Partition& la, const Partition& mu, int k) {
  SymFunc prod = symfunc::mul(dual_kschur_t(la, k), dual_kschur_t(mu, k));
  SymFunc proj = theta_upper(prod, k);
  int d = la.size() + mu.size();
  auto cols = bounded_partitions(d, k);
  auto all = shapes::partitions_of(d);
  std::map<Partition, int> row_index;
  for (int i = 0; i < (int)all.size(); ++i) row_index[all[i]] = i;
  Mat<QT> M((int)all.size(), (int)cols.size(), qt_zero());
  for (int j = 0; j < (int)cols.size(); ++j) {
    SymFunc col = symfunc::convert(dual_kschur_t(cols[j], k), Basis::s);
    for (auto& [nu, c] : col.terms()) M(row_index.at(nu), j) = c;
  }
  std::vector<QT> b(all.size(), qt_zero());
  SymFunc projs = symfunc::convert(proj, Basis::s);
  for (auto& [nu, c] : projs.terms()) b[row_index.at(nu)] = c;
  auto x = solve_linear(M, b, qt_zero());
  if (!x) throw std::domain_error("projected product left the dks_t span");
  SymFunc out(Basis::dks, k);
  for (int j = 0; j < (int)cols.size(); ++j) out.add(cols[j], (*x)[j]);
  return out;
}

SymFunc ks_t_product(const Partition& la, const Partition& mu, int k) {
  SymFunc prod = symfunc::mul(kschur_t_s(la, k), kschur_t_s(mu, k));
  return to_ks_t(theta_lower(prod, k), k);
}

}  // namespace kst::kschur
