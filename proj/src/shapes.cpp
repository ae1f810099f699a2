#include "kst/shapes.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kst::shapes {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
      throw std::invalid_argument("not weakly decreasing positive parts");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::operator<(const Partition& o) const {
  if (size() != o.size()) return size() < o.size();
  return parts_ > o.parts_;  // reverse-lex: [4] before [3,1]
}

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (int i = 1; i <= o.length(); ++i)
    if (part(i) < o.part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  if (empty()) return {};
  std::vector<int> c(parts_[0], 0);
  for (int r = 1; r <= parts_[0]; ++r)
    for (int p : parts_)
      if (p >= r) c[r - 1]++;
  return Partition(c);
}

int Partition::hook(int row, int col) const {
  return hook_length(*this, Cell{row, col});
}

int Partition::nstat() const {
  int s = 0;
  for (int i = 1; i <= length(); ++i) s += (i - 1) * parts_[i - 1];
  return s;
}

long Partition::zstat() const {
  long z = 1;
  int i = 1;
  while (i <= length()) {
    int v = parts_[i - 1];
    int m = 0;
    while (i <= length() && parts_[i - 1] == v) {
      ++m;
      ++i;
    }
    for (int j = 1; j <= m; ++j) z *= j;
    for (int j = 0; j < m; ++j) z *= v;
  }
  return z;
}

int Partition::mult(int v) const {
  int m = 0;
  for (int p : parts_) m += (p == v);
  return m;
}

Partition Partition::add_cell(int row) const {
  std::vector<int> p = parts_;
  if (row == length() + 1)
    p.push_back(1);
  else
    p.at(row - 1)++;
  return Partition(p);
}

Partition Partition::remove_cell(int row) const {
  std::vector<int> p = parts_;
  p.at(row - 1)--;
  return Partition(p);
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts_.size(); ++i) os << (i ? ", " : "") << parts_[i];
  os << "]";
  return os.str();
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner))
    throw std::invalid_argument("inner shape not contained in outer shape");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> cs;
  for (int r = 1; r <= outer.length(); ++r)
    for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
      cs.push_back({r, c});
  return cs;
}

bool SkewShape::is_horizontal_strip() const {
  for (int r = 2; r <= outer.length(); ++r)
    if (outer.part(r) > inner.part(r - 1)) return false;
  return true;
}

bool SkewShape::is_vertical_strip() const {
  for (int r = 1; r <= outer.length(); ++r)
    if (outer.part(r) - inner.part(r) > 1) return false;
  return true;
}

bool SkewShape::is_ribbon() const {
  // no 2x2 block: rows r, r+1 both contain columns c, c+1
  for (int r = 1; r < outer.length(); ++r) {
    int lo = std::max(inner.part(r), inner.part(r + 1)) + 1;
    int hi = std::min(outer.part(r), outer.part(r + 1));
    if (hi - lo >= 1) return false;
  }
  return true;
}

bool SkewShape::is_connected() const {
  auto cs = cells();
  if (cs.empty()) return true;
  std::set<Cell> todo(cs.begin() + 1, cs.end());
  std::vector<Cell> stack{cs[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{c.row + 1, c.col}, Cell{c.row - 1, c.col},
                    Cell{c.row, c.col + 1}, Cell{c.row, c.col - 1}}) {
      auto it = todo.find(nb);
      if (it != todo.end()) {
        stack.push_back(*it);
        todo.erase(it);
      }
    }
  }
  return todo.empty();
}

StripKind strip_kind(const SkewShape& s) {
  return {s.is_horizontal_strip(), s.is_vertical_strip(), s.is_ribbon(),
          s.is_connected()};
}

int hook_length(const Partition& p, const Cell& c) {
  if (c.row < 1 || c.col < 1 || c.col > p.part(c.row))
    throw std::out_of_range("cell outside diagram");
  Partition cj = p.conjugate();
  return p.part(c.row) + cj.part(c.col) - c.row - c.col + 1;
}

Partition conjugate(const Partition& p) { return p.conjugate(); }

bool dominates(const Partition& mu, const Partition& la) {
  if (mu.size() != la.size())
    throw std::invalid_argument("dominance comparison needs equal sizes");
  int s_mu = 0, s_la = 0;
  int n = std::max(mu.length(), la.length());
  for (int i = 1; i <= n; ++i) {
    s_mu += mu.part(i);
    s_la += la.part(i);
    if (s_mu < s_la) return false;
  }
  return true;
}

std::vector<Partition> k_split(const Partition& p, int k) {
  if (p.part(1) > k) throw std::invalid_argument("partition not k-bounded");
  std::vector<Partition> out;
  std::vector<int> rest = p.parts();
  while (!rest.empty()) {
    int head = rest[0];
    if (head + (int)rest.size() - 1 <= k) {
      out.push_back(Partition(rest));
      break;
    }
    int take = k - head + 1;
    out.push_back(Partition(std::vector<int>(rest.begin(), rest.begin() + take)));
    rest.erase(rest.begin(), rest.begin() + take);
  }
  if (p.empty()) return {};
  return out;
}

Core::Core(Partition shape, int modulus)
    : shape_(std::move(shape)), modulus_(modulus) {
  if (modulus_ < 2) throw std::invalid_argument("core modulus must be >= 2");
  for (int r = 1; r <= shape_.length(); ++r)
    for (int c = 1; c <= shape_.part(r); ++c)
      if (hook_length(shape_, {r, c}) == modulus_)
        throw std::invalid_argument("shape has a cell of hook length k+1");
}

int Core::length() const { return core_length(*this); }

int Core::residue(const Cell& c) const {
  int r = (c.col - c.row) % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::string Core::str() const { return shape_.str(); }

Partition core_to_bounded(const Core& c) {
  std::vector<int> rows;
  const Partition& s = c.shape();
  for (int r = 1; r <= s.length(); ++r) {
    int cnt = 0;
    for (int col = 1; col <= s.part(r); ++col)
      if (hook_length(s, {r, col}) <= c.k()) ++cnt;
    rows.push_back(cnt);
  }
  return Partition(rows);
}

Core bounded_to_core(const Partition& p, int k) {
  if (p.part(1) > k) throw std::invalid_argument("partition not k-bounded");
  // slide rows to the right, from the top row down
  int n = p.length();
  std::vector<int> shift(n + 1, 0);  // shift[r] for 1-based row r
  std::vector<int> len(n + 1, 0);
  for (int r = 1; r <= n; ++r) len[r] = p.part(r);
  for (int r = n; r >= 1; --r) {
    // hooks of row r against rows above it (which are already placed)
    // cell (r, j) for j in [shift[r]+1 .. shift[r]+len[r]]
    // arm = shift[r] + len[r] - j; leg = #{r' > r : shift[r'] + len[r'] >= j}
    int s = (r == n) ? 0 : 0;
    // increase shift until all hooks <= k
    for (;;) {
      bool ok = true;
      for (int j = s + 1; j <= s + len[r] && ok; ++j) {
        int arm = s + len[r] - j;
        int leg = 0;
        for (int r2 = r + 1; r2 <= n; ++r2)
          if (shift[r2] + len[r2] >= j) ++leg;
        if (arm + leg + 1 > k) ok = false;
      }
      if (ok) break;
      ++s;
    }
    shift[r] = s;
  }
  std::vector<int> rows;
  for (int r = 1; r <= n; ++r) rows.push_back(shift[r] + len[r]);
  return Core(Partition(rows), k + 1);
}

int core_length(const Core& c) {
  const Partition& s = c.shape();
  int cnt = 0;
  for (int r = 1; r <= s.length(); ++r)
    for (int col = 1; col <= s.part(r); ++col)
      if (hook_length(s, {r, col}) < c.modulus()) ++cnt;
  return cnt;
}

Partition k_conjugate(const Partition& p, int k) {
  Core c = bounded_to_core(p, k);
  return core_to_bounded(Core(c.shape().conjugate(), k + 1));
}

KConjStrings k_conjugate_strings(const Partition& p, int k) {
  if (p.part(1) > k) throw std::invalid_argument("partition not k-bounded");
  int n = p.length();
  std::vector<int> string_id(n + 1, -1);
  std::vector<std::vector<int>> strings;  // rows (1-based), increasing
  // repeatedly start a string at the longest unassigned part (lowest row wins
  // ties, matching the top-to-bottom scan of equal parts)
  for (;;) {
    int start = -1;
    for (int r = 1; r <= n; ++r)
      if (string_id[r] < 0 && (start < 0 || p.part(r) > p.part(start))) start = r;
    if (start < 0) break;
    std::vector<int> rows;
    int r = start;
    while (r <= n && r >= 1) {
      rows.push_back(r);
      string_id[r] = (int)strings.size();
      int i = p.part(r);
      if (i == 0) break;
      r = r + (k + 1 - i);  // connect to the (k+1-i)-th row above
      if (r > n) break;
    }
    strings.push_back(rows);
  }
  std::vector<int> sums;
  for (auto& rows : strings) {
    int s = 0;
    for (int r : rows) s += p.part(r);
    sums.push_back(s);
  }
  std::sort(sums.begin(), sums.end(), std::greater<int>());
  std::vector<int> core_rows;
  for (int r = 1; r <= n; ++r) {
    int s = 0;
    for (int r2 : strings[string_id[r]])
      if (r2 >= r) s += p.part(r2);
    core_rows.push_back(s);
  }
  return {Partition(sums), Partition(core_rows)};
}

std::vector<Cell> addable_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length() + 1; ++r)
    if (p.part(r) < p.part(r - 1) || r == 1) out.push_back({r, p.part(r) + 1});
  return out;
}

std::vector<Cell> removable_corners(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= p.length(); ++r)
    if (p.part(r) > p.part(r + 1)) out.push_back({r, p.part(r)});
  return out;
}

Corners residues_and_corners(const Core& c, int i) {
  Corners out;
  for (Cell cell : addable_corners(c.shape()))
    if (c.residue(cell) == i) out.addable.push_back(cell);
  for (Cell cell : removable_corners(c.shape()))
    if (c.residue(cell) == i) out.removable.push_back(cell);
  return out;
}

static int vertical_dominoes(const SkewShape& s) {
  int cnt = 0;
  auto cs = s.cells();
  std::set<Cell> set(cs.begin(), cs.end());
  for (const Cell& c : cs)
    if (set.count({c.row + 1, c.col})) ++cnt;
  return cnt;
}

KRibbon k_ribbon_test(const Partition& la, const Partition& mu, int k) {
  KRibbon res;
  if (la.part(1) > k || mu.part(1) > k) return res;
  // (0) containment of both the shapes and their k-conjugates
  if (!mu.contains(la)) return res;
  Partition lak = k_conjugate(la, k), muk = k_conjugate(mu, k);
  if (!muk.contains(lak)) return res;
  int r = mu.size() - la.size();
  if (r <= 0) return res;  // size condition needs a nonempty skew
  Core cla = bounded_to_core(la, k), cmu = bounded_to_core(mu, k);
  SkewShape core_skew(cmu.shape(), cla.shape());
  // (3) contents form a cyclic interval of residues in [0, k]
  std::set<int> residues;
  for (const Cell& c : core_skew.cells()) residues.insert(cmu.residue(c));
  bool connected;
  if ((int)residues.size() > k + 1) {
    connected = false;
  } else if ((int)residues.size() == k + 1) {
    connected = true;
  } else {
    // an interval mod k+1 has exactly one cyclic gap run
    int gaps = 0;
    for (int i = 0; i <= k; ++i) {
      bool in_i = residues.count(i), in_next = residues.count((i + 1) % (k + 1));
      if (in_i && !in_next) ++gaps;
    }
    connected = gaps == 1 && !residues.empty();
  }
  // (4) height statistics
  int h = vertical_dominoes(SkewShape(mu, la));
  int hk = vertical_dominoes(SkewShape(muk, lak));
  bool heights = h + hk == r - 1;
  bool ribbon = core_skew.is_ribbon();
  res.height = h;
  res.ok = connected && heights && ribbon;
  res.ribbon_only_failure = connected && heights && !ribbon;
  return res;
}

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  if (max_part < 0 || max_part > n) max_part = n;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.push_back(Partition(cur));
      return;
    }
    for (int p = std::min(rem, mx); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, max_part);
  return out;
}

std::vector<Core> cores_of_length(int n, int modulus) {
  // graded revlex on the bounded partitions; matches the core listing order
  std::vector<Core> out;
  for (const Partition& p : partitions_of(n, modulus - 1))
    out.push_back(bounded_to_core(p, modulus - 1));
  return out;
}

std::string json(const Partition& p) { return p.str(); }

std::string json(const Core& c) {
  std::ostringstream os;
  os << "{\"shape\":" << c.shape().str() << ",\"modulus\":" << c.modulus() << "}";
  return os.str();
}

}  // namespace kst::shapes
