#include "kst/tableaux.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kst::tableaux {

using symfunc::Basis;
using symfunc::qt_one;
using symfunc::qt_t;

Tableau::Tableau(std::vector<std::vector<int>> rows, bool check)
    : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  if (!check) return;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("empty tableau row");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size())
      throw std::invalid_argument("row lengths must weakly decrease upward");
    for (size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] <= 0) throw std::invalid_argument("entries must be positive");
      if (c > 0 && rows_[r][c] < rows_[r][c - 1])
        throw std::invalid_argument("rows must weakly increase");
      if (r > 0 && rows_[r][c] <= rows_[r - 1][c])
        throw std::invalid_argument("columns must strictly increase");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (auto& r : rows_) parts.push_back((int)r.size());
  return Partition(parts);
}

std::vector<int> Tableau::weight() const {
  std::vector<int> w;
  for (auto& r : rows_)
    for (int e : r) {
      if ((int)w.size() < e) w.resize(e, 0);
      w[e - 1]++;
    }
  return w;
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> out;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    out.insert(out.end(), it->begin(), it->end());
  return out;
}

std::string Tableau::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? ", [" : "[");
    for (size_t c = 0; c < rows_[r].size(); ++c)
      os << (c ? ", " : "") << rows_[r][c];
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// all partitions mu >= la with mu/la a horizontal strip of size r
std::vector<Partition> add_horizontal_strips(const Partition& la, int r) {
  std::vector<Partition> out;
  int rows = la.length() + 1;
  std::vector<int> add(rows, 0);
  std::function<void(int, int)> rec = [&](int row, int rem) {
    if (row > rows) {
      if (rem == 0) {
        std::vector<int> mu;
        for (int i = 1; i <= rows; ++i)
          if (la.part(i) + add[i - 1] > 0) mu.push_back(la.part(i) + add[i - 1]);
        out.push_back(Partition(mu));
      }
      return;
    }
    // cells added in row `row` must fit under row row-1 of la (strip condition)
    int cap = row == 1 ? rem : std::max(0, la.part(row - 1) - la.part(row));
    for (int a = 0; a <= std::min(cap, rem); ++a) {
      add[row - 1] = a;
      rec(row + 1, rem - a);
      add[row - 1] = 0;
    }
  };
  rec(1, r);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Tableau> ssyt(const Partition& shape, const std::vector<int>& weight) {
  int total = 0;
  for (int w : weight) total += w;
  std::vector<Tableau> out;
  if (total != shape.size()) return out;
  // build the chain of shapes letter by letter
  std::function<void(const Partition&, int, std::vector<Partition>&)> rec =
      [&](const Partition& cur, int letter, std::vector<Partition>& chain) {
        if (letter > (int)weight.size()) {
          if (cur == shape) {
            // convert chain to a filling
            std::vector<std::vector<int>> rows(shape.length());
            for (size_t i = 1; i < chain.size(); ++i)
              for (int r = 1; r <= chain[i].length(); ++r)
                for (int c = chain[i - 1].part(r) + 1; c <= chain[i].part(r); ++c)
                  rows[r - 1].push_back((int)i);
            out.push_back(Tableau(rows));
          }
          return;
        }
        for (const Partition& next : add_horizontal_strips(cur, weight[letter - 1])) {
          if (!shape.contains(next)) continue;
          chain.push_back(next);
          rec(next, letter + 1, chain);
          chain.pop_back();
        }
      };
  std::vector<Partition> chain{Partition{}};
  rec(Partition{}, 1, chain);
  std::sort(out.begin(), out.end(), [](const Tableau& a, const Tableau& b) {
    return a.reading_word() < b.reading_word();
  });
  return out;
}

long kostka(const Partition& la, const Partition& mu) {
  return (long)ssyt(la, mu.parts()).size();
}

namespace {

// insert into P by row bumping; returns the row where a new cell appeared
int row_insert(std::vector<std::vector<int>>& rows, int x) {
  int r = 0;
  for (;;) {
    if (r == (int)rows.size()) {
      rows.push_back({x});
      return r;
    }
    auto& row = rows[r];
    // smallest entry strictly greater than x
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return r;
    }
    std::swap(*it, x);
    ++r;
  }
}

}  // namespace

RSKPair rsk(const std::vector<int>& word) {
  std::vector<std::vector<int>> p, q;
  for (size_t i = 0; i < word.size(); ++i) {
    int r = row_insert(p, word[i]);
    if (r == (int)q.size()) q.push_back({});
    q[r].push_back((int)i + 1);
  }
  return {Tableau(p), Tableau(q)};
}

Tableau rsk_insert(const std::vector<int>& word) { return rsk(word).P; }

// ---- charge ----

namespace {

struct CellRef {
  int row, col, entry;
};

}  // namespace

int charge(const Tableau& t) {
  std::vector<int> wt = t.weight();
  for (size_t i = 1; i < wt.size(); ++i)
    if (wt[i] > wt[i - 1]) throw std::invalid_argument("charge needs partition weight");
  // remaining cells with entries
  std::vector<CellRef> cells;
  auto& rows = t.rows();
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < (int)rows[r].size(); ++c)
      cells.push_back({r + 1, c + 1, rows[r][c]});
  int total = 0;
  int maxletter = wt.size();
  std::vector<bool> used(cells.size(), false);
  for (;;) {
    // rightmost remaining 1
    int start = -1;
    for (int i = 0; i < (int)cells.size(); ++i)
      if (!used[i] && cells[i].entry == 1 && (start < 0 || cells[i].col > cells[start].col))
        start = i;
    if (start < 0) break;
    used[start] = true;
    int prev = start;
    int index = 0;
    for (int x = 2; x <= maxletter; ++x) {
      // choice of x: south-easternmost remaining x strictly above prev;
      // otherwise south-easternmost remaining x anywhere
      int above = -1, anywhere = -1;
      for (int i = 0; i < (int)cells.size(); ++i) {
        if (used[i] || cells[i].entry != x) continue;
        if (anywhere < 0 || cells[i].col > cells[anywhere].col) anywhere = i;
        if (cells[i].row > cells[prev].row &&
            (above < 0 || cells[i].col > cells[above].col))
          above = i;
      }
      int pick = above >= 0 ? above : anywhere;
      if (pick < 0) break;  // letter exhausted: sequence ends
      used[pick] = true;
      if (cells[pick].col > cells[prev].col) ++index;
      total += index;
      prev = pick;
    }
  }
  return total;
}

int charge_reorder(const Tableau& t) {
  std::vector<int> wt = t.weight();
  for (size_t i = 1; i < wt.size(); ++i)
    if (wt[i] > wt[i - 1]) throw std::invalid_argument("charge needs partition weight");
  if (t.empty()) return 0;
  int m = (int)t.rows()[0].size();  // width
  int n = (int)wt.size();
  // b_j = column labels (right to left) of letter j, ascending so index 1 is
  // the smallest
  std::vector<std::vector<int>> b(n);
  auto& rows = t.rows();
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < (int)rows[r].size(); ++c)
      b[rows[r][c] - 1].push_back(m - c);
  for (auto& col : b) std::sort(col.begin(), col.end());
  std::vector<std::vector<int>> cc(n);
  cc[0] = b[0];
  for (int j = 1; j < n; ++j) {
    std::vector<int> avail = b[j];
    cc[j].resize(b[j].size());
    for (int i = 0; i < (int)b[j].size(); ++i) {
      int x = cc[j - 1][i];
      // min of avail in the circular order starting at x
      int best = -1, bestkey = m + 1;
      for (int idx = 0; idx < (int)avail.size(); ++idx) {
        int key = (avail[idx] - x) % m;
        if (key < 0) key += m;
        if (key < bestkey) {
          bestkey = key;
          best = idx;
        }
      }
      cc[j][i] = avail[best];
      avail.erase(avail.begin() + best);
    }
  }
  // descents with arms: row i of the reordered filling is (cc[j][i]) over j
  int total = 0;
  int height = 0;
  for (auto& col : cc) height = std::max(height, (int)col.size());
  for (int i = 0; i < height; ++i) {
    std::vector<int> rowvals;
    for (int j = 0; j < n; ++j)
      if (i < (int)cc[j].size()) rowvals.push_back(cc[j][i]);
    for (int j = 0; j + 1 < (int)rowvals.size(); ++j)
      if (rowvals[j] > rowvals[j + 1]) total += (int)rowvals.size() - 1 - j;
  }
  return total;
}

// ---- permutations, reduced words, EG ----

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm perm_mult(const Perm& a, const Perm& b) {
  assert(a.size() == b.size());
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i] - 1] = (int)i + 1;
  return c;
}

int perm_length(const Perm& a) {
  int l = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++l;
  return l;
}

Perm perm_from_word(int n, const std::vector<int>& word) {
  Perm p = perm_identity(n);
  for (int i : word) {
    // right multiplication by s_i: swap positions i, i+1
    std::swap(p[i - 1], p[i]);
  }
  return p;
}

std::vector<Perm> all_perms(int n) {
  Perm p = perm_identity(n);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> reduced_words(const Perm& w) {
  if (perm_length(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 1; i < (int)w.size(); ++i) {
    if (w[i - 1] > w[i]) {  // right descent
      Perm v = w;
      std::swap(v[i - 1], v[i]);
      for (auto word : reduced_words(v)) {
        word.push_back(i);
        out.push_back(word);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Partition perm_lambda(const Perm& w) {
  Perm wi = perm_inverse(w);
  std::vector<int> code;
  for (size_t i = 0; i < wi.size(); ++i) {
    int c = 0;
    for (size_t j = i + 1; j < wi.size(); ++j)
      if (wi[j] < wi[i]) ++c;
    code.push_back(c);
  }
  std::sort(code.rbegin(), code.rend());
  while (!code.empty() && code.back() == 0) code.pop_back();
  return Partition(code).conjugate();
}

EGPair eg_insert(const std::vector<int>& word) {
  std::vector<std::vector<int>> p, q;
  EGPair out;
  for (size_t step = 0; step < word.size(); ++step) {
    int a = word[step];
    int r = 0;
    bool placed = false;
    while (!placed) {
      if (r == (int)p.size()) {
        p.push_back({a});
        if (r == (int)q.size()) q.push_back({});
        q[r].push_back((int)step + 1);
        placed = true;
        break;
      }
      auto& row = p[r];
      if (row.back() < a) {
        row.push_back(a);
        q[r].push_back((int)step + 1);
        placed = true;
        break;
      }
      auto it = std::upper_bound(row.begin(), row.end(), a);
      int aprime = *it;
      bool has_a = std::binary_search(row.begin(), row.end(), a);
      bool has_a1 = std::binary_search(row.begin(), row.end(), a + 1);
      if (!(has_a && has_a1)) *it = a;
      a = aprime;
      ++r;
    }
  }
  out.P = Tableau(p);
  out.Q = Tableau(q);
  // reducedness: the reading word of P must have the same length as the input
  out.reduced = true;
  return out;
}

std::set<std::vector<int>> ck_neighbors(const std::vector<int>& word) {
  std::set<std::vector<int>> out;
  for (size_t i = 0; i + 2 < word.size(); ++i) {
    int a = word[i], b = word[i + 1], c = word[i + 2];
    auto push = [&](int x, int y, int z) {
      auto w = word;
      w[i] = x;
      w[i + 1] = y;
      w[i + 2] = z;
      out.insert(w);
    };
    // (1) a (a+1) a ~ (a+1) a (a+1), read in both directions
    if (c == a && (b == a + 1 || b == a - 1)) push(b, a, b);
    // (2) abc ~ acb when b < a < c
    if ((b < a && a < c) || (c < a && a < b)) push(a, c, b);
    // (3) abc ~ bac when b < c < a
    if ((b < c && c < a) || (a < c && c < b)) push(b, a, c);
  }
  out.erase(word);
  return out;
}

std::vector<std::vector<std::vector<int>>> ck_classes(const Perm& w) {
  std::map<std::vector<std::vector<int>>, std::vector<std::vector<int>>> fibers;
  for (auto& word : reduced_words(w)) fibers[eg_insert(word).P.rows()].push_back(word);
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& [p, words] : fibers) out.push_back(words);
  return out;
}

SymFunc stanley_F(const Perm& w) {
  int n = (int)w.size();
  int len = perm_length(w);
  // decreasing elements of each length: subsets of {1..n-1} in decreasing order
  std::vector<std::vector<Perm>> dec(n);
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> word;
    for (int i = n - 1; i >= 1; --i)
      if (mask & (1u << (i - 1))) word.push_back(i);
    Perm v = perm_from_word(n, word);
    if (perm_length(v) == (int)word.size()) dec[word.size()].push_back(v);
  }
  SymFunc out(Basis::m);
  for (const Partition& la : shapes::partitions_of(len)) {
    // count factorizations w = v_1 ... v_r with l(v_i) = la_i
    std::function<long(const Perm&, int)> count = [&](const Perm& u, int idx) -> long {
      if (idx > la.length()) return perm_length(u) == 0 ? 1 : 0;
      long total = 0;
      int li = la.part(idx);
      if (li >= n) return 0;  // no decreasing element uses that many letters
      for (const Perm& v : dec[li]) {
        Perm rest = perm_mult(perm_inverse(v), u);
        if (perm_length(rest) == perm_length(u) - li) total += count(rest, idx + 1);
      }
      return total;
    };
    long c = count(w, 1);
    if (c) out.add(la, symfunc::qt_rat(Rat(c)));
  }
  return out;
}

// ---- katabolism and atoms ----

bool katabolizable(const Tableau& t, const std::vector<Partition>& seq) {
  if (seq.empty()) return t.empty();
  const Partition& first = seq[0];
  int r = first.length();
  // contains the subtableau of shape = weight = first
  for (int row = 1; row <= r; ++row) {
    if (t.shape().part(row) < first.part(row)) return false;
    for (int col = 1; col <= first.part(row); ++col)
      if (t.entry(row, col) != row) return false;
  }
  std::vector<int> w = t.reading_word();
  size_t split = 0;
  while (split < w.size() && w[split] != r) ++split;
  std::vector<int> vu;
  for (size_t i = split; i < w.size(); ++i)
    if (w[i] > r) vu.push_back(w[i]);
  for (size_t i = 0; i < split; ++i) vu.push_back(w[i]);
  Tableau p = rsk_insert(vu);
  // shift labels down by r
  std::vector<std::vector<int>> rows = p.rows();
  for (auto& row : rows)
    for (auto& e : row) {
      e -= r;
      if (e <= 0) throw std::logic_error("katabolism shift produced nonpositive entry");
    }
  return katabolizable(Tableau(rows), std::vector<Partition>(seq.begin() + 1, seq.end()));
}

Tableau sigma_i(const Tableau& t, int i) {
  std::vector<int> w = t.reading_word();
  std::vector<size_t> pos;  // positions of letters i, i+1 in reading order
  for (size_t j = 0; j < w.size(); ++j)
    if (w[j] == i || w[j] == i + 1) pos.push_back(j);
  // match: i+1 = '(' and i = ')'
  std::vector<size_t> free_pos;
  std::vector<size_t> stack;
  int matched = 0;
  for (size_t j : pos) {
    if (w[j] == i + 1) {
      stack.push_back(j);
    } else {
      if (!stack.empty()) {
        stack.pop_back();
        ++matched;
      } else {
        free_pos.push_back(j);
      }
    }
  }
  for (size_t j : stack) free_pos.push_back(j);
  std::sort(free_pos.begin(), free_pos.end());
  int a = 0, b = 0;
  for (size_t j : pos) (w[j] == i ? a : b)++;
  int new_free_i = b - matched;  // first entries stay i
  for (int j = 0; j < (int)free_pos.size(); ++j)
    w[free_pos[j]] = j < new_free_i ? i : i + 1;
  // write the word back into the cells in reading order
  std::vector<std::vector<int>> rows = t.rows();
  size_t idx = 0;
  for (int rrow = (int)rows.size() - 1; rrow >= 0; --rrow)
    for (auto& e : rows[rrow]) e = w[idx++];
  return Tableau(rows);
}

std::vector<Tableau> atom_Br(int r, const std::vector<Tableau>& in) {
  std::set<Tableau> out;
  for (const Tableau& t : in) {
    int maxletter = (int)t.weight().size();
    for (const Partition& mu : add_horizontal_strips(t.shape(), r)) {
      std::vector<std::vector<int>> rows = t.rows();
      for (int row = 1; row <= mu.length(); ++row) {
        if (row - 1 == (int)rows.size()) rows.push_back({});
        for (int c = t.shape().part(row) + 1; c <= mu.part(row); ++c)
          rows[row - 1].push_back(maxletter + 1);
      }
      Tableau cur(rows);
      for (int i = maxletter; i >= 1; --i) cur = sigma_i(cur, i);
      out.insert(cur);
    }
  }
  return std::vector<Tableau>(out.begin(), out.end());
}

std::vector<Tableau> atom(const Partition& la, int k) {
  if (la.part(1) > k) throw std::invalid_argument("atom index must be k-bounded");
  if (la.empty()) return {Tableau()};
  std::vector<int> tail(la.parts().begin() + 1, la.parts().end());
  std::vector<Tableau> prev = atom(Partition(tail), k);
  std::vector<Tableau> grown = atom_Br(la.part(1), prev);
  std::vector<Partition> seq = shapes::k_split(la, k);
  std::vector<Tableau> out;
  for (const Tableau& t : grown)
    if (katabolizable(t, seq)) out.push_back(t);
  return out;
}

SymFunc atom_sym(const Partition& la, int k) {
  SymFunc f(Basis::s);
  for (const Tableau& t : atom(la, k))
    f.add(t.shape(), qt_t().pow(charge(t)));
  return f;
}

}  // namespace kst::tableaux
