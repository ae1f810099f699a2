#pragma once

#include <set>
#include <vector>

#include "kst/shapes.hpp"
#include "kst/symfunc.hpp"

namespace kst::tableaux {

using shapes::Partition;
using symfunc::SymFunc;

// Rows bottom-up: rows()[0] is the longest (first) row.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows, bool check_semistandard = true);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const { return rows_[row - 1][col - 1]; }
  Partition shape() const;
  std::vector<int> weight() const;
  bool empty() const { return rows_.empty(); }
  // top row to bottom row, left to right
  std::vector<int> reading_word() const;

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
  bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

  std::string str() const;

 private:
  std::vector<std::vector<int>> rows_;
};

// all semistandard tableaux of the given shape and weight, sorted by
// row-reading word
std::vector<Tableau> ssyt(const Partition& shape, const std::vector<int>& weight);
long kostka(const Partition& la, const Partition& mu);

struct RSKPair {
  Tableau P, Q;
};
RSKPair rsk(const std::vector<int>& word);
Tableau rsk_insert(const std::vector<int>& word);  // P only

// charge via the index/choice rule and via the circular reordering rule
int charge(const Tableau& t);
int charge_reorder(const Tableau& t);

// ---- reduced words and Edelman-Greene ----

// permutations of S_n in one-line notation
using Perm = std::vector<int>;
Perm perm_identity(int n);
Perm perm_mult(const Perm& a, const Perm& b);  // composition a(b(x))
Perm perm_inverse(const Perm& a);
int perm_length(const Perm& a);
Perm perm_from_word(int n, const std::vector<int>& word);
std::vector<Perm> all_perms(int n);
std::vector<std::vector<int>> reduced_words(const Perm& w);
Partition perm_lambda(const Perm& w);  // conjugate of sorted code of w^{-1}

struct EGPair {
  Tableau P, Q;
  bool reduced = true;  // whether the input word was reduced
};
EGPair eg_insert(const std::vector<int>& word);

// Coxeter-Knuth classes = fibers of the EG insertion tableau on R(w)
std::vector<std::vector<std::vector<int>>> ck_classes(const Perm& w);
// apply the three CK relations at every position
std::set<std::vector<int>> ck_neighbors(const std::vector<int>& word);

// Stanley symmetric function of w in S_n, via decreasing factorizations
SymFunc stanley_F(const Perm& w);

// ---- katabolism and k-atoms ----

bool katabolizable(const Tableau& t, const std::vector<Partition>& seq);
Tableau sigma_i(const Tableau& t, int i);
std::vector<Tableau> atom_Br(int r, const std::vector<Tableau>& in);
std::vector<Tableau> atom(const Partition& la, int k);
SymFunc atom_sym(const Partition& la, int k);  // sum t^charge s_shape

}  // namespace kst::tableaux
