#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kst::shapes {

// Weakly decreasing positive parts; the empty partition is valid.
// Cells are 1-based (row, col), French convention: row 1 is the longest.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  int length() const { return (int)parts_.size(); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  // graded, then reverse-lexicographic within a grade ([4] before [3,1])
  bool operator<(const Partition& o) const;

  bool contains(const Partition& o) const;  // cellwise containment
  Partition conjugate() const;
  int hook(int row, int col) const;  // cell must lie in the diagram
  int nstat() const;                 // n(lambda) = sum (i-1) lambda_i
  long zstat() const;                // z_lambda
  int mult(int i) const;             // number of parts equal to i

  Partition add_cell(int row) const;
  Partition remove_cell(int row) const;

  std::string str() const;

 private:
  std::vector<int> parts_;
};

struct Cell {
  int row = 1, col = 1;
  int content() const { return col - row; }
  bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
  bool operator<(const Cell& o) const {
    return row != o.row ? row < o.row : col < o.col;
  }
};

struct SkewShape {
  Partition outer, inner;
  SkewShape(Partition out, Partition in);
  std::vector<Cell> cells() const;
  int size() const { return outer.size() - inner.size(); }
  bool is_horizontal_strip() const;
  bool is_vertical_strip() const;
  bool is_ribbon() const;     // contains no 2x2 block
  bool is_connected() const;  // edge-connected cell set
};

struct StripKind {
  bool horizontal, vertical, ribbon, connected;
};
StripKind strip_kind(const SkewShape& s);

class Core {
 public:
  Core(Partition shape, int modulus);  // modulus = k+1 >= 2
  const Partition& shape() const { return shape_; }
  int modulus() const { return modulus_; }
  int k() const { return modulus_ - 1; }
  int length() const;  // number of cells with hook <= k
  bool operator==(const Core& o) const {
    return modulus_ == o.modulus_ && shape_ == o.shape_;
  }
  bool operator!=(const Core& o) const { return !(*this == o); }
  bool operator<(const Core& o) const {
    return shape_ < o.shape_;
  }
  int residue(const Cell& c) const;

  std::string str() const;

 private:
  Partition shape_;
  int modulus_;
};

int hook_length(const Partition& p, const Cell& c);
Partition conjugate(const Partition& p);
bool dominates(const Partition& mu, const Partition& la);  // mu >= la
std::vector<Partition> k_split(const Partition& p, int k);

Partition core_to_bounded(const Core& c);                  // the map p
Core bounded_to_core(const Partition& p, int k);           // the map c
int core_length(const Core& c);
Partition k_conjugate(const Partition& p, int k);

// Independent string-decomposition computation of both (la^{omega_k})' and
// c(la); must agree with k_conjugate / bounded_to_core.
struct KConjStrings {
  Partition conj_of_kconj;  // (la^{omega_k})'
  Partition core;           // c(la) as a plain partition
};
KConjStrings k_conjugate_strings(const Partition& p, int k);

// All addable / removable corners of a core having residue i.
struct Corners {
  std::vector<Cell> addable, removable;
};
Corners residues_and_corners(const Core& c, int i);
std::vector<Cell> addable_corners(const Partition& p);
std::vector<Cell> removable_corners(const Partition& p);

// k-ribbon test per the Murnaghan-Nakayama rule; "height" is the number of
// vertical dominoes in mu/la. ribbon_only_failure flags the case where
// condition (2) (the core skew being a ribbon) is the only failing one.
struct KRibbon {
  bool ok = false;
  int height = 0;
  bool ribbon_only_failure = false;
};
KRibbon k_ribbon_test(const Partition& la, const Partition& mu, int k);

// Enumeration in graded reverse-lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n, int max_part = -1);
std::vector<Core> cores_of_length(int n, int modulus);

std::string json(const Partition& p);
std::string json(const Core& c);

}  // namespace kst::shapes
