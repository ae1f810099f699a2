#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kst/rational.hpp"
#include "kst/shapes.hpp"

namespace kst::weyl {

using shapes::Core;
using shapes::Partition;

// Coxeter/Weyl group data from a generalized Cartan matrix. The lattice X is
// given by a free basis; simple roots live in X, simple coroots pair with it.
class RootDatum {
 public:
  // generic datum; roots_in_x rows are the alpha_i, coroot_pairings rows hold
  // <alpha^vee_i, e_j> for the X-basis e_j
  RootDatum(std::string name, std::vector<int> labels,
            std::vector<std::vector<int>> cartan,
            std::vector<std::vector<Rat>> roots_in_x,
            std::vector<std::vector<Rat>> coroot_pairings,
            std::vector<std::string> var_names);

  // built-ins: "A1", "A2", ... (finite, adjoint X=Q), "C2", "C3", ...,
  // and their untwisted affine companions "A1~", "C2~", ...
  static std::shared_ptr<const RootDatum> named(const std::string& name);
  static std::shared_ptr<const RootDatum> from_json_file(const std::string& path);
  static std::shared_ptr<const RootDatum> from_json(const std::string& text);

  const std::string& name() const { return name_; }
  int rank() const { return (int)labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int index_of_label(int label) const;
  int cartan(int i, int j) const { return cartan_[i][j]; }

  bool is_affine() const { return affine_; }
  int node0() const { return node0_; }                 // position of label 0
  const std::vector<int>& marks() const { return marks_; }
  const std::vector<int>& comarks() const { return comarks_; }
  // highest root / coroot of the finite sub-datum, in simple (co)root coords
  // indexed by position (entry at node0 is zero)
  const std::vector<int>& theta() const { return theta_; }
  const std::vector<int>& theta_vee() const { return theta_vee_; }

  int xrank() const { return (int)var_names_.size(); }
  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<std::vector<Rat>>& roots_in_x() const { return roots_in_x_; }
  const std::vector<std::vector<Rat>>& coroot_pairings() const {
    return coroot_pairings_;
  }
  // <alpha^vee_i, v> for v in X coordinates
  Rat pair(int i, const std::vector<Rat>& v) const;
  // action of s_i on X coordinates
  std::vector<Rat> reflect_x(int i, const std::vector<Rat>& v) const;
  // fundamental weight omega_i as X coordinates (finite datum only)
  std::vector<Rat> fundamental_weight(int i) const;

  bool is_type_a_affine() const;  // untwisted affine A, labels 0..n-1

 private:
  std::string name_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rat>> roots_in_x_;
  std::vector<std::vector<Rat>> coroot_pairings_;
  std::vector<std::string> var_names_;
  bool affine_ = false;
  int node0_ = -1;
  std::vector<int> marks_, comarks_, theta_, theta_vee_;
  void detect_affine();
};

using DatumPtr = std::shared_ptr<const RootDatum>;

// Group element, canonically the integer matrix of its action on the root
// lattice Q in the basis of simple roots (column j = w . alpha_j).
class WeylElement {
 public:
  static WeylElement identity(DatumPtr d);
  static WeylElement simple(DatumPtr d, int label);
  static WeylElement from_reduced_word(DatumPtr d, const std::vector<int>& word);
  // validated: the matrix must belong to the group (a reduced word is extracted)
  static WeylElement from_action_matrix(DatumPtr d, std::vector<long long> m);

  const DatumPtr& datum() const { return datum_; }
  const std::vector<long long>& matrix() const { return mat_; }

  bool is_identity() const;
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }
  bool operator!=(const WeylElement& o) const { return mat_ != o.mat_; }
  bool operator<(const WeylElement& o) const;

  int length() const;
  // lexicographically smallest reduced word, as labels
  const std::vector<int>& reduced_word() const;
  std::vector<int> left_descents() const;   // labels i with s_i w < w
  std::vector<int> right_descents() const;  // labels i with w s_i < w

  // action on a Q-coordinate vector (position-indexed)
  std::vector<long long> apply(const std::vector<long long>& v) const;
  std::vector<Rat> apply_x(const std::vector<Rat>& v) const;  // action on X

  // inversion set as positive-root coordinate vectors in Q
  std::vector<std::vector<long long>> inversions() const;

  std::string str() const;  // "s1*s2*s1" style from the canonical word

 private:
  WeylElement(DatumPtr d, std::vector<long long> m)
      : datum_(std::move(d)), mat_(std::move(m)) {}
  DatumPtr datum_;
  std::vector<long long> mat_;  // n x n row-major
  mutable std::optional<std::vector<int>> word_;
};

bool bruhat_le(const WeylElement& v, const WeylElement& w);

// reflection in the real root w . alpha_i, given by a word for w and a label
WeylElement reflection(DatumPtr d, const std::vector<int>& w_word, int label);

// all group elements with length <= bound, graded by length
std::vector<std::vector<WeylElement>> elements_by_length(DatumPtr d, int bound);

// minimal length coset representatives of W/W_J with length <= bound
std::vector<WeylElement> grassmannian_reps(DatumPtr d, const std::vector<int>& J,
                                           int bound);

// positive real roots of height <= bound (coordinate vectors in Q)
std::vector<std::vector<long long>> positive_roots(DatumPtr d, int height_bound);

// Bruhat covers w' > w with l(w') = l(w)+1, using reflections built from
// positive roots of bounded height (exhaustive for finite groups when the
// bound reaches the highest root height).
std::vector<WeylElement> bruhat_covers_up(const WeylElement& w, int root_height_bound);

// translation element t_mu for mu in the finite coroot lattice (affine datum);
// mu is indexed by the finite node positions, entry at node0 ignored
WeylElement translation(DatumPtr d, const std::vector<int>& mu);

// ---- affine type A ----

// Bijection of Z with w(i+n) = w(i)+n and sum (w(i)-i) = 0.
class AffinePermutation {
 public:
  AffinePermutation(int n, std::vector<long long> window);
  static AffinePermutation identity(int n);
  static AffinePermutation from_reduced_word(int n, const std::vector<int>& word);
  static AffinePermutation simple(int n, int i);
  static AffinePermutation transposition(int n, long long i, long long j);

  int n() const { return n_; }
  const std::vector<long long>& window() const { return window_; }
  long long operator()(long long x) const;

  AffinePermutation operator*(const AffinePermutation& o) const;
  AffinePermutation inverse() const;
  bool operator==(const AffinePermutation& o) const { return window_ == o.window_; }
  bool operator!=(const AffinePermutation& o) const { return !(*this == o); }
  bool operator<(const AffinePermutation& o) const { return window_ < o.window_; }

  bool is_identity() const;
  bool is_grassmannian() const;
  int length() const;
  std::vector<int> reduced_word() const;  // lex-min

  std::string str() const;

 private:
  int n_;
  std::vector<long long> window_;
};

// ---- cores and the affine symmetric group ----

Core core_action(int i, const Core& c);  // simple generator on a core
Core affine_to_core(const AffinePermutation& w, int modulus);
AffinePermutation core_to_affine(const Core& c);          // the map a
AffinePermutation bounded_to_affine(const Partition& p, int k);

std::vector<Core> weak_covers(const Core& c);
bool weak_le(const Core& lo, const Core& hi);
bool strong_le(const Core& lo, const Core& hi);  // Bruhat = containment

struct StrongMarkedCover {
  Core target = Core(Partition{}, 2);
  int content = 0;     // content of the marked ribbon head
  int components = 0;  // number of ribbon copies in target/source
  int height = 1;      // rows occupied by one ribbon
  int above = 0;       // ribbons above the marked one
  int size = 0;        // cells in one ribbon
};
std::vector<StrongMarkedCover> strong_marked_covers(const Core& c);
std::vector<Core> strong_covers(const Core& c);

// weak horizontal strip test: hi/lo is a horizontal strip using exactly
// (length difference) residues
bool is_weak_horizontal_strip(const Core& lo, const Core& hi);

AffinePermutation cyclically_decreasing(int n, const std::vector<int>& subset);
std::vector<AffinePermutation> cyclically_decreasing_of_length(int n, int r);

// conversions between window form and a Weyl element of an affine A datum
WeylElement to_weyl(const AffinePermutation& w, DatumPtr d);
AffinePermutation to_affine_permutation(const WeylElement& w);

}  // namespace kst::weyl
