#pragma once

#include <optional>
#include <vector>

#include "kst/kschur.hpp"
#include "kst/shapes.hpp"
#include "kst/tableaux.hpp"

namespace kst::growth {

using kschur::StrongMarkedTableau;
using kschur::WeakTableau;
using shapes::Core;
using shapes::Partition;

// Fomin growth diagram for classical RSK on permutation matrices. Rows of the
// matrix are indexed top to bottom; row i carries a 1 in column perm[i-1].
struct RSKGrowth {
  std::vector<std::vector<Partition>> grid;  // (n+1) x (n+1)
  tableaux::Tableau P, Q;
};
RSKGrowth rsk_growth(const std::vector<int>& perm);
std::vector<int> rsk_growth_inverse(const tableaux::Tableau& P,
                                    const tableaux::Tableau& Q);

// Affine insertion for permutation matrices: P strong, Q weak, same core shape.
struct AffineInsertion {
  StrongMarkedTableau P;
  WeakTableau Q;
};
AffineInsertion affine_insert(int k, const std::vector<int>& perm);
std::vector<int> affine_insert_inverse(const StrongMarkedTableau& P,
                                       const WeakTableau& Q);

// m! = sum over k-bounded la of m of f^strong * f^weak; checked by direct
// enumeration and by running the bijection over all of S_m
bool cauchy_check(int m, int k);

}  // namespace kst::growth
