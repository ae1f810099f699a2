#include <set>

#include "doctest.h"
#include "kst/growth.hpp"

using namespace kst::growth;
using kst::shapes::Partition;

TEST_CASE("classical rsk growth") {
  auto g = rsk_growth({4, 1, 3, 2});
  CHECK(g.P.rows() == std::vector<std::vector<int>>{{1, 2}, {3}, {4}});
  CHECK(g.Q.rows() == std::vector<std::vector<int>>{{1, 3}, {2}, {4}});
  CHECK(rsk_growth_inverse(g.P, g.Q) == std::vector<int>{4, 1, 3, 2});
  auto id = rsk_growth({1, 2, 3});
  CHECK(id.P.rows() == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(id.P == id.Q);
  // all of S_4: round trip and agreement with row insertion; transposing the
  // grid inverts the permutation
  for (auto& w : kst::tableaux::all_perms(4)) {
    auto gr = rsk_growth(w);
    auto direct = kst::tableaux::rsk(w);
    CHECK(gr.P == direct.P);
    CHECK(gr.Q == direct.Q);
    CHECK(rsk_growth_inverse(gr.P, gr.Q) == w);
    auto inv = rsk_growth(kst::tableaux::perm_inverse(w));
    CHECK(inv.P == gr.Q);
    CHECK(inv.Q == gr.P);
  }
  std::vector<std::vector<int>> r12 = {{1, 2}}, r1_2 = {{1}, {2}};
  CHECK_THROWS(rsk_growth_inverse(kst::tableaux::Tableau(r12),
                                  kst::tableaux::Tableau(r1_2)));
}

TEST_CASE("affine insertion 4132") {
  // k=1 pair
  auto a1 = affine_insert(1, {4, 1, 3, 2});
  CHECK(a1.P.shape().shape() == Partition{4, 3, 2, 1});
  CHECK(a1.Q.shape().shape() == Partition{4, 3, 2, 1});
  CHECK(a1.P.rows() == std::vector<std::vector<int>>{
                           {-1, -2, 3, 4}, {2, -3, 4}, {3, 4}, {-4}});
  CHECK(affine_insert_inverse(a1.P, a1.Q) == std::vector<int>{4, 1, 3, 2});
  // k=2 pair from the printed grid
  auto a2 = affine_insert(2, {4, 1, 3, 2});
  CHECK(a2.P.shape().shape() == Partition{3, 1, 1});
  CHECK(a2.P.rows() ==
        std::vector<std::vector<int>>{{-1, -2, 3}, {-3}, {-4}});
  CHECK(a2.Q.core_rows() ==
        std::vector<std::vector<int>>{{1, 3, 4}, {2}, {3}});
  CHECK(affine_insert_inverse(a2.P, a2.Q) == std::vector<int>{4, 1, 3, 2});
  // k=3 pair
  auto a3 = affine_insert(3, {4, 1, 3, 2});
  CHECK(a3.P.rows() ==
        std::vector<std::vector<int>>{{-1, -2, 4}, {-3}, {-4}});
  CHECK(a3.Q.core_rows() ==
        std::vector<std::vector<int>>{{1, 3, 4}, {2}, {4}});
  // large k reduces to RSK
  auto a9 = affine_insert(9, {4, 1, 3, 2});
  CHECK(a9.P.shape().shape() == Partition{2, 1, 1});
  auto cls = rsk_growth({4, 1, 3, 2});
  CHECK(a9.Q.core_rows() == cls.Q.rows());
}

TEST_CASE("S3 table") {
  // the printed table for k = 1 and k = 2; strong rows use negatives for marks
  struct Entry {
    std::vector<int> perm;
    std::vector<std::vector<int>> p1, q1, p2, q2;
  };
  std::vector<Entry> table = {
      {{1, 2, 3},
       {{-1, -2, -3}, {2, 3}, {3}},
       {{1, 2, 3}, {2, 3}, {3}},
       {{-1, -2, -3}, {3}},
       {{1, 2, 3}, {3}}},
      {{1, 3, 2},
       {{-1, -2, 3}, {2, -3}, {3}},
       {{1, 2, 3}, {2, 3}, {3}},
       {{-1, -2, 3}, {-3}},
       {{1, 2, 3}, {3}}},
      {{2, 1, 3},
       {{-1, 2, -3}, {-2, 3}, {3}},
       {{1, 2, 3}, {2, 3}, {3}},
       {{-1, -3}, {-2}, {3}},
       {{1, 3}, {2}, {3}}},
      {{2, 3, 1},
       {{-1, 2, 3}, {-2, -3}, {3}},
       {{1, 2, 3}, {2, 3}, {3}},
       {{-1, 3, -3}, {-2}},
       {{1, 2, 3}, {3}}},
      {{3, 1, 2},
       {{-1, -2, 3}, {2, 3}, {-3}},
       {{1, 2, 3}, {2, 3}, {3}},
       {{-1, -2}, {-3}, {3}},
       {{1, 3}, {2}, {3}}},
      {{3, 2, 1},
       {{-1, 2, 3}, {-2, 3}, {-3}},
       {{1, 2, 3}, {2, 3}, {3}},
       {{-1, 3}, {-2}, {-3}},
       {{1, 3}, {2}, {3}}},
  };
  for (auto& e : table) {
    auto a1 = affine_insert(1, e.perm);
    CHECK(a1.P.rows() == e.p1);
    CHECK(a1.Q.core_rows() == e.q1);
    auto a2 = affine_insert(2, e.perm);
    CHECK(a2.P.rows() == e.p2);
    CHECK(a2.Q.core_rows() == e.q2);
  }
}

TEST_CASE("cauchy and bijectivity") {
  CHECK(cauchy_check(1, 1));
  CHECK(cauchy_check(2, 1));
  CHECK(cauchy_check(3, 1));
  CHECK(cauchy_check(3, 2));
  CHECK(cauchy_check(4, 1));
  CHECK(cauchy_check(4, 2));
  CHECK(cauchy_check(4, 3));
}
