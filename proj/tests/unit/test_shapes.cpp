#include "doctest.h"
#include "kst/shapes.hpp"

using namespace kst::shapes;

TEST_CASE("hook lengths") {
  Partition la{4, 3, 3, 3, 2, 2, 1};
  CHECK(hook_length(la, {3, 2}) == 5);
  CHECK(hook_length(Partition{1}, {1, 1}) == 1);
  CHECK(hook_length(Partition{5, 3, 1}, {1, 1}) == 7);
  CHECK_THROWS(hook_length(Partition{2}, {2, 1}));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{4, 3, 3, 3, 2, 2, 1}) == Partition{7, 6, 4, 1});
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominates(Partition{2, 2}, Partition{2, 2}));
  CHECK(!dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK_THROWS(dominates(Partition{2}, Partition{1}));
}

TEST_CASE("k-split") {
  Partition la{4, 3, 3, 3, 2, 2, 1};
  auto s4 = k_split(la, 4);
  REQUIRE(s4.size() == 4);
  CHECK(s4[0] == Partition{4});
  CHECK(s4[1] == Partition{3, 3});
  CHECK(s4[2] == Partition{3, 2});
  CHECK(s4[3] == Partition{2, 1});
  auto s5 = k_split(la, 5);
  REQUIRE(s5.size() == 3);
  CHECK(s5[0] == Partition{4, 3});
  CHECK(s5[1] == Partition{3, 3, 2});
  CHECK(s5[2] == Partition{2, 1});
  auto s9 = k_split(Partition{2, 1}, 9);
  REQUIRE(s9.size() == 1);
  CHECK(s9[0] == Partition{2, 1});
}

TEST_CASE("strips") {
  auto flags = strip_kind(SkewShape(Partition{2, 1}, Partition{1}));
  CHECK(!flags.connected);
  auto all = strip_kind(SkewShape(Partition{3, 1}, Partition{3, 1}));
  CHECK(all.horizontal);
  CHECK(all.vertical);
  CHECK(all.ribbon);
  auto h = strip_kind(SkewShape(Partition{2, 2}, Partition{1}));
  CHECK(!h.horizontal);
  // note: (5,3,1)/(3,1,1) IS a horizontal strip (columns 4,5 and 2,3)
  CHECK(strip_kind(SkewShape(Partition{5, 3, 1}, Partition{3, 1, 1})).horizontal);
}

TEST_CASE("core bijections") {
  Core c(Partition{12, 8, 5, 5, 2, 2, 1}, 5);
  CHECK(core_to_bounded(c) == Partition{4, 3, 3, 3, 2, 2, 1});
  CHECK(bounded_to_core(Partition{4, 3, 3, 3, 2, 2, 1}, 4) == c);
  CHECK(core_length(c) == 18);
  CHECK(bounded_to_core(Partition{3, 2, 1}, 3).shape() == Partition{5, 2, 1});
  CHECK(core_to_bounded(Core(Partition{}, 4)) == Partition{});
  CHECK(core_to_bounded(Core(Partition{6, 4, 2}, 3)) == Partition{2, 2, 2});
  CHECK(core_length(Core(Partition{6, 4, 2}, 3)) == 6);
  CHECK(bounded_to_core(Partition{1}, 7).shape() == Partition{1});
  CHECK_THROWS(Core(Partition{2, 2}, 3));  // hook 3 present
  // round trip, exhaustive small range
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 8; ++n)
      for (auto& la : partitions_of(n, k)) {
        Core cc = bounded_to_core(la, k);
        CHECK(core_length(cc) == n);
        CHECK(core_to_bounded(cc) == la);
      }
}

TEST_CASE("cores of length enumeration") {
  auto cs = cores_of_length(6, 3);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0].shape() == Partition{6, 4, 2});
  CHECK(cs[1].shape() == Partition{5, 3, 1, 1});
  CHECK(cs[2].shape() == Partition{4, 2, 2, 1, 1});
  CHECK(cs[3].shape() == Partition{3, 3, 2, 2, 1, 1});
  // counts match k-bounded partitions
  for (int k = 1; k <= 4; ++k)
    for (int n = 0; n <= 7; ++n)
      CHECK(cores_of_length(n, k + 1).size() == partitions_of(n, k).size());
}

TEST_CASE("k-conjugate") {
  CHECK(k_conjugate(Partition{4, 3, 3, 3, 2, 2, 1}, 4) ==
        Partition{3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1});
  CHECK(k_conjugate(Partition{2, 2}, 2) == Partition{1, 1, 1, 1});
  // large k reduces to conjugation
  CHECK(k_conjugate(Partition{3, 2}, 7) == Partition{2, 2, 1});
  // involution + string oracle
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 8; ++n)
      for (auto& la : partitions_of(n, k)) {
        Partition w = k_conjugate(la, k);
        CHECK(k_conjugate(w, k) == la);
        auto strings = k_conjugate_strings(la, k);
        CHECK(strings.conj_of_kconj == k_conjugate(la, k).conjugate());
        CHECK(strings.core == bounded_to_core(la, k).shape());
      }
}

TEST_CASE("k-conjugate strings example") {
  auto s = k_conjugate_strings(Partition{3, 3, 3, 2, 1}, 4);
  CHECK(s.conj_of_kconj == Partition{7, 5});
  CHECK(s.core == Partition{7, 5, 4, 2, 1});
  auto row = k_conjugate_strings(Partition{6}, 7);
  CHECK(row.core == Partition{6});
}

TEST_CASE("residues and corners") {
  Core c(Partition{7, 3, 1}, 5);
  // s_2 . (7,3,1) = (8,4,1,1): three addable corners of residue 2
  auto r2 = residues_and_corners(c, 2);
  CHECK(r2.addable.size() == 3);
  CHECK(r2.removable.empty());
  auto r4 = residues_and_corners(c, 4);
  CHECK(r4.addable.size() == 1);
  // s_1 . (7,3,1) = (6,2,1): two removable corners of residue 1
  auto r1 = residues_and_corners(c, 1);
  CHECK(r1.removable.size() == 2);
  auto r0 = residues_and_corners(c, 0);
  CHECK(r0.addable.empty());
  CHECK(r0.removable.empty());
  Core empty(Partition{}, 6);
  auto e0 = residues_and_corners(empty, 0);
  REQUIRE(e0.addable.size() == 1);
  CHECK(e0.addable[0] == kst::shapes::Cell{1, 1});
  CHECK(e0.removable.empty());
  // corners partition across residues
  Core c2(Partition{4, 1, 1}, 4);
  size_t add_total = 0, rem_total = 0;
  for (int i = 0; i < 4; ++i) {
    auto rr = residues_and_corners(c2, i);
    add_total += rr.addable.size();
    rem_total += rr.removable.size();
  }
  CHECK(add_total == addable_corners(c2.shape()).size());
  CHECK(rem_total == removable_corners(c2.shape()).size());
}

TEST_CASE("enumeration order") {
  auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});
}

TEST_CASE("json encodings") {
  CHECK(json(Partition{3, 1}) == "[3, 1]");
  CHECK(json(Core(Partition{3, 1, 1}, 3)) == "{\"shape\":[3, 1, 1],\"modulus\":3}");
}
