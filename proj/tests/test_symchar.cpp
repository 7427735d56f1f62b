#include <doctest.h>

#include "oracles.hpp"
#include "symchar.hpp"

using namespace kzring;

TEST_CASE("murnaghan-nakayama spot values") {
  // trivial representation
  for (const Partition& mu : enumerate_partitions(6))
    CHECK(mn_value(Partition({6}), mu) == 1);
  // dimension of [2,1] equals the hook-length count
  CHECK(mn_value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(mn_value(Partition({2, 1}), Partition({1, 1, 1})) ==
        oracles::hook_length_dimension(Partition({2, 1})));
  // [3,2] at a transposition: eigenvalues 1,1,1,-1,-1
  CHECK(mn_value(Partition({3, 2}), Partition({2, 1, 1, 1})) == 1);
  CHECK_THROWS(mn_value(Partition({2, 1}), Partition({2, 2})));
}

TEST_CASE("dimensions match the hook length formula up to n = 10") {
  for (int n = 1; n <= 10; ++n) {
    const SymTable& t = SymTable::of(n);
    for (int l = 0; l < t.num_classes(); ++l)
      CHECK(t.dimension(l) == oracles::hook_length_dimension(t.irreducibles()[l]));
  }
}

TEST_CASE("table shape and class data") {
  const SymTable& t3 = SymTable::of(3);
  CHECK(t3.num_classes() == 3);
  std::multiset<long long> dims;
  for (int l = 0; l < 3; ++l) dims.insert(t3.dimension(l));
  CHECK(dims == std::multiset<long long>({1, 1, 2}));

  const SymTable& t1 = SymTable::of(1);
  CHECK(t1.num_classes() == 1);
  CHECK(t1.dimension(0) == 1);

  // dim of chi_{[3,2]} on S_5 is 5
  const SymTable& t5 = SymTable::of(5);
  CHECK(t5.dimension(t5.index_of(Partition({3, 2}))) == 5);

  // class equation
  for (int n = 1; n <= 9; ++n) {
    const SymTable& t = SymTable::of(n);
    long long total = 0;
    for (int c = 0; c < t.num_classes(); ++c) total += t.class_size(c);
    CHECK(total == t.group_order());
  }

  CHECK_THROWS(SymTable::of(15));
}

TEST_CASE("row orthogonality is exact for n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const SymTable& t = SymTable::of(n);
    for (int a = 0; a < t.num_classes(); ++a)
      for (int b = a; b < t.num_classes(); ++b)
        CHECK(t.inner_product_int(t.row(a), t.row(b)) == (a == b ? 1 : 0));
  }
}

TEST_CASE("table agrees with the permutation-module construction") {
  for (int n = 1; n <= 6; ++n) {
    const SymTable& t = SymTable::of(n);
    auto rows = oracles::table_by_young_modules(n);
    for (int l = 0; l < t.num_classes(); ++l)
      CHECK(rows[l] == t.row(l));
  }
}

TEST_CASE("reflection character counts fixed points minus one") {
  for (int n = 2; n <= 8; ++n) {
    const SymTable& t = SymTable::of(n);
    SymClassFunction v = reflection_character(n);
    CHECK(v == t.row(t.index_of(Partition({n - 1, 1}))));
    CHECK(v == exterior_power_character(n, 1));
  }
}

TEST_CASE("exterior powers equal hooks, both routes, n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    SymClassFunction v = reflection_character(n);
    for (int k = 0; k <= n - 1; ++k) {
      SymClassFunction hook_row = exterior_power_character(n, k);
      CHECK(hook_row == exterior_power_by_power_sums(v, k));
    }
  }
  CHECK(exterior_power_character(5, 0) == trivial_character(5));
  CHECK_THROWS(exterior_power_character(5, 5));
}

TEST_CASE("inner product examples") {
  const SymTable& t4 = SymTable::of(4);
  SymClassFunction v = reflection_character(4);
  SymClassFunction vv = v;
  vv *= v;
  CHECK(t4.inner_product_int(vv, t4.row(t4.index_of(Partition({2, 2})))) == 1);

  const SymTable& t6 = SymTable::of(6);
  CHECK(t6.inner_product_int(t6.row(t6.index_of(Partition({6}))),
                             t6.row(t6.index_of(Partition({5, 1})))) == 0);
}

TEST_CASE("depth characterization for n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    const SymTable& t = SymTable::of(n);
    SymClassFunction v = reflection_character(n);
    for (int l = 0; l < t.num_classes(); ++l) {
      SymClassFunction power = trivial_character(n);
      int r = 0;
      while (t.inner_product_int(power, t.row(l)) == 0) {
        power *= v;
        ++r;
        REQUIRE(r <= n);
      }
      CHECK(r == depth(t.irreducibles()[l]));
    }
  }
}

TEST_CASE("power maps") {
  const SymTable& t6 = SymTable::of(6);
  int c = t6.index_of(Partition({6}));
  CHECK(t6.power_class(c, 2) == t6.index_of(Partition({3, 3})));
  CHECK(t6.power_class(c, 3) == t6.index_of(Partition({2, 2, 2})));
  CHECK(t6.power_class(c, 6) == t6.identity_class());
  CHECK(t6.power_class(c, 7) == c);
}
