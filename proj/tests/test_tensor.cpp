#include <doctest.h>

#include "oracles.hpp"
#include "tensor.hpp"

using namespace kzring;

TEST_CASE("littlewood-richardson spot values") {
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
  // L_{alpha0,[1^r],alpha} = 1 with alpha = [3,1], alpha0 = [2], r = 2
  CHECK(lr_coefficient(Partition({2}), Partition({1, 1}), Partition({3, 1})) == 1);
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  // size or containment failures give zero
  CHECK(lr_coefficient(Partition({2}), Partition({1}), Partition({2})) == 0);
  CHECK(lr_coefficient(Partition({3}), Partition({1}), Partition({2, 2})) == 0);
  CHECK(lr_coefficient(Partition(), Partition(), Partition()) == 1);
}

TEST_CASE("littlewood-richardson agrees with the character route") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4 - (a > 2 ? 1 : 0) && a + b <= 7; ++b)
      for (const Partition& alpha : enumerate_partitions(a))
        for (const Partition& beta : enumerate_partitions(b))
          for (const Partition& nu : enumerate_partitions(a + b))
            CHECK(lr_coefficient(alpha, beta, nu) ==
                  oracles::lr_by_characters(alpha, beta, nu));
}

TEST_CASE("littlewood-richardson is symmetric") {
  for (int total = 2; total <= 8; ++total)
    for (int a = 0; a <= total; ++a)
      for (const Partition& alpha : enumerate_partitions(a))
        for (const Partition& beta : enumerate_partitions(total - a))
          for (const Partition& nu : enumerate_partitions(total))
            CHECK(lr_coefficient(alpha, beta, nu) == lr_coefficient(beta, alpha, nu));
}

TEST_CASE("pieri column rule: L_{alpha0,[1^r],alpha} = 1") {
  for (int n = 1; n <= 9; ++n)
    for (const Partition& alpha : enumerate_partitions(n)) {
      Partition alpha0 = decrement(alpha);
      int r = alpha.size() - alpha0.size();
      if (r == 0) continue;
      std::vector<int> ones(r, 1);
      CHECK(lr_coefficient(alpha0, Partition(ones), alpha) == 1);
    }
}

TEST_CASE("kronecker spot values") {
  CHECK(kron_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({1, 1, 1})) == 1);
  CHECK(kron_coefficient(Partition({3, 1}), Partition({3, 1}), Partition({2, 2})) == 1);
  // trivial representation is the unit
  for (const Partition& mu : enumerate_partitions(5))
    for (const Partition& nu : enumerate_partitions(5))
      CHECK(kron_coefficient(Partition({5}), mu, nu) == (mu == nu ? 1 : 0));
  CHECK_THROWS(kron_coefficient(Partition({2}), Partition({1}), Partition({2})));
}

TEST_CASE("tensor decompositions") {
  // V (x) V on S_4
  RInfinityElement vv = tensor_decompose(Partition({3, 1}), Partition({3, 1}));
  CHECK(vv.terms().size() == 4);
  CHECK(vv.coeff(Partition({4})) == 1);
  CHECK(vv.coeff(Partition({3, 1})) == 1);
  CHECK(vv.coeff(Partition({2, 2})) == 1);
  CHECK(vv.coeff(Partition({2, 1, 1})) == 1);

  RInfinityElement unit = tensor_decompose(Partition({6}), Partition({6}));
  CHECK(unit.terms().size() == 1);
  CHECK(unit.coeff(Partition({6})) == 1);

  RInfinityElement signsq = tensor_decompose(Partition({1, 1}), Partition({1, 1}));
  CHECK(signsq.terms().size() == 1);
  CHECK(signsq.coeff(Partition({2})) == 1);
}

TEST_CASE("kronecker is fully symmetric for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    auto ps = enumerate_partitions(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (const auto& c : ps) {
          long long v = kron_coefficient(a, b, c);
          CHECK(v == kron_coefficient(b, a, c));
          CHECK(v == kron_coefficient(a, c, b));
          CHECK(v == kron_coefficient(c, b, a));
        }
  }
}

TEST_CASE("dvir boundary operation") {
  // lambda = mu = [n-1,1], nu = [n-2,2]
  for (int n = 4; n <= 9; ++n) {
    DvirResult r = dvir_boundary(Partition({n - 1, 1}), Partition({n - 1, 1}),
                                 Partition({n - 2, 2}));
    CHECK(r.applies);
    CHECK(r.value == 1);
  }
  // vanishing regime
  DvirResult v = dvir_boundary(Partition({5, 1}), Partition({5, 1}),
                               Partition({3, 1, 1, 1}));
  CHECK(v.applies);
  CHECK(v.value == 0);
  // depths 2,2,2: theorem does not apply
  DvirResult na = dvir_boundary(Partition({2, 2}), Partition({2, 2}), Partition({2, 2}));
  CHECK(!na.applies);
  CHECK(!na.value.has_value());
}

TEST_CASE("dvir check is clean for small n") {
  for (int n = 2; n <= 6; ++n) {
    DvirReport rep = dvir_check(n);
    CHECK(rep.mismatches == 0);
    CHECK(rep.boundary_triples > 0);
  }
}

TEST_CASE("filtration closure for n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (const Partition& a : enumerate_partitions(n))
      for (const Partition& b : enumerate_partitions(n)) {
        RInfinityElement prod = tensor_decompose(a, b);
        for (const auto& [nu, c] : prod.terms())
          CHECK(depth(nu) <= depth(a) + depth(b));
      }
}
