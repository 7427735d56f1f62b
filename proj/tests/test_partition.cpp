#include <doctest.h>

#include <random>

#include "partition.hpp"

using namespace kzring;

namespace {

Partition random_partition(std::mt19937_64& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  int n = size_dist(rng);
  std::vector<int> parts;
  int prev = n;
  while (n > 0) {
    std::uniform_int_distribution<int> part_dist(1, std::min(prev, n));
    int p = part_dist(rng);
    parts.push_back(p);
    prev = p;
    n -= p;
  }
  return Partition(std::move(parts));
}

} // namespace

TEST_CASE("theta removes the first row") {
  CHECK(theta(Partition({3, 2, 1})) == Partition({2, 1}));
  CHECK(theta(Partition({7})) == Partition());
  CHECK(theta(Partition()) == Partition());
}

TEST_CASE("depth is size minus first part") {
  CHECK(depth(Partition({3, 2, 1})) == 3);
  CHECK(depth(Partition({9})) == 0);
  CHECK(depth(Partition({4, 1, 1})) == 2);
  CHECK(depth(Partition()) == 0);
}

TEST_CASE("decrement drops one box per row") {
  CHECK(decrement(Partition({3, 1})) == Partition({2}));
  CHECK(decrement(Partition({1, 1, 1})) == Partition());
  CHECK(decrement(Partition({2, 2})) == Partition({1, 1}));
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
  CHECK(conjugate(Partition()) == Partition());
}

TEST_CASE("enumeration is reverse-lexicographic and complete") {
  auto p4 = enumerate_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));

  auto p0 = enumerate_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  CHECK(enumerate_partitions(10).size() == 42);
  CHECK_THROWS(enumerate_partitions(41));
}

TEST_CASE("enumeration count matches the pentagonal recurrence") {
  for (int n = 0; n <= 16; ++n)
    CHECK(enumerate_partitions(n).size() == partition_count(n));
  CHECK(partition_count(10) == 42);
}

TEST_CASE("enumeration has no duplicates and correct sizes") {
  for (int n = 0; n <= 12; ++n) {
    auto ps = enumerate_partitions(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CHECK(ps[i].size() == n);
      if (i + 1 < ps.size()) CHECK(ps[i].parts() > ps[i + 1].parts());
    }
  }
}

TEST_CASE("partition properties on random samples") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 500; ++trial) {
    Partition p = random_partition(rng, 30);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(depth(p) == theta(p).size());
    // |decrement(p)| = |p| - p'_1, equality of sizes only when empty
    CHECK(decrement(p).size() == p.size() - conjugate(p).first());
    if (!p.empty()) CHECK(decrement(p).size() < p.size());
  }
}

TEST_CASE("text round trip") {
  CHECK(Partition({5, 3, 1}).str() == "[5,3,1]");
  CHECK(Partition().str() == "[]");
  CHECK(Partition::parse("[5,3,1]") == Partition({5, 3, 1}));
  CHECK(Partition::parse("[]") == Partition());
  CHECK(Partition::parse(" [2, 1] ") == Partition({2, 1}));
  CHECK_THROWS(Partition::parse("[1,2]"));
  CHECK_THROWS(Partition::parse("2,1"));
  CHECK_THROWS(Partition::parse("[0]"));
}

TEST_CASE("hook partitions") {
  CHECK(hook_partition(5, 0) == Partition({5}));
  CHECK(hook_partition(5, 2) == Partition({3, 1, 1}));
  CHECK(hook_partition(5, 4) == Partition({1, 1, 1, 1, 1}));
  CHECK_THROWS(hook_partition(5, 5));
}
