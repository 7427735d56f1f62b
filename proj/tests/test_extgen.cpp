#include <doctest.h>

#include "extgen.hpp"
#include "symchar.hpp"

using namespace kzring;

TEST_CASE("hooks map to single generators") {
  CHECK(express(Partition({6})).str() == "E0");
  CHECK(express(Partition({5, 1})).str() == "E1");
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k <= n - 1; ++k) {
      GeneratorPolynomial p = express(hook_partition(n, k));
      CHECK(p.num_terms() == 1);
      CHECK(p == GeneratorPolynomial::variable(n, k));
    }
}

TEST_CASE("the [2,2] example") {
  GeneratorPolynomial p = express(Partition({2, 2}));
  CHECK(p.str() == "E1^2 - E2 - E1 - E0");
  const SymTable& t = SymTable::of(4);
  SymClassFunction chi = p.evaluate();
  CHECK(chi == t.row(t.index_of(Partition({2, 2}))));
  // classes [1^4],[2,1,1],[2,2],[3,1],[4] carry values 2,0,2,-1,0
  CHECK(chi.values[t.index_of(Partition({1, 1, 1, 1}))] == 2);
  CHECK(chi.values[t.index_of(Partition({2, 1, 1}))] == 0);
  CHECK(chi.values[t.index_of(Partition({2, 2}))] == 2);
  CHECK(chi.values[t.index_of(Partition({3, 1}))] == -1);
  CHECK(chi.values[t.index_of(Partition({4}))] == 0);
}

TEST_CASE("polynomial evaluation basics") {
  CHECK(GeneratorPolynomial::unit(4).evaluate() == trivial_character(4));
  GeneratorPolynomial e1sq = GeneratorPolynomial::variable(4, 1);
  e1sq.times_variable(1);
  SymClassFunction v = e1sq.evaluate();
  const SymTable& t = SymTable::of(4);
  CHECK(v.values[t.identity_class()] == 9);
}

TEST_CASE("expressions evaluate exactly for all partitions up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    const SymTable& t = SymTable::of(n);
    for (const Partition& lambda : t.irreducibles()) {
      GeneratorPolynomial p = express(lambda);
      CHECK(p.evaluate() == t.row(t.index_of(lambda)));
    }
  }
}

TEST_CASE("verify_generation") {
  GenerationReport r1 = verify_generation(1);
  CHECK(r1.ok);
  GenerationReport r4 = verify_generation(4);
  CHECK(r4.ok);
  CHECK(r4.entries.size() == 5);
  CHECK_THROWS(express(Partition({13}), 12));
}

TEST_CASE("audit log records the double induction") {
  std::vector<std::string> log;
  express(Partition({5, 3, 1}), 12, &log);
  CHECK(!log.empty());
  bool has_step = false, has_base = false;
  for (const auto& line : log) {
    if (line.rfind("step", 0) == 0) has_step = true;
    if (line.rfind("base", 0) == 0) has_base = true;
  }
  CHECK(has_step);
  CHECK(has_base);
}
