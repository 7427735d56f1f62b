#ifndef KZRING_SYMCHAR_HPP
#define KZRING_SYMCHAR_HPP

#include <map>
#include <vector>

#include "numeric.hpp"
#include "partition.hpp"

namespace kzring {

// Integer class function on S_n. Values are indexed by cycle type in the
// canonical partition enumeration order (reverse-lex, identity class [1^n]
// last). Characters of S_n are integer-valued, so this covers everything the
// symmetric-group layer needs.
struct SymClassFunction {
  int n = 0;
  std::vector<long long> values;

  SymClassFunction() = default;
  SymClassFunction(int n_, std::vector<long long> v) : n(n_), values(std::move(v)) {}

  SymClassFunction& operator*=(const SymClassFunction& o);
  SymClassFunction& operator+=(const SymClassFunction& o);
  SymClassFunction& operator-=(const SymClassFunction& o);
  SymClassFunction& scale(long long c);
  friend SymClassFunction operator*(SymClassFunction a, const SymClassFunction& b) { return a *= b; }

  bool operator==(const SymClassFunction&) const = default;
};

// chi_lambda evaluated at the class of cycle type mu, by the recursive
// border-strip rule (memoized). Requires |lambda| = |mu|.
long long mn_value(const Partition& lambda, const Partition& mu);

// Centralizer order z_mu = prod_i i^{m_i} m_i!; class size is n!/z_mu.
long long centralizer_order(const Partition& mu);
long long factorial_ll(int n);

// Cycle type of sigma^k for sigma of cycle type mu.
Partition power_cycle_type(const Partition& mu, long long k);

// Full character table of S_n. Rows and classes both follow the canonical
// partition order; built once per n and cached.
class SymTable {
public:
  static const SymTable& of(int n, int cap = 14);

  int n() const { return n_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<Partition>& classes() const { return classes_; }
  const std::vector<Partition>& irreducibles() const { return classes_; }
  long long class_size(int c) const { return class_sizes_[c]; }
  long long group_order() const { return order_; }

  int index_of(const Partition& p) const;              // position in canonical order
  int power_class(int c, long long k) const;
  long long value(int lambda_idx, int class_idx) const { return rows_[lambda_idx][class_idx]; }
  const SymClassFunction& row(int lambda_idx) const { return row_fns_[lambda_idx]; }
  long long dimension(int lambda_idx) const;            // chi(identity)
  int identity_class() const { return num_classes() - 1; }

  // Exact <f, g> = (1/n!) sum |C| f(C) g(C); S_n characters are real.
  Rational inner_product(const SymClassFunction& f, const SymClassFunction& g) const;
  // Same, asserting the result is an integer (genuine-character case).
  long long inner_product_int(const SymClassFunction& f, const SymClassFunction& g) const;

  // Coefficients of f in the irreducible basis (throws if not integral).
  std::vector<long long> decompose(const SymClassFunction& f) const;

private:
  explicit SymTable(int n);

  int n_;
  long long order_;
  std::vector<Partition> classes_;
  std::vector<long long> class_sizes_;
  std::vector<std::vector<long long>> rows_;
  std::vector<SymClassFunction> row_fns_;
  std::map<std::vector<int>, int> index_;
};

// Character of Lambda^k V, V = V_{[n-1,1]} the reflection representation;
// equals the row of the hook [n-k,1^k]. Requires 0 <= k <= n-1.
SymClassFunction exterior_power_character(int n, int k);

// Independent route: k-th exterior power of an arbitrary integer class
// function via the power-sum (Newton) expansion over cycle types of S_k.
SymClassFunction exterior_power_by_power_sums(const SymClassFunction& chi, int k);

// chi_V itself: fixed points minus one.
SymClassFunction reflection_character(int n);
SymClassFunction trivial_character(int n);

} // namespace kzring

#endif
