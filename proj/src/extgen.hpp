#ifndef KZRING_EXTGEN_HPP
#define KZRING_EXTGEN_HPP

#include <map>
#include <string>
#include <vector>

#include "partition.hpp"
#include "symchar.hpp"

namespace kzring {

// Monomial in the generators E_k = Lambda^k V, 1 <= k <= n-1, as an exponent
// vector (index k-1 holds the exponent of E_k). E_0 is the unit and is only a
// notational device of the text form.
using ExtMonomial = std::vector<int>;

int ext_monomial_degree(const ExtMonomial& m);

// Integer polynomial in E_0..E_{n-1}, kept fully expanded so that equality is
// term-by-term.
class GeneratorPolynomial {
public:
  explicit GeneratorPolynomial(int n) : n_(n) {}

  static GeneratorPolynomial unit(int n);               // E_0
  static GeneratorPolynomial variable(int n, int k);    // E_k

  int n() const { return n_; }
  bool empty() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  int max_degree() const;

  void add_term(const ExtMonomial& m, long long c);
  GeneratorPolynomial& operator+=(const GeneratorPolynomial& o);
  GeneratorPolynomial& operator-=(const GeneratorPolynomial& o);
  GeneratorPolynomial& scale(long long c);
  GeneratorPolynomial& times_variable(int k);            // multiply by E_k

  const std::map<ExtMonomial, long long>& terms() const { return terms_; }
  bool operator==(const GeneratorPolynomial&) const = default;

  // "E1^2 - E2 - E1 - E0" (degree-major ordering).
  std::string str() const;

  // Substitute chi_{[n-k,1^k]} for E_k; pointwise integer arithmetic.
  SymClassFunction evaluate() const;

private:
  int n_;
  std::map<ExtMonomial, long long> terms_;
};

// Express V_lambda as a polynomial in the E_k, following the double induction
// on (d(lambda), d(lambda) - alpha'_1): hooks are the base case, the step
// peels V_mu (x) Lambda^r V. The result evaluates to chi_lambda exactly.
// If audit_log is non-null, one line per induction step is appended; memoized
// subproblems are not re-logged.
GeneratorPolynomial express(const Partition& lambda, int cap = 12,
                            std::vector<std::string>* audit_log = nullptr);

struct GenerationReport {
  int n = 0;
  bool ok = false;
  int max_degree = 0;
  std::size_t max_terms = 0;
  std::vector<std::pair<Partition, std::string>> entries;  // lambda -> polynomial text
  std::vector<Partition> mismatches;                       // must stay empty
};

// Run express on every lambda of n and compare against the Murnaghan-
// Nakayama characters.
GenerationReport verify_generation(int n, int cap = 12);

} // namespace kzring

#endif
