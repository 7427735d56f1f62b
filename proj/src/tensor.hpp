#ifndef KZRING_TENSOR_HPP
#define KZRING_TENSOR_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "partition.hpp"
#include "symchar.hpp"

namespace kzring {

// Element of R_infinity: finite integer combination of irreducibles V_nu,
// partitions of mixed sizes allowed. Zero coefficients are never stored.
class RInfinityElement {
public:
  RInfinityElement() = default;

  void add(const Partition& p, long long c);
  long long coeff(const Partition& p) const;
  const std::map<Partition, long long>& terms() const { return terms_; }
  bool operator==(const RInfinityElement&) const = default;

private:
  std::map<Partition, long long> terms_;
};

// Littlewood-Richardson coefficient L_{alpha,beta,nu}: the number of lattice
// skew tableaux of shape nu/alpha and content beta. Returns 0 unless
// |nu| = |alpha| + |beta| and alpha fits inside nu.
long long lr_coefficient(const Partition& alpha, const Partition& beta,
                         const Partition& nu);

// Kronecker coefficient C_{lambda,mu,nu} = <chi_lambda chi_mu, chi_nu> on S_n.
long long kron_coefficient(const Partition& lambda, const Partition& mu,
                           const Partition& nu, int cap = 14);

// Full decomposition of V_lambda (x) V_mu into irreducibles of S_n.
// Total dimension is conserved (checked).
RInfinityElement tensor_decompose(const Partition& lambda, const Partition& mu,
                                  int cap = 14);

// Dvir's boundary theorem: when d(lambda)+d(mu) = d(nu) the Kronecker
// coefficient equals L on the theta's; when d(nu) exceeds the sum it is 0.
struct DvirResult {
  bool applies = false;
  std::optional<long long> value;
};
DvirResult dvir_boundary(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

// Exhaustive check of both Dvir regimes over all triples of partitions of n.
struct DvirReport {
  int n = 0;
  long long boundary_triples = 0;
  long long vanishing_triples = 0;
  long long mismatches = 0;
  std::vector<std::array<Partition, 3>> failures;  // first few offenders
};
DvirReport dvir_check(int n, int threads = 1);

} // namespace kzring

#endif
