#ifndef KZRING_CYCLOTOMIC_HPP
#define KZRING_CYCLOTOMIC_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace kzring {

// Exact element of Q(zeta_N). Internally a sparse rational combination of
// roots of unity zeta_N^e with 0 <= e < N; the canonical form (coordinates on
// the power basis 1, zeta, ..., zeta^{phi(N)-1}, obtained by reduction modulo
// the N-th cyclotomic polynomial) is computed on demand and is what equality,
// hashing and serialization use. Keeping the raw sparse form makes products
// of character values cheap even at large conductors.
class Cyclotomic {
public:
  Cyclotomic() : N_(1) {}
  Cyclotomic(long long v);
  Cyclotomic(const Rational& r);
  static Cyclotomic root_of_unity(long N, long e);
  static Cyclotomic from_terms(long N, std::map<long, Rational> terms);

  long conductor() const { return N_; }
  const std::map<long, Rational>& raw_terms() const { return terms_; }

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& scale(const Rational& r);
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

  Cyclotomic conj() const;                 // zeta -> zeta^{-1}
  Cyclotomic embedded(long M) const;       // into Q(zeta_M), N | M

  // Canonical coordinates at this conductor (keys < phi(N), no zeros).
  std::map<long, Rational> canonical() const;

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;         // throws if not rational
  bool is_integer() const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Stable text key of the canonical form, conductor included; usable for
  // hashing group elements.
  std::string canonical_key() const;

  std::string str() const;                 // human-readable, z<N>^k notation
  std::complex<double> to_complex() const;

private:
  void prune();
  long N_;
  std::map<long, Rational> terms_;
};

long euler_phi(long n);

// Coefficients of the N-th cyclotomic polynomial (ascending degree); cached.
const std::vector<Integer>& cyclotomic_polynomial(long n);

} // namespace kzring

#endif
