#ifndef KZRING_MONOMIAL_GROUP_HPP
#define KZRING_MONOMIAL_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cyclotomic.hpp"

namespace kzring {

// A finite group with all elements enumerated and indexed 0..order-1.
// Index 0 is the identity. Conjugacy data is derived generically from this
// interface.
class EnumeratedGroup {
public:
  virtual ~EnumeratedGroup() = default;
  virtual int order() const = 0;
  virtual int multiply(int a, int b) const = 0;
  virtual int inverse(int a) const = 0;
  virtual const std::vector<int>& generators() const = 0;
  virtual std::string describe(int a) const = 0;
  virtual std::string name() const = 0;
  // Trace of the defining matrix of element a (the reflection character for
  // the groups built here).
  virtual Cyclotomic trace(int a) const = 0;
  virtual long matrix_conductor() const = 0;
  virtual int rank() const = 0;
};

// Conjugacy classes (by orbit closure under conjugation by generators, in
// first-appearance order, identity class first), representative orders,
// power maps and class multiplication data.
class ClassStructure {
public:
  explicit ClassStructure(const EnumeratedGroup& g);

  int num_classes() const { return (int)reps_.size(); }
  int class_of(int element) const { return class_of_[element]; }
  int representative(int c) const { return reps_[c]; }
  long long class_size(int c) const { return sizes_[c]; }
  long long element_order(int c) const { return orders_[c]; }
  int inverse_class(int c) const { return inverse_class_[c]; }
  long long exponent() const { return exponent_; }
  const std::vector<int>& members(int c) const { return members_[c]; }

  // Class of rep(c)^m.
  int power_class(const EnumeratedGroup& g, int c, long long m) const;

  // (M_i)[l][j] = #{ x in C_i : x^{-1} z_l in C_j }, the coefficient of K_l
  // in K_i K_j.
  std::vector<std::vector<long long>> class_matrix(const EnumeratedGroup& g, int i) const;

private:
  std::vector<int> class_of_;
  std::vector<int> reps_;
  std::vector<long long> sizes_;
  std::vector<long long> orders_;
  std::vector<int> inverse_class_;
  std::vector<std::vector<int>> members_;
  long long exponent_ = 1;
};

// G(de,e,r): r x r monomial matrices, nonzero entries in mu_de with product
// in mu_d. Element j maps basis vector e_j to zeta^{c_j} e_{perm_j}.
class MonomialGroup : public EnumeratedGroup {
public:
  // Throws if the group order exceeds the cap.
  MonomialGroup(int d, int e, int r, long long cap = 200000);

  int d() const { return d_; }
  int e() const { return e_; }
  int r() const { return r_; }
  long de() const { return de_; }

  int order() const override { return (int)perm_.size(); }
  int multiply(int a, int b) const override;
  int inverse(int a) const override;
  const std::vector<int>& generators() const override { return generators_; }
  std::string describe(int a) const override;
  std::string name() const override;
  Cyclotomic trace(int a) const override;
  long matrix_conductor() const override { return de_; }
  int rank() const override { return r_; }

  const std::vector<std::uint8_t>& perm(int a) const { return perm_[a]; }
  const std::vector<std::uint16_t>& exps(int a) const { return exps_[a]; }

private:
  int lookup(const std::vector<std::uint8_t>& p, const std::vector<std::uint16_t>& x) const;
  static std::string key_of(const std::vector<std::uint8_t>& p,
                            const std::vector<std::uint16_t>& x);

  int d_, e_, r_;
  long de_;
  std::vector<std::vector<std::uint8_t>> perm_;
  std::vector<std::vector<std::uint16_t>> exps_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> generators_;
};

// Closure of a finite set of exact matrices over Q(zeta_N); used for
// imported reflection group generators. Throws if the closure exceeds cap.
class CyclotomicMatrixGroup : public EnumeratedGroup {
public:
  CyclotomicMatrixGroup(std::string name, int dim,
                        const std::vector<std::vector<Cyclotomic>>& generator_matrices,
                        long long cap = 52000);

  int order() const override { return (int)elements_.size(); }
  int multiply(int a, int b) const override;
  int inverse(int a) const override;
  const std::vector<int>& generators() const override { return generators_; }
  std::string describe(int a) const override;
  std::string name() const override { return name_; }
  Cyclotomic trace(int a) const override;
  long matrix_conductor() const override { return conductor_; }
  int rank() const override { return dim_; }

  const std::vector<Cyclotomic>& matrix(int a) const { return elements_[a]; }

private:
  std::vector<Cyclotomic> mat_mul(const std::vector<Cyclotomic>& a,
                                  const std::vector<Cyclotomic>& b) const;
  std::string key_of(const std::vector<Cyclotomic>& m) const;

  std::string name_;
  int dim_;
  long conductor_ = 1;
  std::vector<std::vector<Cyclotomic>> elements_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> generators_;
};

} // namespace kzring

#endif
