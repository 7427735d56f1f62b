#include "monomial_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kzring {

ClassStructure::ClassStructure(const EnumeratedGroup& g) {
  const int n = g.order();
  class_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[x] != -1) continue;
    int c = (int)reps_.size();
    reps_.push_back(x);
    std::vector<int> orbit{x};
    class_of_[x] = c;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int s : g.generators()) {
        int y = g.multiply(g.multiply(g.inverse(s), orbit[head]), s);
        if (class_of_[y] == -1) {
          class_of_[y] = c;
          orbit.push_back(y);
        }
      }
    }
    sizes_.push_back((long long)orbit.size());
    members_.push_back(std::move(orbit));
  }

  long long total = 0;
  for (long long s : sizes_) total += s;
  if (total != n) throw std::logic_error("class equation failed");

  for (int c = 0; c < num_classes(); ++c) {
    int x = reps_[c];
    long long ord = 1;
    int y = x;
    while (y != 0) {
      y = g.multiply(y, x);
      ++ord;
    }
    orders_.push_back(ord);
    inverse_class_.push_back(class_of_[g.inverse(x)]);
    exponent_ = std::lcm(exponent_, ord);
  }
}

int ClassStructure::power_class(const EnumeratedGroup& g, int c, long long m) const {
  long long ord = orders_[c];
  long long k = ((m % ord) + ord) % ord;
  int acc = 0;
  int x = reps_[c];
  for (long long i = 0; i < k; ++i) acc = g.multiply(acc, x);
  return class_of_[acc];
}

std::vector<std::vector<long long>> ClassStructure::class_matrix(
    const EnumeratedGroup& g, int i) const {
  const int k = num_classes();
  std::vector<std::vector<long long>> m(k, std::vector<long long>(k, 0));
  for (int l = 0; l < k; ++l) {
    int z = reps_[l];
    for (int x : members_[i]) {
      int j = class_of_[g.multiply(g.inverse(x), z)];
      ++m[l][j];
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

std::string MonomialGroup::key_of(const std::vector<std::uint8_t>& p,
                                  const std::vector<std::uint16_t>& x) {
  std::string k;
  k.reserve(p.size() * 3);
  for (std::uint8_t v : p) k.push_back((char)v);
  for (std::uint16_t v : x) {
    k.push_back((char)(v & 0xff));
    k.push_back((char)(v >> 8));
  }
  return k;
}

MonomialGroup::MonomialGroup(int d, int e, int r, long long cap)
    : d_(d), e_(e), r_(r), de_((long)d * e) {
  if (d < 1 || e < 1 || r < 1) throw std::invalid_argument("bad G(de,e,r) parameters");
  long long expected = 1;
  for (int i = 0; i < r; ++i) expected *= de_;
  for (int i = 2; i <= r; ++i) expected *= i;
  expected /= e;
  if (expected > cap) throw std::invalid_argument("group order cap exceeded");

  // identity first: identity permutation with zero exponents is emitted by
  // the first loop iteration
  std::vector<std::uint8_t> p(r);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::uint16_t> x(r, 0);
  do {
    // enumerate exponent vectors with sum = 0 mod e, last coordinate solved
    std::vector<std::uint16_t> free(r - 1, 0);
    for (;;) {
      long sum = 0;
      for (int i = 0; i + 1 < r; ++i) {
        x[i] = free[i];
        sum += free[i];
      }
      for (long last = ((-sum) % e + e) % e; last < de_; last += e) {
        x[r - 1] = (std::uint16_t)last;
        perm_.push_back(p);
        exps_.push_back(x);
      }
      int pos = r - 2;
      while (pos >= 0 && free[pos] + 1 == de_) free[pos--] = 0;
      if (pos < 0) break;
      ++free[pos];
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if ((long long)perm_.size() != expected)
    throw std::logic_error("monomial group enumeration miscounted");

  for (int i = 0; i < order(); ++i) index_.emplace(key_of(perm_[i], exps_[i]), i);

  // generators: adjacent transpositions, one diagonal of order d, one
  // balanced diagonal of order de
  std::vector<std::uint8_t> idp(r);
  std::iota(idp.begin(), idp.end(), 0);
  for (int i = 0; i + 1 < r; ++i) {
    std::vector<std::uint8_t> q = idp;
    std::swap(q[i], q[i + 1]);
    generators_.push_back(lookup(q, std::vector<std::uint16_t>(r, 0)));
  }
  if (d > 1) {
    std::vector<std::uint16_t> u(r, 0);
    u[0] = (std::uint16_t)e;
    generators_.push_back(lookup(idp, u));
  }
  if (de_ > 1 && r >= 2) {
    std::vector<std::uint16_t> v(r, 0);
    v[0] = 1;
    v[1] = (std::uint16_t)(de_ - 1);
    generators_.push_back(lookup(idp, v));
  }
}

int MonomialGroup::lookup(const std::vector<std::uint8_t>& p,
                          const std::vector<std::uint16_t>& x) const {
  auto it = index_.find(key_of(p, x));
  if (it == index_.end()) throw std::logic_error("element not in group");
  return it->second;
}

int MonomialGroup::multiply(int a, int b) const {
  // (this later): product h*g where h = element a, g = element b acting first
  const auto& pa = perm_[a];
  const auto& xa = exps_[a];
  const auto& pb = perm_[b];
  const auto& xb = exps_[b];
  std::vector<std::uint8_t> p(r_);
  std::vector<std::uint16_t> x(r_);
  for (int j = 0; j < r_; ++j) {
    p[j] = pa[pb[j]];
    x[j] = (std::uint16_t)((xb[j] + xa[pb[j]]) % de_);
  }
  return lookup(p, x);
}

int MonomialGroup::inverse(int a) const {
  const auto& pa = perm_[a];
  const auto& xa = exps_[a];
  std::vector<std::uint8_t> p(r_);
  std::vector<std::uint16_t> x(r_);
  for (int j = 0; j < r_; ++j) p[pa[j]] = (std::uint8_t)j;
  for (int i = 0; i < r_; ++i) x[i] = (std::uint16_t)((de_ - xa[p[i]]) % de_);
  return lookup(p, x);
}

std::string MonomialGroup::describe(int a) const {
  std::string s = "perm[";
  for (int j = 0; j < r_; ++j) {
    if (j) s += ',';
    s += std::to_string((int)perm_[a][j]);
  }
  s += "] exps[";
  for (int j = 0; j < r_; ++j) {
    if (j) s += ',';
    s += std::to_string((int)exps_[a][j]);
  }
  return s + "]";
}

std::string MonomialGroup::name() const {
  return "G(" + std::to_string(de_) + "," + std::to_string(e_) + "," +
         std::to_string(r_) + ")";
}

Cyclotomic MonomialGroup::trace(int a) const {
  Cyclotomic t;
  for (int j = 0; j < r_; ++j)
    if (perm_[a][j] == j) t += Cyclotomic::root_of_unity(de_, exps_[a][j]);
  return t;
}

// ---------------------------------------------------------------------------

std::vector<Cyclotomic> CyclotomicMatrixGroup::mat_mul(
    const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) const {
  std::vector<Cyclotomic> c(dim_ * dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Cyclotomic& aik = a[i * dim_ + k];
      if (aik.is_zero()) continue;
      for (int j = 0; j < dim_; ++j)
        c[i * dim_ + j] += aik * b[k * dim_ + j];
    }
  return c;
}

std::string CyclotomicMatrixGroup::key_of(const std::vector<Cyclotomic>& m) const {
  std::string k;
  for (const auto& v : m) {
    k += v.canonical_key();
    k += '#';
  }
  return k;
}

CyclotomicMatrixGroup::CyclotomicMatrixGroup(
    std::string name, int dim,
    const std::vector<std::vector<Cyclotomic>>& generator_matrices, long long cap)
    : name_(std::move(name)), dim_(dim) {
  for (const auto& g : generator_matrices) {
    if ((int)g.size() != dim * dim)
      throw std::invalid_argument("generator matrix has wrong shape");
    for (const auto& v : g) conductor_ = std::lcm(conductor_, v.conductor());
  }

  std::vector<Cyclotomic> id(dim * dim);
  for (int i = 0; i < dim; ++i) id[i * dim + i] = Cyclotomic(1);
  elements_.push_back(id);
  index_.emplace(key_of(id), 0);

  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& g : generator_matrices) {
      auto prod = mat_mul(elements_[head], g);
      std::string k = key_of(prod);
      if (!index_.count(k)) {
        if ((long long)elements_.size() >= cap)
          throw std::invalid_argument("matrix group closure cap exceeded");
        index_.emplace(std::move(k), (int)elements_.size());
        elements_.push_back(std::move(prod));
      }
    }
  }

  for (const auto& g : generator_matrices)
    generators_.push_back(index_.at(key_of(g)));
}

int CyclotomicMatrixGroup::multiply(int a, int b) const {
  return index_.at(key_of(mat_mul(elements_[a], elements_[b])));
}

int CyclotomicMatrixGroup::inverse(int a) const {
  // finite order: the inverse is the last power before returning to identity
  int prev = 0, cur = a;
  while (cur != 0) {
    prev = cur;
    cur = multiply(cur, a);
  }
  return prev;
}

std::string CyclotomicMatrixGroup::describe(int a) const {
  std::string s = "[";
  for (int i = 0; i < dim_; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < dim_; ++j) {
      if (j) s += ", ";
      s += elements_[a][i * dim_ + j].str();
    }
  }
  return s + "]";
}

Cyclotomic CyclotomicMatrixGroup::trace(int a) const {
  Cyclotomic t;
  for (int i = 0; i < dim_; ++i) t += elements_[a][i * dim_ + i];
  return t;
}

} // namespace kzring
