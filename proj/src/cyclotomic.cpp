#include "cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kzring {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Integer> poly_divide(const std::vector<Integer>& num,
                                 const std::vector<Integer>& den) {
  std::vector<Integer> rem = num;
  std::vector<Integer> quot(num.size() - den.size() + 1, 0);
  for (int i = (int)quot.size() - 1; i >= 0; --i) {
    Integer c = rem[i + den.size() - 1] / den.back();
    quot[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < den.size(); ++j)
        rem[i + j] -= c * den[j];
  }
  for (const Integer& r : rem)
    if (r != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return quot;
}

struct ConductorData {
  long phi;
  // reduction[e - phi] = integer coordinates of x^e on the power basis,
  // for phi <= e < N.
  std::vector<std::vector<Integer>> reduction;
};

std::mutex registry_mutex;
std::map<long, std::vector<Integer>> phi_poly_registry;
std::map<long, ConductorData> conductor_registry;

const std::vector<Integer>& cyclotomic_polynomial_locked(long n) {
  auto it = phi_poly_registry.find(n);
  if (it != phi_poly_registry.end()) return it->second;

  // x^n - 1 divided by the product of all lower-level cyclotomic factors.
  std::vector<Integer> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  std::vector<Integer> den{1};
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& f = cyclotomic_polynomial_locked(d);
    std::vector<Integer> next(den.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < den.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        next[i + j] += den[i] * f[j];
    den = std::move(next);
  }
  auto result = poly_divide(num, den);
  return phi_poly_registry.emplace(n, std::move(result)).first->second;
}

const ConductorData& conductor_data(long n) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto it = conductor_registry.find(n);
  if (it != conductor_registry.end()) return it->second;

  ConductorData data;
  data.phi = euler_phi(n);
  const auto& poly = cyclotomic_polynomial_locked(n);
  // x^phi = -(poly minus leading term); higher powers by shifting once more.
  std::vector<Integer> row(data.phi);
  for (long j = 0; j < data.phi; ++j) row[j] = -poly[j];
  for (long e = data.phi; e < n; ++e) {
    data.reduction.push_back(row);
    if (e + 1 == n) break;
    std::vector<Integer> next(data.phi, 0);
    for (long j = 0; j + 1 < data.phi; ++j) next[j + 1] = row[j];
    const Integer& top = row[data.phi - 1];
    if (top != 0)
      for (long j = 0; j < data.phi; ++j) next[j] -= top * poly[j];
    row = std::move(next);
  }
  return conductor_registry.emplace(n, std::move(data)).first->second;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
  std::lock_guard<std::mutex> lock(registry_mutex);
  return cyclotomic_polynomial_locked(n);
}

Cyclotomic::Cyclotomic(long long v) : N_(1) {
  if (v != 0) terms_[0] = v;
}

Cyclotomic::Cyclotomic(const Rational& r) : N_(1) {
  if (r != 0) terms_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(long N, long e) {
  if (N < 1) throw std::invalid_argument("conductor must be positive");
  Cyclotomic z;
  z.N_ = N;
  e %= N;
  if (e < 0) e += N;
  z.terms_[e] = 1;
  return z;
}

Cyclotomic Cyclotomic::from_terms(long N, std::map<long, Rational> terms) {
  Cyclotomic z;
  z.N_ = N;
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    long ee = e % N;
    if (ee < 0) ee += N;
    z.terms_[ee] += c;
  }
  z.prune();
  return z;
}

void Cyclotomic::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

Cyclotomic Cyclotomic::embedded(long M) const {
  if (M % N_ != 0) throw std::invalid_argument("not a conductor multiple");
  Cyclotomic z;
  z.N_ = M;
  long f = M / N_;
  for (const auto& [e, c] : terms_) z.terms_[e * f] = c;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long L = std::lcm(N_, o.N_);
  if (L != N_) *this = embedded(L);
  Cyclotomic rhs = (o.N_ == L) ? o : o.embedded(L);
  for (const auto& [e, c] : rhs.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) terms_.emplace(e, c);
    else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& [e, c] : z.terms_) c = -c;
  return z;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long L = std::lcm(N_, o.N_);
  const Cyclotomic lhs = (N_ == L) ? *this : embedded(L);
  const Cyclotomic rhs = (o.N_ == L) ? o : o.embedded(L);
  Cyclotomic out;
  out.N_ = L;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      long e = e1 + e2;
      if (e >= L) e -= L;
      out.terms_[e] += c1 * c2;
    }
  out.prune();
  *this = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::scale(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= r;
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic z;
  z.N_ = N_;
  for (const auto& [e, c] : terms_) {
    long ee = (N_ - e) % N_;
    z.terms_[ee] += c;
  }
  z.prune();
  return z;
}

std::map<long, Rational> Cyclotomic::canonical() const {
  const ConductorData& data = conductor_data(N_);
  std::map<long, Rational> out;
  for (const auto& [e, c] : terms_) {
    if (e < data.phi) {
      out[e] += c;
    } else {
      const auto& row = data.reduction[e - data.phi];
      for (long j = 0; j < data.phi; ++j)
        if (row[j] != 0) out[j] += c * Rational(row[j]);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

bool Cyclotomic::is_zero() const {
  if (terms_.empty()) return true;
  return canonical().empty();
}

bool Cyclotomic::is_rational() const {
  auto c = canonical();
  return c.empty() || (c.size() == 1 && c.begin()->first == 0);
}

Rational Cyclotomic::rational_value() const {
  auto c = canonical();
  if (c.empty()) return 0;
  if (c.size() == 1 && c.begin()->first == 0) return c.begin()->second;
  throw std::runtime_error("cyclotomic value is not rational: " + str());
}

bool Cyclotomic::is_integer() const {
  return is_rational() && denominator(rational_value()) == 1;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long L = std::lcm(N_, o.N_);
  const Cyclotomic a = (N_ == L) ? *this : embedded(L);
  const Cyclotomic b = (o.N_ == L) ? o : o.embedded(L);
  return a.canonical() == b.canonical();
}

std::string Cyclotomic::canonical_key() const {
  auto c = canonical();
  std::string s = std::to_string(N_) + "|";
  for (const auto& [e, v] : c)
    s += std::to_string(e) + ":" + v.str() + ";";
  return s;
}

std::string Cyclotomic::str() const {
  auto c = canonical();
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [e, v] : c) {
    std::string term;
    if (e == 0) {
      term = v.str();
    } else {
      std::string base = "z" + std::to_string(N_) +
                         (e == 1 ? "" : "^" + std::to_string(e));
      if (v == 1) term = base;
      else if (v == -1) term = "-" + base;
      else term = v.str() + "*" + base;
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0;
  const double tau = 6.283185307179586476925287;
  for (const auto& [e, c] : terms_) {
    double x = c.convert_to<double>();
    acc += x * std::polar(1.0, tau * double(e) / double(N_));
  }
  return acc;
}

} // namespace kzring
