#include "symchar.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kzring {

long long rational_to_ll(const Rational& r) {
  if (denominator(r) != 1)
    throw std::runtime_error("expected an integer, got " + r.str());
  return numerator(r).convert_to<long long>();
}

SymClassFunction& SymClassFunction::operator*=(const SymClassFunction& o) {
  if (n != o.n) throw std::invalid_argument("class function size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] *= o.values[i];
  return *this;
}

SymClassFunction& SymClassFunction::operator+=(const SymClassFunction& o) {
  if (n != o.n) throw std::invalid_argument("class function size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

SymClassFunction& SymClassFunction::operator-=(const SymClassFunction& o) {
  if (n != o.n) throw std::invalid_argument("class function size mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

SymClassFunction& SymClassFunction::scale(long long c) {
  for (auto& v : values) v *= c;
  return *this;
}

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

// Border-strip recursion on beta-sets. beta_j = lambda_j + (L-1-j); removing
// a strip of size t moves one beta down by t, valid when the target is free.
long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu,
                 std::size_t mu_pos, std::map<MemoKey, long long>& memo) {
  if (lambda.empty()) return 1;
  if (mu_pos >= mu.size()) throw std::logic_error("mn_rec size mismatch");

  MemoKey key(lambda, std::vector<int>(mu.begin() + mu_pos, mu.end()));
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int t = mu[mu_pos];
  const int L = static_cast<int>(lambda.size());
  std::vector<int> beta(L);
  for (int j = 0; j < L; ++j) beta[j] = lambda[j] + (L - 1 - j);

  long long total = 0;
  for (int j = 0; j < L; ++j) {
    int b = beta[j] - t;
    if (b < 0) continue;
    bool occupied = false;
    int height = 0;
    for (int k = 0; k < L; ++k) {
      if (k == j) continue;
      if (beta[k] == b) { occupied = true; break; }
      if (beta[k] > b && beta[k] < beta[j]) ++height;
    }
    if (occupied) continue;

    std::vector<int> nb = beta;
    nb[j] = b;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> nl;
    for (int i = 0; i < L; ++i) {
      int part = nb[i] - (L - 1 - i);
      if (part > 0) nl.push_back(part);
      else if (part < 0) throw std::logic_error("mn_rec bad beta set");
    }
    long long sub = mn_rec(nl, mu, mu_pos + 1, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }

  memo.emplace(std::move(key), total);
  return total;
}

std::mutex mn_mutex;
std::map<MemoKey, long long> mn_memo;
constexpr std::size_t kMnMemoCap = 1u << 22;

} // namespace

long long mn_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("mn_value: |lambda| != |mu|");
  std::lock_guard<std::mutex> lock(mn_mutex);
  if (mn_memo.size() > kMnMemoCap) mn_memo.clear();
  return mn_rec(lambda.parts(), mu.parts(), 0, mn_memo);
}

long long factorial_ll(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int x : mu.parts()) ++mult[x];
  long long z = 1;
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) z *= len;
    z *= factorial_ll(m);
  }
  return z;
}

Partition power_cycle_type(const Partition& mu, long long k) {
  std::vector<int> parts;
  for (int l : mu.parts()) {
    long long g = std::gcd<long long>(l, k);
    for (long long i = 0; i < g; ++i) parts.push_back(static_cast<int>(l / g));
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

SymTable::SymTable(int n) : n_(n) {
  classes_ = enumerate_partitions(n);
  order_ = factorial_ll(n);
  for (int i = 0; i < static_cast<int>(classes_.size()); ++i) {
    class_sizes_.push_back(order_ / centralizer_order(classes_[i]));
    index_[classes_[i].parts()] = i;
  }
  rows_.resize(classes_.size());
  for (std::size_t l = 0; l < classes_.size(); ++l) {
    rows_[l].resize(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c)
      rows_[l][c] = mn_value(classes_[l], classes_[c]);
    row_fns_.emplace_back(n_, rows_[l]);
  }
}

const SymTable& SymTable::of(int n, int cap) {
  if (n < 0 || n > cap)
    throw std::invalid_argument("symmetric group table cap exceeded");
  static std::mutex m;
  static std::map<int, std::unique_ptr<SymTable>> registry;
  std::lock_guard<std::mutex> lock(m);
  auto it = registry.find(n);
  if (it == registry.end())
    it = registry.emplace(n, std::unique_ptr<SymTable>(new SymTable(n))).first;
  return *it->second;
}

int SymTable::index_of(const Partition& p) const {
  auto it = index_.find(p.parts());
  if (it == index_.end()) throw std::invalid_argument("not a partition of n: " + p.str());
  return it->second;
}

int SymTable::power_class(int c, long long k) const {
  return index_.at(power_cycle_type(classes_[c], k).parts());
}

long long SymTable::dimension(int lambda_idx) const {
  return rows_[lambda_idx][identity_class()];
}

Rational SymTable::inner_product(const SymClassFunction& f, const SymClassFunction& g) const {
  if (f.n != n_ || g.n != n_)
    throw std::invalid_argument("inner_product: class function size mismatch");
  __int128 acc = 0;
  for (int c = 0; c < num_classes(); ++c)
    acc += static_cast<__int128>(class_sizes_[c]) * f.values[c] * g.values[c];
  bool neg = acc < 0;
  if (neg) acc = -acc;
  Integer num(static_cast<unsigned long long>(acc >> 64));
  num <<= 64;
  num += static_cast<unsigned long long>(acc & ~0ULL);
  if (neg) num = -num;
  return Rational(num, Integer(order_));
}

long long SymTable::inner_product_int(const SymClassFunction& f, const SymClassFunction& g) const {
  return rational_to_ll(inner_product(f, g));
}

std::vector<long long> SymTable::decompose(const SymClassFunction& f) const {
  std::vector<long long> coeffs(num_classes());
  for (int l = 0; l < num_classes(); ++l)
    coeffs[l] = inner_product_int(f, row_fns_[l]);
  return coeffs;
}

SymClassFunction exterior_power_character(int n, int k) {
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("exterior power index out of range");
  const SymTable& t = SymTable::of(n);
  return t.row(t.index_of(hook_partition(n, k)));
}

SymClassFunction exterior_power_by_power_sums(const SymClassFunction& chi, int k) {
  const SymTable& t = SymTable::of(chi.n);
  std::vector<long long> out(t.num_classes(), 0);
  auto kinds = enumerate_partitions(k);
  for (int c = 0; c < t.num_classes(); ++c) {
    Rational acc = 0;
    for (const Partition& mu : kinds) {
      Rational term(((k - mu.length()) % 2 == 0) ? 1 : -1, centralizer_order(mu));
      for (int part : mu.parts())
        term *= chi.values[t.power_class(c, part)];
      acc += term;
    }
    out[c] = rational_to_ll(acc);
  }
  return SymClassFunction(chi.n, std::move(out));
}

SymClassFunction reflection_character(int n) {
  const SymTable& t = SymTable::of(n);
  std::vector<long long> vals(t.num_classes());
  for (int c = 0; c < t.num_classes(); ++c) {
    long long fixed = 0;
    for (int part : t.classes()[c].parts())
      if (part == 1) ++fixed;
    vals[c] = fixed - 1;
  }
  return SymClassFunction(n, std::move(vals));
}

SymClassFunction trivial_character(int n) {
  const SymTable& t = SymTable::of(n);
  return SymClassFunction(n, std::vector<long long>(t.num_classes(), 1));
}

} // namespace kzring
