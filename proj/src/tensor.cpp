#include "tensor.hpp"

#include <array>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace kzring {

void RInfinityElement::add(const Partition& p, long long c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long long RInfinityElement::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

namespace {

struct LrState {
  std::vector<int> alpha, nu, beta;
  std::vector<std::vector<int>> cell;   // cell[r][j] for j in [alpha_r, nu_r)
  std::vector<int> content;             // count of each value placed so far
  long long count = 0;

  int alpha_part(int r) const { return r < (int)alpha.size() ? alpha[r] : 0; }

  // Cells are visited right-to-left within each row, rows top to bottom, so
  // the prefix seen so far is exactly a prefix of the reverse reading word.
  void fill(int r, int j) {
    if (r == (int)nu.size()) { ++count; return; }
    if (j < alpha_part(r)) { fill(r + 1, (r + 1 < (int)nu.size()) ? nu[r + 1] - 1 : 0); return; }

    int hi = (int)beta.size();
    if (j + 1 < nu[r]) hi = std::min(hi, cell[r][j + 1]);
    int lo = 1;
    if (r > 0 && j >= alpha_part(r - 1)) lo = cell[r - 1][j] + 1;

    for (int v = lo; v <= hi; ++v) {
      if (content[v] >= beta[v - 1]) continue;                 // content bound
      if (v > 1 && content[v] + 1 > content[v - 1]) continue;  // lattice word
      cell[r][j] = v;
      ++content[v];
      fill(r, j - 1);
      --content[v];
    }
  }
};

} // namespace

long long lr_coefficient(const Partition& alpha, const Partition& beta,
                         const Partition& nu) {
  if (nu.size() != alpha.size() + beta.size()) return 0;
  for (int i = 0; i < alpha.length(); ++i)
    if (alpha.part(i) > nu.part(i)) return 0;
  if (beta.empty()) return 1;  // nu == alpha at this point

  LrState st;
  st.alpha = alpha.parts();
  st.nu = nu.parts();
  st.beta = beta.parts();
  st.cell.resize(st.nu.size());
  for (std::size_t r = 0; r < st.nu.size(); ++r) st.cell[r].resize(st.nu[r]);
  st.content.assign(st.beta.size() + 2, 0);
  if (!st.nu.empty()) st.fill(0, st.nu[0] - 1);
  return st.count;
}

long long kron_coefficient(const Partition& lambda, const Partition& mu,
                           const Partition& nu, int cap) {
  int n = lambda.size();
  if (mu.size() != n || nu.size() != n)
    throw std::invalid_argument("kron_coefficient: sizes differ");
  const SymTable& t = SymTable::of(n, cap);
  SymClassFunction prod = t.row(t.index_of(lambda));
  prod *= t.row(t.index_of(mu));
  return t.inner_product_int(prod, t.row(t.index_of(nu)));
}

RInfinityElement tensor_decompose(const Partition& lambda, const Partition& mu,
                                  int cap) {
  int n = lambda.size();
  if (mu.size() != n)
    throw std::invalid_argument("tensor_decompose: sizes differ");
  const SymTable& t = SymTable::of(n, cap);
  SymClassFunction prod = t.row(t.index_of(lambda));
  prod *= t.row(t.index_of(mu));
  std::vector<long long> coeffs = t.decompose(prod);

  RInfinityElement out;
  long long dim_total = 0;
  for (int i = 0; i < t.num_classes(); ++i) {
    if (coeffs[i] == 0) continue;
    if (coeffs[i] < 0) throw std::logic_error("negative Kronecker coefficient");
    out.add(t.irreducibles()[i], coeffs[i]);
    dim_total += coeffs[i] * t.dimension(i);
  }
  long long lhs = t.dimension(t.index_of(lambda)) * t.dimension(t.index_of(mu));
  if (dim_total != lhs) throw std::logic_error("tensor dimension not conserved");
  return out;
}

DvirResult dvir_boundary(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  if (mu.size() != lambda.size() || nu.size() != lambda.size())
    throw std::invalid_argument("dvir_boundary: sizes differ");
  DvirResult r;
  int dl = depth(lambda), dm = depth(mu), dn = depth(nu);
  if (dn > dl + dm) {
    r.applies = true;
    r.value = 0;
  } else if (dn == dl + dm) {
    r.applies = true;
    r.value = lr_coefficient(theta(lambda), theta(mu), theta(nu));
  }
  return r;
}

DvirReport dvir_check(int n, int threads) {
  DvirReport rep;
  rep.n = n;
  const SymTable& t = SymTable::of(n);
  const auto& ps = t.classes();
  const int m = (int)ps.size();
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) d[i] = depth(ps[i]);

  std::mutex merge_mutex;
  std::atomic<int> next(0);
  auto worker = [&]() {
    DvirReport local;
    for (;;) {
      int a = next.fetch_add(1);
      if (a >= m) break;
      for (int b = 0; b < m; ++b) {
        SymClassFunction prod = t.row(a);
        prod *= t.row(b);
        for (int c = 0; c < m; ++c) {
          if (d[c] == d[a] + d[b]) {
            ++local.boundary_triples;
            long long kron = t.inner_product_int(prod, t.row(c));
            long long lr = lr_coefficient(theta(ps[a]), theta(ps[b]), theta(ps[c]));
            if (kron != lr) {
              ++local.mismatches;
              if (local.failures.size() < 8)
                local.failures.push_back({ps[a], ps[b], ps[c]});
            }
          } else if (d[c] > d[a] + d[b]) {
            ++local.vanishing_triples;
            if (t.inner_product_int(prod, t.row(c)) != 0) {
              ++local.mismatches;
              if (local.failures.size() < 8)
                local.failures.push_back({ps[a], ps[b], ps[c]});
            }
          }
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    rep.boundary_triples += local.boundary_triples;
    rep.vanishing_triples += local.vanishing_triples;
    rep.mismatches += local.mismatches;
    for (auto& f : local.failures)
      if (rep.failures.size() < 8) rep.failures.push_back(f);
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rep;
}

} // namespace kzring
