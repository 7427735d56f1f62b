#include "extgen.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "tensor.hpp"

namespace kzring {

int ext_monomial_degree(const ExtMonomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

GeneratorPolynomial GeneratorPolynomial::unit(int n) {
  GeneratorPolynomial p(n);
  p.add_term(ExtMonomial(std::max(0, n - 1), 0), 1);
  return p;
}

GeneratorPolynomial GeneratorPolynomial::variable(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("generator index out of range");
  if (k == 0) return unit(n);
  GeneratorPolynomial p(n);
  ExtMonomial m(n - 1, 0);
  m[k - 1] = 1;
  p.add_term(m, 1);
  return p;
}

int GeneratorPolynomial::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, ext_monomial_degree(m));
  return d;
}

void GeneratorPolynomial::add_term(const ExtMonomial& m, long long c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GeneratorPolynomial& GeneratorPolynomial::operator+=(const GeneratorPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GeneratorPolynomial& GeneratorPolynomial::operator-=(const GeneratorPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GeneratorPolynomial& GeneratorPolynomial::scale(long long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GeneratorPolynomial& GeneratorPolynomial::times_variable(int k) {
  if (k == 0) return *this;
  std::map<ExtMonomial, long long> shifted;
  for (const auto& [m, c] : terms_) {
    ExtMonomial m2 = m;
    ++m2[k - 1];
    shifted.emplace(std::move(m2), c);
  }
  terms_ = std::move(shifted);
  return *this;
}

namespace {

// Display order: total degree descending, then higher generators first.
bool display_before(const ExtMonomial& a, const ExtMonomial& b) {
  int da = ext_monomial_degree(a), db = ext_monomial_degree(b);
  if (da != db) return da > db;
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

std::string monomial_str(const ExtMonomial& m) {
  std::string s;
  for (int i = (int)m.size() - 1; i >= 0; --i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "E" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "E0" : s;
}

} // namespace

std::string GeneratorPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const ExtMonomial, long long>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return display_before(a->first, b->first); });
  std::string s;
  for (auto* t : order) {
    long long c = t->second;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    long long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += monomial_str(t->first);
  }
  return s;
}

SymClassFunction GeneratorPolynomial::evaluate() const {
  const SymTable& t = SymTable::of(n_);
  SymClassFunction acc(n_, std::vector<long long>(t.num_classes(), 0));
  for (const auto& [m, c] : terms_) {
    SymClassFunction prod = trivial_character(n_);
    for (int k = 1; k <= (int)m.size(); ++k)
      for (int e = 0; e < m[k - 1]; ++e)
        prod *= exterior_power_character(n_, k);
    prod.scale(c);
    acc += prod;
  }
  return acc;
}

namespace {

// Lexicographic measure for the proof's double induction; outer = d(lambda),
// inner = d(lambda) - alpha'_1.
struct Token {
  int outer;
  int inner;
  bool decreases_from(const Token& parent) const {
    return outer < parent.outer || (outer == parent.outer && inner < parent.inner);
  }
};

std::mutex express_mutex;
std::map<std::vector<int>, GeneratorPolynomial> express_memo;

GeneratorPolynomial express_rec(const Partition& lambda, const Token* parent,
                                std::vector<std::string>* log) {
  {
    std::lock_guard<std::mutex> lock(express_mutex);
    auto it = express_memo.find(lambda.parts());
    if (it != express_memo.end()) return it->second;
  }

  const int n = lambda.size();
  const int d = depth(lambda);
  const Partition alpha = theta(lambda);
  const Token token{d, d - alpha.length()};
  if (parent && !token.decreases_from(*parent))
    throw std::logic_error("induction measure failed to decrease at " + lambda.str());

  GeneratorPolynomial result(n);
  if (alpha.length() == d) {
    // alpha = [1^d]: lambda is the hook [n-d, 1^d] (covers d <= 1 as well).
    result = GeneratorPolynomial::variable(n, d);
    if (log)
      log->push_back("base " + lambda.str() + " -> E" + std::to_string(d));
  } else {
    const Partition alpha0 = decrement(alpha);
    const int r = alpha.size() - alpha0.size();
    std::vector<int> mu_parts;
    mu_parts.push_back(n - alpha0.size());
    for (int x : alpha0.parts()) mu_parts.push_back(x);
    const Partition mu(std::move(mu_parts));

    RInfinityElement m = tensor_decompose(mu, hook_partition(n, r));
    if (m.coeff(lambda) != 1)
      throw std::logic_error("Pieri coefficient of " + lambda.str() + " is not 1");
    if (log)
      log->push_back("step " + lambda.str() + " via " + mu.str() + " (x) E" +
                     std::to_string(r) + ", measure (" + std::to_string(token.outer) +
                     "," + std::to_string(token.inner) + ")");

    result = express_rec(mu, &token, log);
    result.times_variable(r);
    for (const auto& [nu, c] : m.terms()) {
      if (nu == lambda) continue;
      const int dn = depth(nu);
      if (dn > d || (dn == d && theta(nu).length() <= alpha.length()))
        throw std::logic_error("peeled term " + nu.str() + " violates the induction");
      GeneratorPolynomial q = express_rec(nu, &token, log);
      q.scale(c);
      result -= q;
    }
  }

  std::lock_guard<std::mutex> lock(express_mutex);
  express_memo.emplace(lambda.parts(), result);
  return result;
}

} // namespace

GeneratorPolynomial express(const Partition& lambda, int cap,
                            std::vector<std::string>* audit_log) {
  if (lambda.size() > cap) throw std::invalid_argument("express cap exceeded");
  return express_rec(lambda, nullptr, audit_log);
}

GenerationReport verify_generation(int n, int cap) {
  GenerationReport rep;
  rep.n = n;
  const SymTable& t = SymTable::of(n);
  for (const Partition& lambda : t.irreducibles()) {
    GeneratorPolynomial p = express(lambda, cap);
    rep.max_degree = std::max(rep.max_degree, p.max_degree());
    rep.max_terms = std::max(rep.max_terms, p.num_terms());
    rep.entries.emplace_back(lambda, p.str());
    if (!(p.evaluate() == t.row(t.index_of(lambda))))
      rep.mismatches.push_back(lambda);
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

} // namespace kzring
