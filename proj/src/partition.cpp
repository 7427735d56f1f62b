#include "partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kzring {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string::npos || text[a] != '[' || text[b] != ']')
    throw std::invalid_argument("partition text must look like \"[3,2,1]\"");
  std::vector<int> parts;
  std::string body = text.substr(a + 1, b - a - 1);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t t0 = tok.find_first_not_of(" \t");
    if (t0 == std::string::npos) throw std::invalid_argument("empty partition entry");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition theta(const Partition& p) {
  if (p.empty()) return Partition();
  return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

int depth(const Partition& p) { return p.size() - p.first(); }

Partition decrement(const Partition& p) {
  std::vector<int> q;
  for (int x : p.parts())
    if (x > 1) q.push_back(x - 1);
  return Partition(std::move(q));
}

Partition conjugate(const Partition& p) {
  std::vector<int> q;
  for (int col = 1; col <= p.first(); ++col) {
    int count = 0;
    for (int x : p.parts()) {
      if (x >= col) ++count;
      else break;
    }
    q.push_back(count);
  }
  return Partition(std::move(q));
}

namespace {

void enumerate_rec(int remaining, int maxpart, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int next = std::min(remaining, maxpart); next >= 1; --next) {
    cur.push_back(next);
    enumerate_rec(remaining - next, next, cur, out);
    cur.pop_back();
  }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int cap) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > cap) throw std::invalid_argument("partition enumeration cap exceeded");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_rec(n, n, cur, out);
  if (out.empty()) out.emplace_back();  // n = 0
  return out;
}

std::uint64_t partition_count(int n) {
  // Euler's pentagonal-number recurrence.
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      std::uint64_t term = 0;
      if (g1 <= m) term += p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (k % 2 == 1) acc += term;
      else acc -= term;
    }
    p[m] = acc;
  }
  return p[n];
}

Partition hook_partition(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("hook index out of range");
  std::vector<int> parts;
  parts.push_back(n - k);
  for (int i = 0; i < k; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

} // namespace kzring
