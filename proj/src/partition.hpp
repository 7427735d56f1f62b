#ifndef KZRING_PARTITION_HPP
#define KZRING_PARTITION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kzring {

// A partition: weakly decreasing sequence of positive integers. The empty
// sequence is the unique partition of 0. Indexes irreducible characters and
// conjugacy classes of symmetric groups throughout.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }           // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_[0]; }

  // "[5,3,1]"; "[]" for the empty partition.
  std::string str() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  // Reverse-lexicographic order on equal sizes matches enumeration order.
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

private:
  std::vector<int> parts_;
  int size_ = 0;
};

// First row removed: theta([l1,l2,...]) = [l2,l3,...].
Partition theta(const Partition& p);

// depth(p) = |theta(p)| = size minus first part.
int depth(const Partition& p);

// Subtract 1 from every part, dropping zeros.
Partition decrement(const Partition& p);

// Transposed Young diagram.
Partition conjugate(const Partition& p);

// All partitions of n, reverse-lexicographic ([n] first, [1^n] last).
// Throws std::invalid_argument beyond the cap.
std::vector<Partition> enumerate_partitions(int n, int cap = 40);

// Number of partitions of n (64-bit; safe far beyond the enumeration cap).
std::uint64_t partition_count(int n);

// A hook [n-k, 1^k]; requires 0 <= k <= n-1 (k = 0 gives [n]).
Partition hook_partition(int n, int k);

} // namespace kzring

#endif
