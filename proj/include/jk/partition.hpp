#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jk/rational.hpp"

namespace jk {

class NoSuchPartition : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Integer partition, parts stored in weakly decreasing order.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and nonincreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Sorts first; still rejects nonpositive parts.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const { return weight_; }
  // 1-based; 0 beyond the length.
  int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int multiplicity(int r) const;
  Partition conjugate() const;
  // Sum of the squares of the parts.
  long sum_of_squares() const;

  // Lexicographic on parts; enumeration order is the reverse of this.
  std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

  // "[3,2]", "[]".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionStats {
  Integer z;   // prod_i i^{m_i} m_i!
  Integer u;   // l! / prod_i m_i!
  Integer v;   // prod_i (i-1)^{m_i}
  Rational w;  // v * sum_{i>=2} i m_i / (i-1)
};

PartitionStats stats(const Partition& mu);

// All partitions of n whose parts are >= min_part, in reverse lexicographic
// order ([n] first).
std::vector<Partition> enumerate(int n, int min_part = 1);
// Partitions of n with parts in [min_part, max_part].
std::vector<Partition> enumerate_bounded(int n, int min_part, int max_part);

// Increase the i-th row (1-based, i <= l+1) by one; throws NoSuchPartition
// if the result is not a partition.
Partition add_node(const Partition& lambda, int i);
// mu ∪ r, mu \ r, and mu↓(r) = (mu \ r) ∪ (r - 1), mu↑(r) = (mu \ r) ∪ (r + 1).
Partition union_part(const Partition& mu, int r);
Partition remove_part(const Partition& mu, int r);
Partition down(const Partition& mu, int r);
Partition up(const Partition& mu, int r);

// Number of ways to assign the parts of rho to the blocks of mu so that each
// block's assigned parts sum to the block's size.
Integer refinement_count(const Partition& rho, const Partition& mu);

}  // namespace jk
