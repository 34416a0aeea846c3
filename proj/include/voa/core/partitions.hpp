#pragma once

#include <string>
#include <vector>

namespace voa {

/// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted descending; non-positive parts are rejected.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// Number of parts equal to k.
  int multiplicity(int k) const;

  Partition with_part(int k) const;
  /// Removes one copy of k (k must occur).
  Partition without_part(int k) const;

  /// Lexicographic on the descending part lists.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// All partitions of n with every part >= min_part, in lexicographically
/// descending order ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]).
std::vector<Partition> partitions_of(int n, int min_part = 1);

/// p(0..n) from Euler's pentagonal recurrence.
std::vector<long long> partition_counts(int n);

/// Coefficients of prod_{k>=1} (1 - q^k)^{-copies} through q^n.
std::vector<long long> colored_partition_counts(int n, int copies);

}  // namespace voa
