#include "voa/core/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "voa/core/errors.hpp"

namespace voa {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw DomainError("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  for (int p : parts_) weight_ += p;
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::with_part(int k) const {
  std::vector<int> p = parts_;
  p.push_back(k);
  return Partition(std::move(p));
}

Partition Partition::without_part(int k) const {
  std::vector<int> p = parts_;
  auto it = std::find(p.begin(), p.end(), k);
  if (it == p.end()) throw DomainError("part not present in partition");
  p.erase(it);
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

namespace {

void extend(int remaining, int max_part, int min_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= min_part; --p) {
    prefix.push_back(p);
    extend(remaining - p, p, min_part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int min_part) {
  if (n < 0) throw DomainError("partitions of a negative integer");
  if (min_part < 1) throw DomainError("minimal part must be positive");
  std::vector<Partition> out;
  std::vector<int> prefix;
  extend(n, n, min_part, prefix, out);
  return out;
}

std::vector<long long> partition_counts(int n) {
  std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long acc = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2;
      int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      long long sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p;
}

std::vector<long long> colored_partition_counts(int n, int copies) {
  std::vector<long long> c(static_cast<std::size_t>(n + 1), 0);
  c[0] = 1;
  for (int copy = 0; copy < copies; ++copy)
    for (int k = 1; k <= n; ++k)
      for (int m = k; m <= n; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - k)];
  return c;
}

}  // namespace voa
