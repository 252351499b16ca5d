#pragma once

#include <cstdint>
#include <vector>

namespace genus {

// Table of the partition function p(0)..p(max_n), filled with Euler's
// pentagonal-number recurrence. Immutable after construction.
class PartitionTable {
 public:
  explicit PartitionTable(int max_n);
  std::int64_t count(int n) const;
  int max_n() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  std::vector<std::int64_t> values_;
};

// p(n), memoized process-wide.
std::int64_t partition_count(int n);

// All partitions of n exactly once: non-increasing parts, listed in
// lexicographically descending order, e.g. 3 -> [(3), (2,1), (1,1,1)].
std::vector<std::vector<int>> enumerate_partitions(int n);

}  // namespace genus
