#include "weylgenus/partitions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace genus {

PartitionTable::PartitionTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("PartitionTable: negative bound");
  values_.assign(max_n + 1, 0);
  values_[0] = 1;
  // p(n) = sum_{k>=1} (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ]
  for (int n = 1; n <= max_n; ++n) {
    std::int64_t acc = 0;
    for (int k = 1;; ++k) {
      std::int64_t g1 = static_cast<std::int64_t>(k) * (3 * k - 1) / 2;
      std::int64_t g2 = static_cast<std::int64_t>(k) * (3 * k + 1) / 2;
      if (g1 > n && g2 > n) break;
      std::int64_t term = 0;
      if (g1 <= n) term += values_[n - g1];
      if (g2 <= n) term += values_[n - g2];
      acc += (k % 2 == 1) ? term : -term;
    }
    if (acc <= 0) throw std::overflow_error("PartitionTable: overflow");
    values_[n] = acc;
  }
}

std::int64_t PartitionTable::count(int n) const {
  if (n < 0 || n > max_n())
    throw std::out_of_range("PartitionTable: index out of range");
  return values_[n];
}

std::int64_t partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: negative n");
  static std::mutex mu;
  static PartitionTable* table = nullptr;
  std::lock_guard<std::mutex> lock(mu);
  if (!table || table->max_n() < n) {
    int grow = n < 64 ? 64 : n;
    delete table;
    table = new PartitionTable(grow);
  }
  return table->count(n);
}

namespace {

void emit(int remaining, int max_part, std::vector<int>& prefix,
          std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  emit(n, n == 0 ? 1 : n, prefix, out);
  return out;
}

}  // namespace genus
