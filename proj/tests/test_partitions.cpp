#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylgenus/partitions.hpp"

using namespace genus;

namespace {

// Independent oracle: plain recursive count, no recurrence, no memo.
std::int64_t brute_count(int n, int max_part) {
  if (n == 0) return 1;
  std::int64_t total = 0;
  for (int part = std::min(n, max_part); part >= 1; --part)
    total += brute_count(n - part, part);
  return total;
}

}  // namespace

TEST_CASE("pentagonal recurrence matches direct enumeration up to 20") {
  for (int n = 0; n <= 20; ++n)
    CHECK(partition_count(n) == brute_count(n, n == 0 ? 1 : n));
}

TEST_CASE("frozen values") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(7) == 15);
}

TEST_CASE("enumeration agrees with the count up to 30") {
  for (int n = 0; n <= 30; ++n)
    CHECK(static_cast<std::int64_t>(enumerate_partitions(n).size()) ==
          partition_count(n));
}

TEST_CASE("canonical order: non-increasing parts, lexicographically descending") {
  auto parts = enumerate_partitions(3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == std::vector<int>{3});
  CHECK(parts[1] == std::vector<int>{2, 1});
  CHECK(parts[2] == std::vector<int>{1, 1, 1});

  CHECK(enumerate_partitions(0) == std::vector<std::vector<int>>{{}});
  CHECK(enumerate_partitions(5).size() == 7);

  for (int n = 1; n <= 12; ++n) {
    auto all = enumerate_partitions(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      int sum = 0;
      for (std::size_t j = 0; j + 1 < all[i].size(); ++j)
        CHECK(all[i][j] >= all[i][j + 1]);
      for (int p : all[i]) sum += p;
      CHECK(sum == n);
      if (i) CHECK(all[i - 1] > all[i]);  // lexicographically descending
    }
  }
}

TEST_CASE("table is positive and non-decreasing") {
  PartitionTable table(40);
  CHECK(table.count(0) == 1);
  for (int n = 1; n <= 40; ++n) {
    CHECK(table.count(n) > 0);
    CHECK(table.count(n) >= table.count(n - 1));
  }
}

TEST_CASE("negative input rejected") {
  CHECK_THROWS_AS(partition_count(-1), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_partitions(-2), std::invalid_argument);
}
