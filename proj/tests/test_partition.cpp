#include "negn/partition.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace negn;

TEST_CASE("construction rejects non-canonical row sequences") {
  CHECK_THROWS_AS(YoungDiagram({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram({-1}), std::invalid_argument);
  CHECK(YoungDiagram{}.empty());
  CHECK(YoungDiagram({3, 3, 1}).num_cols() == 3);
  CHECK(YoungDiagram({3, 3, 1}).col(2) == 2);
  CHECK(YoungDiagram({3, 3, 1}).col(4) == 0);
}

TEST_CASE("transpose") {
  CHECK(transpose(YoungDiagram{4, 2, 1}) == YoungDiagram{3, 2, 1, 1});
  CHECK(transpose(YoungDiagram{}) == YoungDiagram{});
  CHECK(transpose(YoungDiagram{3, 3, 1}) == YoungDiagram{3, 2, 2});
}

TEST_CASE("area") {
  CHECK(area(YoungDiagram{3, 3, 1}) == 7);
  CHECK(area(YoungDiagram{}) == 0);
  CHECK(area(YoungDiagram{4, 2, 1}) == 7);
}

TEST_CASE("hook lengths") {
  CHECK(hook_lengths(YoungDiagram{3, 3, 1}) ==
        BoxTable{{5, 3, 2}, {4, 2, 1}, {1}});
  CHECK(hook_lengths(YoungDiagram{1}) == BoxTable{{1}});
  CHECK(hook_lengths(YoungDiagram{2, 1}) == oracle::brute_hooks({2, 1}));
  CHECK(hook_lengths(YoungDiagram{2, 1}) == BoxTable{{3, 1}, {1}});
}

TEST_CASE("contents") {
  CHECK(contents(YoungDiagram{3, 3, 1}) ==
        BoxTable{{0, 1, 2}, {-1, 0, 1}, {-2}});
  CHECK(contents(YoungDiagram{1}) == BoxTable{{0}});
  CHECK(contents(YoungDiagram{2, 2}) == oracle::brute_contents({2, 2}));
  CHECK(contents(YoungDiagram{2, 2}) == BoxTable{{0, 1}, {-1, 0}});
}

TEST_CASE("run decomposition") {
  auto r = runs(YoungDiagram{6, 5, 3, 3, 1, 1, 1});
  CHECK(r.a == std::vector<int>{1, 1, 2, 3});
  CHECK(r.b == std::vector<int>{1, 2, 2, 1});
  CHECK(r.A == std::vector<int>{1, 2, 4, 7});
  CHECK(r.B == std::vector<int>{1, 3, 5, 6});
  CHECK(r.k() == 4);

  auto single = runs(YoungDiagram{1});
  CHECK(single.a == std::vector<int>{1});
  CHECK(single.b == std::vector<int>{1});

  auto square = runs(YoungDiagram{2, 2});
  CHECK(square.a == std::vector<int>{2});
  CHECK(square.b == std::vector<int>{2});

  CHECK_THROWS_AS(runs(YoungDiagram{}), std::invalid_argument);
}

TEST_CASE("from_runs") {
  using RD = RunDecomposition;
  CHECK(from_runs(RD::from_multiplicities({1, 1, 2, 3}, {1, 2, 2, 1})) ==
        YoungDiagram{6, 5, 3, 3, 1, 1, 1});
  CHECK(from_runs(RD::from_multiplicities({1}, {1})) == YoungDiagram{1});
  auto rect = from_runs(RD::from_multiplicities({2}, {3}));
  CHECK(rect == YoungDiagram{3, 3});
  CHECK(runs(rect) == RD::from_multiplicities({2}, {3}));

  CHECK_THROWS_AS(from_runs(RD::from_multiplicities({1, 1}, {2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_runs(RD::from_multiplicities({0}, {1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_runs(RD::from_multiplicities({}, {})),
                  std::invalid_argument);
  auto bad = RD::from_multiplicities({1}, {1});
  bad.A = {2};
  CHECK_THROWS_AS(from_runs(bad), std::invalid_argument);
}

TEST_CASE("partition text format") {
  CHECK(parse_partition("4,2,1") == YoungDiagram{4, 2, 1});
  CHECK(parse_partition(" 4, 2 ,1 ") == YoungDiagram{4, 2, 1});
  CHECK(parse_partition("") == YoungDiagram{});
  CHECK(to_string(YoungDiagram{4, 2, 1}) == "4,2,1");
  CHECK(to_string(YoungDiagram{}).empty());
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,"), std::invalid_argument);
}

TEST_CASE("partition enumeration matches p(n)") {
  for (int n = 0; n < 16; ++n) {
    auto ps = partitions_of(n);
    CHECK(static_cast<int>(ps.size()) == oracle::kPartitionCounts[n]);
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
    for (const auto& y : ps) CHECK(area(y) == n);
  }
  CHECK(partitions_up_to(4).size() == 12);
}

// Exhaustive properties over every diagram with area <= 10.
TEST_CASE("diagram invariants, exhaustive to area 10") {
  for (const auto& y : partitions_up_to(10)) {
    CAPTURE(to_string(y));
    const auto yt = transpose(y);
    CHECK(transpose(yt) == y);
    CHECK(area(yt) == area(y));
    CHECK(yt == oracle::brute_transpose(y));
    CHECK(parse_partition(to_string(y)) == y);

    const auto hooks = hook_lengths(y);
    CHECK(hooks == oracle::brute_hooks(y));
    const auto hooks_t = hook_lengths(yt);
    for (int r = 1; r <= y.num_rows(); ++r)
      for (int c = 1; c <= y.row(r); ++c)
        CHECK(hooks[r - 1][c - 1] == hooks_t[c - 1][r - 1]);

    std::vector<int> flat, flat_t;
    for (const auto& row : hooks) flat.insert(flat.end(), row.begin(), row.end());
    for (const auto& row : hooks_t)
      flat_t.insert(flat_t.end(), row.begin(), row.end());
    std::sort(flat.begin(), flat.end());
    std::sort(flat_t.begin(), flat_t.end());
    CHECK(flat == flat_t);

    if (!y.empty()) {
      const auto r = runs(y);
      const auto rt = runs(yt);
      CHECK(r.a.size() == r.b.size());
      CHECK(r.A.back() == y.num_rows());
      CHECK(r.B.back() == y.num_cols());
      CHECK(rt.a == r.b);
      CHECK(rt.b == r.a);
      CHECK(from_runs(r) == y);
    }
  }
}
