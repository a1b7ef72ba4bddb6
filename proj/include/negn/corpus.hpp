#pragma once

#include "negn/laurent.hpp"
#include "negn/partition.hpp"
#include "negn/stable_rep.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace negn {

/// Draws partitions of a given size uniformly, using the table
/// p(n, m) = number of partitions of n with all parts <= m.
class PartitionSampler {
public:
  explicit PartitionSampler(int max_area);

  int max_area() const noexcept { return max_area_; }
  /// Number of partitions of n with parts at most m.
  const Integer& count(int n, int m) const;
  /// Uniform over the partitions of n (0 <= n <= max_area).
  YoungDiagram sample(int n, std::mt19937_64& rng) const;

private:
  int max_area_;
  std::vector<std::vector<Integer>> table_;
};

/// Deterministic pseudo-random pairs (lam, tau): each diagram's area is
/// uniform in [0, max_area], then the diagram is uniform among partitions of
/// that area. The same seed yields the same corpus.
std::vector<StableRep> random_corpus(std::uint64_t seed, int max_area,
                                     int count);

/// Every pair (lam, tau) with both areas <= max_area, lam-major in
/// lexicographic partition order.
std::vector<StableRep> exhaustive_pairs(int max_area);

}  // namespace negn
