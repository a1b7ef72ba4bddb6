#include "negn/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace negn {

PartitionSampler::PartitionSampler(int max_area) : max_area_(max_area) {
  if (max_area < 0) throw std::invalid_argument("max_area must be >= 0");
  const auto size = static_cast<std::size_t>(max_area + 1);
  table_.assign(size, std::vector<Integer>(size, 0));
  for (int m = 0; m <= max_area; ++m) table_[0][m] = 1;
  for (int n = 1; n <= max_area; ++n)
    for (int m = 1; m <= max_area; ++m)
      table_[n][m] = table_[n][m - 1] + (m <= n ? table_[n - m][m] : Integer(0));
}

const Integer& PartitionSampler::count(int n, int m) const {
  if (n < 0 || n > max_area_)
    throw std::out_of_range("partition size outside sampler table");
  return table_[n][std::clamp(m, 0, max_area_)];
}

YoungDiagram PartitionSampler::sample(int n, std::mt19937_64& rng) const {
  if (n < 0 || n > max_area_)
    throw std::out_of_range("partition size outside sampler table");
  // Pick a rank in [0, p(n, n)) and unrank it, largest part first.
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(rng());
  Integer rank = gen.get_z_range(count(n, n));

  std::vector<int> rows;
  int remaining = n;
  int bound = n;
  while (remaining > 0) {
    // partitions of `remaining` with largest part exactly `part` number
    // p(remaining - part, part); enumerate from the largest part down
    for (int part = std::min(remaining, bound); part >= 1; --part) {
      const Integer& block = count(remaining - part, part);
      if (rank < block) {
        rows.push_back(part);
        remaining -= part;
        bound = part;
        break;
      }
      rank -= block;
    }
  }
  return YoungDiagram(std::move(rows));
}

std::vector<StableRep> random_corpus(std::uint64_t seed, int max_area,
                                     int count) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  PartitionSampler sampler(max_area);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_area(0, max_area);
  std::vector<StableRep> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    YoungDiagram lam = sampler.sample(pick_area(rng), rng);
    YoungDiagram tau = sampler.sample(pick_area(rng), rng);
    out.push_back({std::move(lam), std::move(tau)});
  }
  return out;
}

std::vector<StableRep> exhaustive_pairs(int max_area) {
  const auto diagrams = partitions_up_to(max_area);
  std::vector<StableRep> out;
  out.reserve(diagrams.size() * diagrams.size());
  for (const auto& lam : diagrams)
    for (const auto& tau : diagrams) out.push_back({lam, tau});
  return out;
}

}  // namespace negn
