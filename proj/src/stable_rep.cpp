#include "negn/stable_rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace negn {

DynkinLabels::DynkinLabels(std::vector<int> labels_in, int rank)
    : labels(std::move(labels_in)), rank_n(rank) {
  if (rank_n < 2) throw std::invalid_argument("rank N must be at least 2");
  if (static_cast<int>(labels.size()) != rank_n - 1)
    throw std::invalid_argument("expected N-1 Dynkin labels");
  if (std::any_of(labels.begin(), labels.end(), [](int x) { return x < 0; }))
    throw std::invalid_argument("Dynkin labels must be nonnegative");
}

std::string to_string(const StableRep& rep) {
  return "lambda=" + to_string(rep.lam) + " tau=" + to_string(rep.tau);
}

namespace {

// histogram[i-1] = multiplicity of value i in a sequence of positive ints.
std::vector<int> histogram(const std::vector<int>& values, int max_value) {
  std::vector<int> h(static_cast<std::size_t>(max_value), 0);
  for (int v : values) ++h[v - 1];
  return h;
}

}  // namespace

std::vector<int> young_to_labels_cols(const YoungDiagram& y) {
  return histogram(transpose(y).rows(), y.num_rows());
}

std::vector<int> young_to_labels_rows(const YoungDiagram& y) {
  return histogram(y.rows(), y.num_cols());
}

YoungDiagram labels_to_young(const std::vector<int>& labels) {
  std::vector<int> heights;
  for (int i = static_cast<int>(labels.size()); i >= 1; --i) {
    if (labels[i - 1] < 0)
      throw std::invalid_argument("Dynkin labels must be nonnegative");
    heights.insert(heights.end(), labels[i - 1], i);
  }
  return transpose(YoungDiagram(std::move(heights)));
}

int n_min(const StableRep& rep) {
  return std::max(2, rep.lam.num_rows() + rep.tau.num_cols() + 1);
}

DynkinLabels realize(const StableRep& rep, int n) {
  const int lowest = n_min(rep);
  if (n < lowest)
    throw std::invalid_argument("rank " + std::to_string(n) +
                                " is below n_min = " + std::to_string(lowest) +
                                " for " + to_string(rep));
  std::vector<int> labels(static_cast<std::size_t>(n - 1), 0);
  const auto lam = young_to_labels_cols(rep.lam);
  const auto tau = young_to_labels_rows(rep.tau);
  for (std::size_t i = 1; i <= lam.size(); ++i) labels[i - 1] += lam[i - 1];
  for (std::size_t i = 1; i <= tau.size(); ++i) labels[n - i - 1] += tau[i - 1];
  return DynkinLabels(std::move(labels), n);
}

YoungDiagram realized_young(const StableRep& rep, int n) {
  return labels_to_young(realize(rep, n).labels);
}

StableRep swap(const StableRep& rep) { return {rep.tau, rep.lam}; }

StableRep transpose_both(const StableRep& rep) {
  return {transpose(rep.lam), transpose(rep.tau)};
}

StableRep z2_partner(const StableRep& rep) {
  return {transpose(rep.tau), transpose(rep.lam)};
}

}  // namespace negn
