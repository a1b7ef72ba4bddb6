#pragma once

#include "negn/partition.hpp"

#include <string>
#include <vector>

namespace negn {

/// Highest-weight coordinates of an SU(N) irrep in the fundamental-weight
/// basis; `labels[i-1]` is the i-th Dynkin label.
struct DynkinLabels {
  std::vector<int> labels;
  int rank_n = 2;

  DynkinLabels() : labels(1, 0) {}
  /// Throws std::invalid_argument unless rank_n >= 2, labels has
  /// rank_n - 1 entries and none is negative.
  DynkinLabels(std::vector<int> labels, int rank_n);

  friend bool operator==(const DynkinLabels&, const DynkinLabels&) = default;
};

/// The family D(lambda, tau): labels (l_1, ..., l_k, 0, ..., 0, t_k, ..., t_1)
/// where the zero gap grows with N.
///
/// `lam` contributes through its column heights: l_i counts columns of lam of
/// height i. `tau` contributes through its row lengths: t_i counts rows of tau
/// of length i, placed at position N - i. Equivalently the tall columns of the
/// realized diagram are the complements (to height N) of the row lengths of
/// tau.
struct StableRep {
  YoungDiagram lam;
  YoungDiagram tau;

  friend bool operator==(const StableRep&, const StableRep&) = default;
  friend auto operator<=>(const StableRep&, const StableRep&) = default;
};

/// "lambda=4,2,1 tau=3,1"
std::string to_string(const StableRep& rep);

/// Label i = number of columns of height i; trailing zeros trimmed.
std::vector<int> young_to_labels_cols(const YoungDiagram& y);
/// Label j = number of rows of length j; equals the column encoding of the
/// transpose.
std::vector<int> young_to_labels_rows(const YoungDiagram& y);
/// Inverse of the column encoding. Throws std::invalid_argument on a
/// negative label.
YoungDiagram labels_to_young(const std::vector<int>& labels);

/// Smallest rank at which the lambda block and the tau block of the label
/// vector do not overlap. Realization at exactly this rank leaves a gap of
/// zero labels between the blocks.
int n_min(const StableRep& rep);

/// Concrete label vector of D(lambda, tau) at rank n. Throws
/// std::invalid_argument (naming n_min) when n < n_min(rep).
DynkinLabels realize(const StableRep& rep, int n);
/// The rank-n Young diagram of the realization.
YoungDiagram realized_young(const StableRep& rep, int n);

/// (lambda, tau) -> (tau, lambda)
StableRep swap(const StableRep& rep);
/// (lambda, tau) -> (lambda^T, tau^T)
StableRep transpose_both(const StableRep& rep);
/// (lambda, tau) -> (tau^T, lambda^T): the label-reversing automorphism.
StableRep z2_partner(const StableRep& rep);

}  // namespace negn
