#pragma once

#include "negn/laurent.hpp"
#include "negn/partition.hpp"
#include "negn/stable_rep.hpp"

namespace negn {

/// Second-order Casimir eigenvalue of D(lambda, tau) as a Laurent polynomial
/// in N, with long roots of squared length 2:
///
///   N * sum_i i (l_i + t_i)
///   + sum_{i,j} min(i,j) (l_i l_j + t_i t_j) - sum_i i^2 (l_i + t_i)
///   - (1/N) (sum_i i (l_i - t_i))^2
///
/// where l = young_to_labels_cols(lam) and t = young_to_labels_rows(tau),
/// both zero-padded to a common length.
LaurentPoly casimir_formula(const StableRep& rep);

/// (lambda, lambda) + 2 (lambda, rho) evaluated directly from the label
/// vector, using (w_i, w_j) = min(i, j) - i j / N for the fundamental
/// weights and rho = sum of fundamental weights.
Rational casimir_direct(const DynkinLabels& labels);

/// The cross term (2/N) area(lam) area(tau), which is what
/// casimir_formula(D(lam, tau)) adds on top of
/// casimir_formula(D(lam, 0)) + casimir_formula(D(0, tau)).
LaurentPoly casimir_cross_term(const StableRep& rep);

/// Constant term of casimir_formula(D(y, 0)) computed from the run-length
/// form: sum_a A_a (B_{k+1-a}^2 - B_{k-a}^2) - sum_a B_a (A_{k+1-a}^2 -
/// A_{k-a}^2). Antisymmetric under A <-> B, i.e. under transposition.
/// Zero for the empty diagram.
Integer casimir_constant_from_runs(const YoungDiagram& y);

}  // namespace negn
