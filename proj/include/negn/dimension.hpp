#pragma once

#include "negn/laurent.hpp"
#include "negn/partition.hpp"
#include "negn/stable_rep.hpp"

namespace negn {

/// Dimension of the SU(n) irrep with diagram y: product of (n + content)
/// over boxes divided by the product of hook lengths. Zero when y has more
/// than n rows. Throws std::invalid_argument for n < 1.
Integer dim_hook(const YoungDiagram& y, int n);

/// Independent check of dim_hook: the Weyl product over 1 <= i < j <= n of
/// (l_i - l_j + j - i) / (j - i), with l the row lengths padded to n entries.
Integer dim_weyl_oracle(const YoungDiagram& y, int n);

/// dim_hook of the rank-n realization. Throws below n_min.
Integer dim_stable(const StableRep& rep, int n);

/// The polynomial P with P(n) = dim_stable(rep, n) for every n >= n_min.
///
/// Interpolates through n_min .. n_min + area(lam) + area(tau) + 3 and
/// requires every coefficient above degree area(lam) + area(tau) to vanish;
/// a surviving coefficient throws std::logic_error, since it can only come
/// from an encoding mistake upstream.
LaurentPoly dim_polynomial(const StableRep& rep);

/// Fixed-diagram dimension polynomial, i.e. dim_polynomial(D(y, empty)).
LaurentPoly dim_polynomial(const YoungDiagram& y);

}  // namespace negn
