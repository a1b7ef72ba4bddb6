#include "negn/dimension.hpp"

#include <stdexcept>
#include <vector>

namespace negn {

namespace {

void require_rank(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
}

}  // namespace

Integer dim_hook(const YoungDiagram& y, int n) {
  require_rank(n);
  if (y.num_rows() > n) return 0;
  Integer num = 1;
  Integer den = 1;
  const auto hooks = hook_lengths(y);
  const auto offsets = contents(y);
  for (std::size_t r = 0; r < hooks.size(); ++r) {
    for (std::size_t c = 0; c < hooks[r].size(); ++c) {
      num *= n + offsets[r][c];
      den *= hooks[r][c];
    }
  }
  Integer quotient;
  mpz_divexact(quotient.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return quotient;
}

Integer dim_weyl_oracle(const YoungDiagram& y, int n) {
  require_rank(n);
  if (y.num_rows() > n) return 0;
  Integer num = 1;
  Integer den = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      num *= y.row(i) - y.row(j) + j - i;
      den *= j - i;
    }
  }
  if (num % den != 0)
    throw std::logic_error("Weyl product is not an integer");
  return num / den;
}

Integer dim_stable(const StableRep& rep, int n) {
  return dim_hook(realized_young(rep, n), n);
}

LaurentPoly dim_polynomial(const StableRep& rep) {
  const int degree_bound = area(rep.lam) + area(rep.tau);
  const int first = n_min(rep);
  std::vector<std::pair<long, Rational>> points;
  for (int n = first; n <= first + degree_bound + 3; ++n)
    points.emplace_back(n, Rational(dim_stable(rep, n)));
  LaurentPoly p = interpolate(points);
  if (p.degree().value_or(0) > degree_bound)
    throw std::logic_error("dimension polynomial of " + to_string(rep) +
                           " exceeds degree " + std::to_string(degree_bound));
  return p;
}

LaurentPoly dim_polynomial(const YoungDiagram& y) {
  return dim_polynomial(StableRep{y, {}});
}

}  // namespace negn
