#include "negn/casimir.hpp"

#include <algorithm>

namespace negn {

LaurentPoly casimir_formula(const StableRep& rep) {
  auto lam = young_to_labels_cols(rep.lam);
  auto tau = young_to_labels_rows(rep.tau);
  const std::size_t k = std::max(lam.size(), tau.size());
  lam.resize(k, 0);
  tau.resize(k, 0);

  Integer linear = 0;    // sum i (l_i + t_i)
  Integer constant = 0;
  Integer imbalance = 0;  // sum i (l_i - t_i)
  for (std::size_t i = 1; i <= k; ++i) {
    const long li = lam[i - 1];
    const long ti = tau[i - 1];
    linear += Integer(i) * (li + ti);
    imbalance += Integer(i) * (li - ti);
    constant -= Integer(i * i) * (li + ti);
    for (std::size_t j = 1; j <= k; ++j) {
      const long m = static_cast<long>(std::min(i, j));
      constant += Integer(m) * (li * lam[j - 1] + ti * tau[j - 1]);
    }
  }
  return LaurentPoly::monomial(Rational(linear), 1) + Rational(constant) -
         LaurentPoly::monomial(Rational(imbalance * imbalance), -1);
}

Rational casimir_direct(const DynkinLabels& labels) {
  const long n = labels.rank_n;
  auto pairing = [n](long i, long j) {
    Rational g(Integer(std::min(i, j) * n - i * j), Integer(n));
    g.canonicalize();
    return g;
  };
  Rational norm = 0;
  Rational with_rho = 0;
  for (long i = 1; i < n; ++i) {
    const long wi = labels.labels[i - 1];
    if (wi == 0) continue;
    for (long j = 1; j < n; ++j) {
      Rational g = pairing(i, j);
      norm += wi * labels.labels[j - 1] * g;
      with_rho += wi * g;
    }
  }
  Rational total = norm + 2 * with_rho;
  total.canonicalize();
  return total;
}

LaurentPoly casimir_cross_term(const StableRep& rep) {
  return LaurentPoly::monomial(
      Rational(2L * area(rep.lam) * area(rep.tau)), -1);
}

Integer casimir_constant_from_runs(const YoungDiagram& y) {
  if (y.empty()) return 0;
  const auto r = runs(y);
  const int k = r.k();
  // prefix sums with the A_0 = B_0 = 0 convention
  auto A = [&](int i) { return i == 0 ? Integer(0) : Integer(r.A[i - 1]); };
  auto B = [&](int i) { return i == 0 ? Integer(0) : Integer(r.B[i - 1]); };
  Integer total = 0;
  for (int a = 1; a <= k; ++a) {
    total += A(a) * (B(k + 1 - a) * B(k + 1 - a) - B(k - a) * B(k - a));
    total -= B(a) * (A(k + 1 - a) * A(k + 1 - a) - A(k - a) * A(k - a));
  }
  return total;
}

}  // namespace negn
