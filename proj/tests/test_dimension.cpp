#include "negn/dimension.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace negn;

namespace {
const LaurentPoly N = LaurentPoly::N();
}

TEST_CASE("dim_hook") {
  // (4*5*6)(3*4*5)(2) / (5*3*2*4*2*1*1) = 14400 / 240
  CHECK(dim_hook({3, 3, 1}, 4) == 60);
  CHECK(dim_weyl_oracle({3, 3, 1}, 4) == 60);
  for (int n = 1; n <= 12; ++n) CHECK(dim_hook({1}, n) == n);
  CHECK(dim_hook({2, 1}, 3) == 8);
  CHECK(dim_weyl_oracle({2, 1}, 3) == 8);
  CHECK(dim_hook({1, 1, 1}, 2) == 0);
  CHECK(dim_hook({}, 1) == 1);
  CHECK_THROWS_AS(dim_hook({1}, 0), std::invalid_argument);
}

TEST_CASE("dim_weyl_oracle") {
  CHECK(dim_weyl_oracle({}, 5) == 1);
  CHECK(dim_weyl_oracle({1, 1}, 2) == 1);
  CHECK(dim_weyl_oracle({1, 1, 1}, 2) == 0);
  CHECK_THROWS_AS(dim_weyl_oracle({1}, 0), std::invalid_argument);
}

TEST_CASE("dim_hook agrees with the Weyl product") {
  for (const auto& y : partitions_up_to(8)) {
    for (int n = std::max(1, y.num_rows()); n <= y.num_rows() + 6; ++n) {
      CAPTURE(to_string(y));
      CAPTURE(n);
      const auto d = dim_hook(y, n);
      CHECK(d == dim_weyl_oracle(y, n));
      CHECK(d > 0);
    }
  }
}

TEST_CASE("dim_stable") {
  CHECK(dim_stable({{1}, {1}}, 5) == 24);
  CHECK(dim_stable({{}, {}}, 9) == 1);
  // tau = (2): label 1 at N-2, the antisymmetric square of the antifundamental
  CHECK(dim_stable({{}, {2}}, 4) == 6);
  CHECK(dim_weyl_oracle(labels_to_young({0, 1, 0}), 4) == 6);
  // tau = (1,1): label 2 at N-1, the symmetric square of the antifundamental
  CHECK(dim_stable({{}, {1, 1}}, 4) == 10);
  CHECK(dim_weyl_oracle(labels_to_young({0, 0, 2}), 4) == 10);
  CHECK_THROWS_AS(dim_stable({{1}, {1}}, 2), std::invalid_argument);
}

TEST_CASE("dim_polynomial") {
  CHECK(dim_polynomial(StableRep{{1}, {1}}) == N * N - 1);
  CHECK(dim_polynomial(StableRep{{}, {}}) == LaurentPoly(1));
  CHECK(dim_polynomial(StableRep{{1}, {}}) == N);
  CHECK(dim_polynomial(StableRep{{}, {1}}) == N);
  CHECK(dim_polynomial(YoungDiagram{2}) ==
        N * (N + 1) * LaurentPoly(Rational(1, 2)));
}

TEST_CASE("transposed adjoint family (N-1, 1)") {
  for (int n = 3; n <= 10; ++n) {
    Integer f2n2, fn2, fn;
    mpz_fac_ui(f2n2.get_mpz_t(), 2 * n - 2);
    mpz_fac_ui(fn2.get_mpz_t(), n - 2);
    mpz_fac_ui(fn.get_mpz_t(), n);
    const Integer expected = f2n2 * (n - 1) / (fn2 * fn);
    CHECK(dim_hook({n - 1, 1}, n) == expected);
  }
  CHECK(dim_hook({2, 1}, 3) == 8);
}

TEST_CASE("fixed diagrams: interpolation equals the symbolic hook-content product") {
  for (const auto& y : partitions_up_to(7)) {
    CAPTURE(to_string(y));
    CHECK(dim_polynomial(y) == oracle::symbolic_hook_content(y));
  }
}

TEST_CASE("polynomiality, degree and positivity on all pairs of area <= 3") {
  const auto diagrams = partitions_up_to(3);
  for (const auto& lam : diagrams) {
    for (const auto& tau : diagrams) {
      const StableRep rep{lam, tau};
      CAPTURE(to_string(rep));
      const auto p = dim_polynomial(rep);
      const int degree = area(lam) + area(tau);
      CHECK(p.is_polynomial());
      CHECK(p.degree().value_or(0) == degree);
      const int fresh = n_min(rep) + degree + 4;
      for (int n = fresh; n <= fresh + 4; ++n)
        CHECK(evaluate(p, n) == Rational(dim_stable(rep, n)));
      for (int n = n_min(rep); n < fresh; ++n) CHECK(dim_stable(rep, n) > 0);
    }
  }
}

// The realized diagram of D(lam, tau) splits into the rectangle `a` (rows
// above the bottom of lam, left of lam), lam itself, and `b` below a. The
// b block contributes dim(tau^T) of SU(N - rows(lam)); the lam block is the
// fixed-diagram product shifted by the number of tall columns.
TEST_CASE("block decomposition of the realized diagram") {
  const auto diagrams = partitions_up_to(4);
  for (const auto& lam : diagrams) {
    for (const auto& tau : diagrams) {
      const StableRep rep{lam, tau};
      CAPTURE(to_string(rep));
      const long rows = lam.num_rows();
      const long tall = tau.num_rows();
      for (int n = n_min(rep); n <= n_min(rep) + 5; ++n) {
        const auto y = realized_young(rep, n);
        using B = oracle::Box;
        auto a = oracle::partial_dimension(y, n, [&](B b) {
          return b.first <= rows && b.second <= tall;
        });
        auto l = oracle::partial_dimension(y, n, [&](B b) {
          return b.first <= rows && b.second > tall;
        });
        auto bb = oracle::partial_dimension(
            y, n, [&](B b) { return b.first > rows; });
        CHECK(a * l * bb == Rational(dim_stable(rep, n)));
        CHECK(bb == Rational(dim_hook(transpose(tau), n - rows)));
        CHECK(l == evaluate(oracle::symbolic_hook_content(lam, tall), n));
      }
    }
  }
}
