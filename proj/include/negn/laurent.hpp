#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace negn {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Laurent polynomial in the indeterminate N with exact rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is polynomial equality.
class LaurentPoly {
public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c) { add_term(0, c); }  // NOLINT: implicit
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT: implicit

  static LaurentPoly monomial(const Rational& coeff, int exponent);
  /// The indeterminate itself.
  static LaurentPoly N() { return monomial(1, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of N^e (zero if absent).
  Rational coefficient(int exponent) const;
  /// Highest and lowest exponents present; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  std::optional<int> lowest_exponent() const;
  /// True when no negative powers of N occur.
  bool is_polynomial() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) {
    return a *= b;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  void add_term(int exponent, const Rational& c);

  Terms terms_;
};

enum class ArithOp { add, sub, mul };

LaurentPoly poly_arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op);

/// N -> -N: the coefficient of N^e picks up (-1)^e.
LaurentPoly substitute_neg(const LaurentPoly& p);

/// Exact value at N = n. Throws std::domain_error at n = 0 when negative
/// powers are present.
Rational evaluate(const LaurentPoly& p, const Rational& n);

/// The unique polynomial of degree < points.size() through the given
/// (node, value) pairs, via exact Newton divided differences. Throws
/// std::invalid_argument on an empty input or duplicate nodes.
LaurentPoly interpolate(std::span<const std::pair<long, Rational>> points);

}  // namespace negn
