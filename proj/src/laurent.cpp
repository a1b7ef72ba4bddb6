#include "negn/laurent.hpp"

#include <set>
#include <stdexcept>
#include <vector>

namespace negn {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) {
    Integer z;
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start ||
        s.find_first_not_of("0123456789", start) != std::string::npos ||
        z.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0)
      throw std::invalid_argument("malformed rational '" + text + "'");
    return z;
  };
  Integer num = parse_int(text.substr(0, slash));
  Integer den = slash == std::string::npos ? Integer(1)
                                            : parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> LaurentPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<int> LaurentPoly::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly product;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) product.add_term(e1 + e2, c1 * c2);
  *this = std::move(product);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly poly_arith(const LaurentPoly& p, const LaurentPoly& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

LaurentPoly substitute_neg(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms())
    out += LaurentPoly::monomial(e % 2 == 0 ? c : Rational(-c), e);
  return out;
}

Rational evaluate(const LaurentPoly& p, const Rational& n) {
  if (n == 0 && !p.is_polynomial())
    throw std::domain_error("evaluation at N = 0 of a term with negative power");
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational power = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) power *= n;
    total += e < 0 ? Rational(c / power) : Rational(c * power);
  }
  return total;
}

LaurentPoly interpolate(std::span<const std::pair<long, Rational>> points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs a point");
  std::set<long> seen;
  for (const auto& pt : points)
    if (!seen.insert(pt.first).second)
      throw std::invalid_argument("duplicate interpolation node " +
                                  std::to_string(pt.first));

  // In-place divided-difference table: coef[i] = f[x_0, ..., x_i].
  const std::size_t m = points.size();
  std::vector<Rational> coef(m);
  for (std::size_t i = 0; i < m; ++i) coef[i] = points[i].second;
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) /
                Rational(points[i].first - points[i - level].first);

  // Horner on the Newton form.
  LaurentPoly result = coef[m - 1];
  for (std::size_t i = m - 1; i-- > 0;) {
    result *= LaurentPoly::N() - LaurentPoly(points[i].first);
    result += coef[i];
  }
  return result;
}

}  // namespace negn
