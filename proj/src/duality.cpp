#include "negn/duality.hpp"

#include "negn/casimir.hpp"
#include "negn/dimension.hpp"

#include <stdexcept>

namespace negn {

std::string_view name(Identity id) {
  switch (id) {
    case Identity::classic: return "classic";
    case Identity::prop1: return "prop1";
    case Identity::prop2: return "prop2";
    case Identity::z2: return "z2";
    case Identity::const_term: return "const-term";
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view text) {
  for (auto id : {Identity::classic, Identity::prop1, Identity::prop2,
                  Identity::z2, Identity::const_term})
    if (name(id) == text) return id;
  return std::nullopt;
}

namespace {

int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

CheckReport compare(Identity id, StableRep subject, std::optional<int> sign,
                    LaurentPoly lhs, LaurentPoly rhs, std::string detail) {
  CheckReport report;
  report.identity = id;
  report.subject = std::move(subject);
  report.sign = sign;
  report.verdict = lhs == rhs ? Verdict::holds : Verdict::fails;
  report.lhs = std::move(lhs);
  report.rhs_transformed = std::move(rhs);
  report.detail = std::move(detail);
  return report;
}

}  // namespace

CheckReport check_classic(const YoungDiagram& y) {
  const int sign = parity_sign(area(y));
  const YoungDiagram yt = transpose(y);
  return compare(Identity::classic, StableRep{y, {}}, sign, dim_polynomial(y),
                 LaurentPoly(sign) * substitute_neg(dim_polynomial(yt)),
                 "partner diagram " + to_string(yt));
}

CheckReport check_prop1(const StableRep& rep) {
  const int sign = parity_sign(area(rep.lam) + area(rep.tau));
  const StableRep partner = swap(rep);
  return compare(Identity::prop1, rep, sign, dim_polynomial(rep),
                 LaurentPoly(sign) * substitute_neg(dim_polynomial(partner)),
                 "partner " + to_string(partner));
}

CheckReport check_prop2(const StableRep& rep) {
  const StableRep partner = transpose_both(rep);
  return compare(Identity::prop2, rep, -1, casimir_formula(rep),
                 -substitute_neg(casimir_formula(partner)),
                 "partner " + to_string(partner));
}

CheckReport check_z2(const StableRep& rep) {
  const StableRep partner = z2_partner(rep);
  return compare(Identity::z2, rep, 1, dim_polynomial(rep),
                 dim_polynomial(partner), "partner " + to_string(partner));
}

CheckReport check_constant_term(const StableRep& rep) {
  const bool self_dual = rep.tau.empty() && rep.lam == transpose(rep.lam);
  // tau enters the eigenvalue through its row multiplicities, so the
  // antisymmetric constant parts of lam and tau cancel when lam == tau
  const bool mirrored = rep.lam == rep.tau;
  if (!self_dual && !mirrored) {
    CheckReport report;
    report.identity = Identity::const_term;
    report.subject = rep;
    report.verdict = Verdict::not_applicable;
    report.detail = "not applicable: lambda is neither self-transpose with "
                    "empty tau nor equal to tau";
    return report;
  }
  return compare(Identity::const_term, rep, std::nullopt,
                 casimir_formula(rep).coefficient(0), LaurentPoly{},
                 self_dual ? "self-transpose lambda, empty tau"
                           : "lambda equals tau");
}

CheckReport run_check(Identity id, const StableRep& rep) {
  switch (id) {
    case Identity::classic:
      if (!rep.tau.empty())
        throw std::invalid_argument("classic duality takes a single diagram");
      return check_classic(rep.lam);
    case Identity::prop1: return check_prop1(rep);
    case Identity::prop2: return check_prop2(rep);
    case Identity::z2: return check_z2(rep);
    case Identity::const_term: return check_constant_term(rep);
  }
  throw std::invalid_argument("unknown identity");
}

}  // namespace negn
