#pragma once

#include "negn/laurent.hpp"
#include "negn/partition.hpp"
#include "negn/stable_rep.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace negn {

enum class Identity {
  classic,     // dim(Y, N) = (-1)^|Y| dim(Y^T, -N)
  prop1,       // dim(D(l,t), N) = (-1)^(|l|+|t|) dim(D(t,l), -N)
  prop2,       // C(D(l,t), N) = -C(D(l^T,t^T), -N)
  z2,          // dim(D(l,t), N) = dim(D(t^T,l^T), N)
  const_term,  // constant term of C vanishes for self-dual data
};

std::string_view name(Identity id);
/// Accepts "classic", "prop1", "prop2", "z2", "const-term".
std::optional<Identity> parse_identity(std::string_view text);

enum class Verdict { holds, fails, not_applicable };

/// Outcome of one exact identity check. `lhs` is the left-hand side and
/// `rhs_transformed` the right-hand side after the sign and N -> -N
/// substitution, so the identity holds iff the two are equal.
struct CheckReport {
  Identity identity = Identity::prop1;
  StableRep subject;  // classic checks carry the diagram in subject.lam
  Verdict verdict = Verdict::fails;
  std::optional<int> sign;
  LaurentPoly lhs;
  LaurentPoly rhs_transformed;
  std::string detail;

  bool holds() const noexcept { return verdict == Verdict::holds; }
  bool failed() const noexcept { return verdict == Verdict::fails; }
};

CheckReport check_classic(const YoungDiagram& y);
CheckReport check_prop1(const StableRep& rep);
CheckReport check_prop2(const StableRep& rep);
CheckReport check_z2(const StableRep& rep);
/// Applies when lam is self-transpose and tau is empty, or when lam = tau
/// (as label sequences the tau block is then the transpose of the lam
/// block); otherwise reports Verdict::not_applicable.
CheckReport check_constant_term(const StableRep& rep);

/// Dispatches on `id`. For Identity::classic the subject's lam is checked
/// and tau must be empty (std::invalid_argument otherwise).
CheckReport run_check(Identity id, const StableRep& rep);

}  // namespace negn
