#pragma once

#include "negn/duality.hpp"
#include "negn/laurent.hpp"
#include "negn/partition.hpp"
#include "negn/stable_rep.hpp"

#include <json.hpp>

#include <string>

namespace negn {

using Json = nlohmann::ordered_json;

/// Plain-text form, descending exponents: "N^2 - 1", "2N", "3N - 9/N",
/// "(1/2)N^2 + (1/2)N". The zero polynomial renders as "0".
std::string to_text(const LaurentPoly& p);

/// LaTeX form, descending exponents, no spaces: "N^{2}-1", "3N-\frac{9}{N}".
std::string to_latex(const LaurentPoly& p);

/// {"2":"1","0":"-1"}: exponent keys in descending order, coefficient
/// strings "p" or "p/q".
Json to_json(const LaurentPoly& p);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
LaurentPoly poly_from_json(const Json& j);

Json to_json(const YoungDiagram& y);
/// {"lambda":[4,2,1],"tau":[3,1]}
Json to_json(const StableRep& rep);
/// Reads the form produced by to_json(StableRep). Throws
/// std::invalid_argument on malformed input.
StableRep rep_from_json(const Json& j);

/// {"identity":..., "lambda":..., "tau":..., "holds":..., "sign":...,
///  "lhs":{...}, "rhs_transformed":{...}, "detail":...}
/// "holds" and "sign" are null when not applicable.
Json to_json(const CheckReport& report);

/// One-line human-readable summary of a report.
std::string to_text(const CheckReport& report);

}  // namespace negn
