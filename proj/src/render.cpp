#include "negn/render.hpp"

#include <stdexcept>

namespace negn {

namespace {

struct Style {
  std::string plus;
  std::string minus;
  std::string (*power)(int);
  std::string (*fraction)(const std::string&, const std::string&);
  std::string (*scaled)(const Rational&, const std::string&);
};

std::string text_power(int e) {
  return e == 1 ? "N" : "N^" + std::to_string(e);
}
std::string text_fraction(const std::string& num, const std::string& den) {
  const bool bare = den.front() == 'N' ||
                    den.find_first_not_of("0123456789") == std::string::npos;
  return num + "/" + (bare ? den : "(" + den + ")");
}
std::string text_scaled(const Rational& c, const std::string& mono) {
  if (c == 1) return mono;
  if (c.get_den() == 1) return c.get_num().get_str() + mono;
  return "(" + to_string(c) + ")" + mono;
}

std::string latex_power(int e) {
  return e == 1 ? "N" : "N^{" + std::to_string(e) + "}";
}
std::string latex_fraction(const std::string& num, const std::string& den) {
  return "\\frac{" + num + "}{" + den + "}";
}
std::string latex_scaled(const Rational& c, const std::string& mono) {
  if (c == 1) return mono;
  if (c.get_den() == 1) return c.get_num().get_str() + mono;
  return latex_fraction(c.get_num().get_str(), c.get_den().get_str()) + mono;
}

// Renders a single term with nonnegative coefficient `c`.
std::string render_term(const Style& s, const Rational& c, int e) {
  if (e == 0) {
    if (c.get_den() == 1) return c.get_num().get_str();
    return s.fraction(c.get_num().get_str(), c.get_den().get_str());
  }
  if (e > 0) return s.scaled(c, s.power(e));
  std::string den = s.power(-e);
  if (c.get_den() != 1) den = c.get_den().get_str() + den;
  return s.fraction(c.get_num().get_str(), den);
}

std::string render(const Style& s, const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? s.minus : s.plus;
    out += render_term(s, abs(c), e);
  }
  return out;
}

const Style kText{" + ", " - ", text_power, text_fraction, text_scaled};
const Style kLatex{"+", "-", latex_power, latex_fraction, latex_scaled};

Json diagram_json(const YoungDiagram& y) { return Json(y.rows()); }

YoungDiagram diagram_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("diagram must be an array");
  std::vector<int> rows;
  for (const auto& entry : j) {
    if (!entry.is_number_integer())
      throw std::invalid_argument("diagram entries must be integers");
    rows.push_back(entry.get<int>());
  }
  return YoungDiagram(std::move(rows));
}

}  // namespace

std::string to_text(const LaurentPoly& p) { return render(kText, p); }

std::string to_latex(const LaurentPoly& p) { return render(kLatex, p); }

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out[std::to_string(it->first)] = to_string(it->second);
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object())
    throw std::invalid_argument("polynomial must be a JSON object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string())
      throw std::invalid_argument("coefficient must be a string");
    std::size_t used = 0;
    int exponent = 0;
    try {
      exponent = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != key.size())
      throw std::invalid_argument("malformed exponent key '" + key + "'");
    p += LaurentPoly::monomial(parse_rational(value.get<std::string>()),
                               exponent);
  }
  return p;
}

Json to_json(const YoungDiagram& y) { return diagram_json(y); }

Json to_json(const StableRep& rep) {
  return Json{{"lambda", diagram_json(rep.lam)}, {"tau", diagram_json(rep.tau)}};
}

StableRep rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("lambda") || !j.contains("tau"))
    throw std::invalid_argument("expected {\"lambda\":[...],\"tau\":[...]}");
  return {diagram_from_json(j.at("lambda")), diagram_from_json(j.at("tau"))};
}

Json to_json(const CheckReport& report) {
  Json out;
  out["identity"] = std::string(name(report.identity));
  out["lambda"] = diagram_json(report.subject.lam);
  out["tau"] = diagram_json(report.subject.tau);
  if (report.verdict == Verdict::not_applicable)
    out["holds"] = nullptr;
  else
    out["holds"] = report.holds();
  if (report.sign)
    out["sign"] = *report.sign;
  else
    out["sign"] = nullptr;
  out["lhs"] = to_json(report.lhs);
  out["rhs_transformed"] = to_json(report.rhs_transformed);
  out["detail"] = report.detail;
  return out;
}

std::string to_text(const CheckReport& report) {
  std::string subject = report.identity == Identity::classic
                            ? "Y=" + to_string(report.subject.lam)
                            : to_string(report.subject);
  std::string line = std::string(name(report.identity)) + " " + subject + ": ";
  switch (report.verdict) {
    case Verdict::holds: line += "holds"; break;
    case Verdict::fails: line += "FAILS"; break;
    case Verdict::not_applicable: return line + report.detail;
  }
  if (report.sign) line += ", sign " + std::string(*report.sign > 0 ? "+1" : "-1");
  line += "; lhs = " + to_text(report.lhs) +
          ", rhs = " + to_text(report.rhs_transformed);
  return line;
}

}  // namespace negn
