#include "negn/cli.hpp"

#include "negn/casimir.hpp"
#include "negn/corpus.hpp"
#include "negn/dimension.hpp"
#include "negn/duality.hpp"
#include "negn/render.hpp"
#include "negn/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace negn {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { text, json, latex };

struct RepOptions {
  std::optional<std::string> lambda;
  std::optional<std::string> tau;
};

void add_rep_options(CLI::App* cmd, RepOptions& opts) {
  cmd->add_option("--lambda", opts.lambda,
                  "lambda diagram as row lengths, e.g. 4,2,1 (\"\" = empty)");
  cmd->add_option("--tau", opts.tau,
                  "tau diagram as row lengths, e.g. 3,1 (\"\" = empty)");
}

void add_format_option(CLI::App* cmd, Format& format) {
  cmd->add_option("--format", format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text},
                                        {"json", Format::json},
                                        {"latex", Format::latex}},
          CLI::ignore_case));
}

YoungDiagram parse_flag(const std::optional<std::string>& text,
                        const char* flag) {
  if (!text) throw UsageError(std::string("missing --") + flag);
  try {
    return parse_partition(*text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + flag + ": " + e.what());
  }
}

StableRep parse_rep(const RepOptions& opts) {
  return {parse_flag(opts.lambda, "lambda"), parse_flag(opts.tau, "tau")};
}

void require_rank(const StableRep& rep, int n) {
  if (n < n_min(rep))
    throw UsageError("--n " + std::to_string(n) + " is below n_min = " +
                     std::to_string(n_min(rep)) + " for " + to_string(rep));
}

std::string render_rational(const Rational& q, Format format) {
  if (format == Format::latex && q.get_den() != 1)
    return (q < 0 ? "-" : "") + std::string("\\frac{") +
           Rational(abs(q)).get_num().get_str() + "}{" + q.get_den().get_str() + "}";
  return to_string(q);
}

std::string render_poly(const LaurentPoly& p, Format format) {
  switch (format) {
    case Format::text: return to_text(p);
    case Format::latex: return to_latex(p);
    case Format::json: return to_json(p).dump();
  }
  return to_text(p);
}

std::string diagram_cell(const YoungDiagram& y) {
  return "(" + to_string(y) + ")";
}

// --- dim ------------------------------------------------------------------

struct ValueOptions {
  RepOptions rep;
  std::optional<int> n;
  bool symbolic = false;
  Format format = Format::text;
};

void check_mode(const ValueOptions& opts) {
  if (opts.n.has_value() == opts.symbolic)
    throw UsageError("give exactly one of --n or --symbolic");
}

int cmd_dim(const ValueOptions& opts, std::ostream& out) {
  check_mode(opts);
  const StableRep rep = parse_rep(opts.rep);
  if (opts.symbolic) {
    const LaurentPoly p = dim_polynomial(rep);
    if (opts.format == Format::json) {
      Json j = to_json(rep);
      j["polynomial"] = to_json(p);
      j["degree"] = p.degree().value_or(0);
      j["leading_coefficient"] = to_string(p.coefficient(p.degree().value_or(0)));
      out << j.dump() << '\n';
    } else {
      out << render_poly(p, opts.format) << '\n';
    }
    return kOk;
  }
  require_rank(rep, *opts.n);
  const Integer d = dim_stable(rep, *opts.n);
  if (opts.format == Format::json) {
    Json j = to_json(rep);
    j["n"] = *opts.n;
    j["dimension"] = d.get_str();
    out << j.dump() << '\n';
  } else {
    out << d.get_str() << '\n';
  }
  return kOk;
}

// --- casimir --------------------------------------------------------------

int cmd_casimir(const ValueOptions& opts, std::ostream& out) {
  check_mode(opts);
  const StableRep rep = parse_rep(opts.rep);
  const LaurentPoly formula = casimir_formula(rep);
  if (opts.symbolic) {
    if (opts.format == Format::json) {
      Json j = to_json(rep);
      j["polynomial"] = to_json(formula);
      out << j.dump() << '\n';
    } else {
      out << render_poly(formula, opts.format) << '\n';
    }
    return kOk;
  }
  require_rank(rep, *opts.n);
  const Rational value = evaluate(formula, *opts.n);
  const Rational direct = casimir_direct(realize(rep, *opts.n));
  const bool agree = value == direct;
  switch (opts.format) {
    case Format::json: {
      Json j = to_json(rep);
      j["n"] = *opts.n;
      j["value"] = to_string(value);
      j["direct"] = to_string(direct);
      j["agree"] = agree;
      out << j.dump() << '\n';
      break;
    }
    case Format::text:
    case Format::latex:
      out << render_rational(value, opts.format)
          << " (direct: " << render_rational(direct, opts.format) << ", "
          << (agree ? "agree" : "DISAGREE") << ")\n";
      break;
  }
  return agree ? kOk : kIdentityFailed;
}

// --- verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string identity;
  RepOptions rep;
  bool random = false;
  std::uint64_t seed = 42;
  int max_area = 5;
  int count = 50;
  Format format = Format::text;
};

std::string latex_row(const CheckReport& r) {
  std::string verdict = r.verdict == Verdict::holds   ? "holds"
                        : r.verdict == Verdict::fails ? "fails"
                                                      : "n/a";
  return std::string(name(r.identity)) + " & " + diagram_cell(r.subject.lam) +
         " & " + diagram_cell(r.subject.tau) + " & " + verdict + " & $" +
         to_latex(r.lhs) + "$ & $" + to_latex(r.rhs_transformed) + "$ \\\\";
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  std::vector<Identity> identities;
  if (opts.identity == "all") {
    identities = {Identity::prop1, Identity::prop2, Identity::z2};
  } else if (auto id = parse_identity(opts.identity)) {
    identities = {*id};
  } else {
    throw UsageError("unknown identity '" + opts.identity +
                     "' (expected prop1, prop2, z2, classic, const-term, all)");
  }
  const bool classic = identities.front() == Identity::classic;

  std::vector<StableRep> subjects;
  if (opts.random) {
    if (opts.rep.lambda || opts.rep.tau)
      throw UsageError("--random cannot be combined with --lambda/--tau");
    if (opts.max_area < 0 || opts.count < 0)
      throw UsageError("--max-area and --count must be nonnegative");
    subjects = random_corpus(opts.seed, opts.max_area, opts.count);
    if (classic)
      for (auto& s : subjects) s.tau = {};
  } else if (classic) {
    StableRep rep{parse_flag(opts.rep.lambda, "lambda"), {}};
    if (opts.rep.tau && !parse_flag(opts.rep.tau, "tau").empty())
      throw UsageError("classic duality takes a single diagram; drop --tau");
    subjects.push_back(std::move(rep));
  } else {
    subjects.push_back(parse_rep(opts.rep));
  }

  const auto reports = run_checks(subjects, identities);
  std::size_t holds = 0, fails = 0, skipped = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::holds) ++holds;
    if (r.verdict == Verdict::fails) ++fails;
    if (r.verdict == Verdict::not_applicable) ++skipped;
  }

  switch (opts.format) {
    case Format::json: {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      Json j;
      j["reports"] = std::move(list);
      j["summary"] = Json{{"total", reports.size()},
                          {"holds", holds},
                          {"fails", fails},
                          {"not_applicable", skipped}};
      out << j.dump() << '\n';
      break;
    }
    case Format::latex:
      out << "\\begin{tabular}{llllll}\n"
          << "identity & $\\lambda$ & $\\tau$ & result & lhs & rhs \\\\\n"
          << "\\hline\n";
      for (const auto& r : reports) out << latex_row(r) << '\n';
      out << "\\end{tabular}\n";
      break;
    case Format::text:
      for (const auto& r : reports) out << to_text(r) << '\n';
      out << "summary: " << reports.size() << " checks, " << holds << " hold, "
          << fails << " fail, " << skipped << " not applicable\n";
      break;
  }
  return fails == 0 ? kOk : kIdentityFailed;
}

// --- table ----------------------------------------------------------------

struct TableOptions {
  int max_area = 2;
  Format format = Format::text;
};

const char* mark(const CheckReport& r) { return r.holds() ? "ok" : "FAIL"; }

int cmd_table(const TableOptions& opts, std::ostream& out) {
  if (opts.max_area < 0) throw UsageError("--max-area must be nonnegative");
  const auto reps = exhaustive_pairs(opts.max_area);
  const auto rows = build_table(reps);
  bool all_hold = true;
  for (const auto& row : rows)
    all_hold = all_hold && row.prop1.holds() && row.prop2.holds() &&
               row.z2.holds();

  switch (opts.format) {
    case Format::json: {
      Json list = Json::array();
      for (const auto& row : rows) {
        Json j = to_json(row.rep);
        j["dimension"] = to_json(row.dimension);
        j["casimir"] = to_json(row.casimir);
        j["prop1"] = row.prop1.holds();
        j["prop2"] = row.prop2.holds();
        j["z2"] = row.z2.holds();
        list.push_back(std::move(j));
      }
      out << Json{{"rows", std::move(list)}}.dump() << '\n';
      break;
    }
    case Format::latex:
      out << "\\begin{tabular}{llllccc}\n"
          << "$\\lambda$ & $\\tau$ & $\\dim$ & $C_2$ & Prop.~1 & Prop.~2 & "
             "$Z_2$ \\\\\n\\hline\n";
      for (const auto& row : rows)
        out << diagram_cell(row.rep.lam) << " & " << diagram_cell(row.rep.tau)
            << " & $" << to_latex(row.dimension) << "$ & $"
            << to_latex(row.casimir) << "$ & " << mark(row.prop1) << " & "
            << mark(row.prop2) << " & " << mark(row.z2) << " \\\\\n";
      out << "\\end{tabular}\n";
      break;
    case Format::text:
      out << "lambda | tau | dim | casimir | prop1 | prop2 | z2\n";
      for (const auto& row : rows)
        out << diagram_cell(row.rep.lam) << " | " << diagram_cell(row.rep.tau)
            << " | " << to_text(row.dimension) << " | "
            << to_text(row.casimir) << " | " << mark(row.prop1) << " | "
            << mark(row.prop2) << " | " << mark(row.z2) << '\n';
      break;
  }
  return all_hold ? kOk : kIdentityFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact dimensions, Casimir eigenvalues and N <-> -N duality "
               "checks for SU(N) stable sequences D(lambda, tau)",
               "negn"};
  app.require_subcommand(1);

  ValueOptions dim_opts;
  auto* dim = app.add_subcommand("dim", "dimension of D(lambda, tau)");
  add_rep_options(dim, dim_opts.rep);
  dim->add_option("--n", dim_opts.n, "rank N");
  dim->add_flag("--symbolic", dim_opts.symbolic, "polynomial in N");
  add_format_option(dim, dim_opts.format);

  ValueOptions cas_opts;
  auto* casimir =
      app.add_subcommand("casimir", "second-order Casimir of D(lambda, tau)");
  add_rep_options(casimir, cas_opts.rep);
  casimir->add_option("--n", cas_opts.n, "rank N");
  casimir->add_flag("--symbolic", cas_opts.symbolic, "Laurent polynomial in N");
  add_format_option(casimir, cas_opts.format);

  VerifyOptions ver_opts;
  auto* verify = app.add_subcommand("verify", "check duality identities");
  verify
      ->add_option("identity", ver_opts.identity,
                   "prop1, prop2, z2, classic, const-term or all")
      ->required();
  add_rep_options(verify, ver_opts.rep);
  verify->add_flag("--random", ver_opts.random, "use a seeded random corpus");
  verify->add_option("--seed", ver_opts.seed, "corpus seed");
  verify->add_option("--max-area", ver_opts.max_area, "largest diagram area");
  verify->add_option("--count", ver_opts.count, "number of random pairs");
  add_format_option(verify, ver_opts.format);

  TableOptions table_opts;
  auto* table = app.add_subcommand("table", "all pairs up to an area bound");
  table->add_option("--max-area", table_opts.max_area, "largest diagram area");
  add_format_option(table, table_opts.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*dim) return cmd_dim(dim_opts, out);
    if (*casimir) return cmd_casimir(cas_opts, out);
    if (*verify) return cmd_verify(ver_opts, out);
    if (*table) return cmd_table(table_opts, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace negn
