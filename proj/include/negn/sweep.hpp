#pragma once

#include "negn/duality.hpp"
#include "negn/laurent.hpp"
#include "negn/stable_rep.hpp"

#include <span>
#include <vector>

namespace negn {

/// How a sweep is executed. `serial` is the reference path; `parallel` fans
/// the independent items out over OpenMP threads and must produce the same
/// output in the same order.
enum class Backend { serial, parallel };

/// Worker cap for parallel sweeps: NEGN_THREADS if set to a positive
/// integer, otherwise the OpenMP default.
int worker_count();

/// One report per (subject, identity), subject-major.
std::vector<CheckReport> run_checks(std::span<const StableRep> subjects,
                                    std::span<const Identity> identities,
                                    Backend backend = Backend::parallel);

struct TableRow {
  StableRep rep;
  LaurentPoly dimension;
  LaurentPoly casimir;
  CheckReport prop1;
  CheckReport prop2;
  CheckReport z2;
};

std::vector<TableRow> build_table(std::span<const StableRep> reps,
                                  Backend backend = Backend::parallel);

/// Result of comparing the closed Casimir formula against the direct
/// highest-weight evaluation at one rank.
struct CasimirSample {
  StableRep rep;
  int n = 0;
  Rational formula;
  Rational direct;
  bool agree() const { return formula == direct; }
};

/// Evaluates both Casimir routes for every rep at ranks n_min .. n_min + span.
std::vector<CasimirSample> cross_validate_casimir(
    std::span<const StableRep> reps, int rank_span,
    Backend backend = Backend::parallel);

}  // namespace negn
