#include "negn/sweep.hpp"

#include "negn/casimir.hpp"
#include "negn/dimension.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

namespace negn {

int worker_count() {
  if (const char* env = std::getenv("NEGN_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

namespace {

// Fills out[i] = fn(i) for i in [0, count). The parallel path writes each
// slot from exactly one thread, so output order matches the serial path.
template <typename T, typename Fn>
std::vector<T> map_indexed(std::size_t count, Backend backend, Fn fn) {
  std::vector<T> out(count);
  if (backend == Backend::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }

  std::exception_ptr error;
  std::mutex error_mutex;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

std::vector<CheckReport> run_checks(std::span<const StableRep> subjects,
                                    std::span<const Identity> identities,
                                    Backend backend) {
  const std::size_t per = identities.size();
  return map_indexed<CheckReport>(
      subjects.size() * per, backend, [&](std::size_t i) {
        return run_check(identities[i % per], subjects[i / per]);
      });
}

std::vector<TableRow> build_table(std::span<const StableRep> reps,
                                  Backend backend) {
  return map_indexed<TableRow>(reps.size(), backend, [&](std::size_t i) {
    const StableRep& rep = reps[i];
    return TableRow{rep,
                    dim_polynomial(rep),
                    casimir_formula(rep),
                    check_prop1(rep),
                    check_prop2(rep),
                    check_z2(rep)};
  });
}

std::vector<CasimirSample> cross_validate_casimir(
    std::span<const StableRep> reps, int rank_span, Backend backend) {
  const std::size_t per = static_cast<std::size_t>(rank_span) + 1;
  return map_indexed<CasimirSample>(
      reps.size() * per, backend, [&](std::size_t i) {
        const StableRep& rep = reps[i / per];
        const int n = n_min(rep) + static_cast<int>(i % per);
        return CasimirSample{rep, n, evaluate(casimir_formula(rep), n),
                             casimir_direct(realize(rep, n))};
      });
}

}  // namespace negn
