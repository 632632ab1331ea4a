// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include "ricb/ricb.h"

#include <exception>
#include <new>
#include <string>

#include "ricb/empirical.hpp"
#include "ricb/error.hpp"
#include "ricb/optimizer.hpp"
#include "ricb/reference_tables.hpp"
#include "ricb/specfun.hpp"
#include "ricb/types.hpp"

#ifndef RICB_VERSION_STRING
#define RICB_VERSION_STRING "0.0.0"
#endif

struct ricb_config {
  ricb::OptimizerConfig cfg;
};

struct ricb_empirical {
  ricb::EmpiricalPair pair;
};

namespace {

thread_local std::string g_last_error;

ricb_status fail(ricb_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs body, mapping library exceptions to status codes.
template <typename F>
ricb_status guarded(F&& body) {
  g_last_error.clear();
  try {
    body();
    return RICB_OK;
  } catch (const ricb::DomainError& e) {
    return fail(RICB_ERR_DOMAIN, e.what());
  } catch (const ricb::NotFoundError& e) {
    return fail(RICB_ERR_NOT_FOUND, e.what());
  } catch (const ricb::ParseError& e) {
    return fail(RICB_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RICB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RICB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RICB_ERR_INTERNAL, "unknown error");
  }
}

#define RICB_REQUIRE(ptr)                                          \
  do {                                                             \
    if ((ptr) == nullptr) return fail(RICB_ERR_NULL, #ptr " is NULL"); \
  } while (0)

bool valid_kind(ricb_bound_kind kind) {
  return kind >= RICB_UPPER_SIMPLE && kind <= RICB_LOWER_LIFTED;
}

const ricb::EmpiricalEstimate& pick(const ricb_empirical* run, ricb_quantity q) {
  return q == RICB_LRIC ? run->pair.lric : run->pair.uric;
}

ricb_status special(double (*fn)(double), double x, double* out) {
  RICB_REQUIRE(out);
  return guarded([&] { *out = fn(x); });
}

}  // namespace

extern "C" {

const char* ricb_version(void) { return RICB_VERSION_STRING; }

const char* ricb_last_error(void) { return g_last_error.c_str(); }

const char* ricb_status_name(ricb_status status) {
  switch (status) {
    case RICB_OK: return "ok";
    case RICB_ERR_DOMAIN: return "domain error";
    case RICB_ERR_NOT_FOUND: return "not found";
    case RICB_ERR_PARSE: return "parse error";
    case RICB_ERR_NULL: return "null argument";
    case RICB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ricb_bound_kind_name(ricb_bound_kind kind) {
  if (!valid_kind(kind)) return "";
  return ricb::to_string(static_cast<ricb::BoundKind>(kind)).data();
}

ricb_status ricb_parse_bound_kind(const char* text, ricb_bound_kind* out) {
  RICB_REQUIRE(text);
  RICB_REQUIRE(out);
  const auto kind = ricb::parse_bound_kind(text);
  if (!kind) return fail(RICB_ERR_PARSE, (std::string("unknown bound kind '") + text + "'").c_str());
  *out = static_cast<ricb_bound_kind>(*kind);
  g_last_error.clear();
  return RICB_OK;
}

ricb_status ricb_config_create(ricb_config** out) {
  RICB_REQUIRE(out);
  return guarded([&] { *out = new ricb_config{}; });
}

void ricb_config_destroy(ricb_config* config) { delete config; }

ricb_status ricb_config_set_inner_tol(ricb_config* config, double tol) {
  RICB_REQUIRE(config);
  return guarded([&] {
    auto next = config->cfg;
    next.inner_tol = tol;
    next.validate();
    config->cfg = next;
  });
}

ricb_status ricb_config_set_outer_tol(ricb_config* config, double tol) {
  RICB_REQUIRE(config);
  return guarded([&] {
    auto next = config->cfg;
    next.outer_tol = tol;
    next.validate();
    config->cfg = next;
  });
}

ricb_status ricb_config_set_multistart(ricb_config* config, int per_axis) {
  RICB_REQUIRE(config);
  return guarded([&] {
    auto next = config->cfg;
    next.multistart_grid = per_axis;
    next.validate();
    config->cfg = next;
  });
}

ricb_status ricb_config_set_c3_range(ricb_config* config, double lo, double hi) {
  RICB_REQUIRE(config);
  return guarded([&] {
    auto next = config->cfg;
    next.c3_min = lo;
    next.c3_max = hi;
    next.validate();
    config->cfg = next;
  });
}

ricb_status ricb_config_set_max_evals(ricb_config* config, uint64_t max_evals) {
  RICB_REQUIRE(config);
  return guarded([&] {
    auto next = config->cfg;
    next.max_evals = max_evals;
    next.validate();
    config->cfg = next;
  });
}

ricb_status ricb_config_get(const ricb_config* config, double* inner_tol, double* outer_tol,
                            int* multistart, double* c3_min, double* c3_max,
                            uint64_t* max_evals) {
  const ricb::OptimizerConfig cfg = config ? config->cfg : ricb::OptimizerConfig{};
  if (inner_tol) *inner_tol = cfg.inner_tol;
  if (outer_tol) *outer_tol = cfg.outer_tol;
  if (multistart) *multistart = cfg.multistart_grid;
  if (c3_min) *c3_min = cfg.c3_min;
  if (c3_max) *c3_max = cfg.c3_max;
  if (max_evals) *max_evals = cfg.max_evals;
  g_last_error.clear();
  return RICB_OK;
}

ricb_status ricb_beta_from_rho(double alpha, double rho, double* beta) {
  RICB_REQUIRE(beta);
  return guarded([&] { *beta = ricb::ProblemShape::from_rho(alpha, rho).beta(); });
}

ricb_status ricb_bound(ricb_bound_kind kind, double alpha, double beta, const ricb_config* config,
                       ricb_bound_result* out) {
  RICB_REQUIRE(out);
  if (!valid_kind(kind)) return fail(RICB_ERR_DOMAIN, "invalid bound kind");
  return guarded([&] {
    const ricb::ProblemShape shape(alpha, beta);
    const auto r = ricb::compute_bound(static_cast<ricb::BoundKind>(kind), shape,
                                       config ? config->cfg : ricb::OptimizerConfig{});
    *out = ricb_bound_result{};
    out->value = r.value;
    out->has_params = r.params.has_value() ? 1 : 0;
    if (r.params) {
      out->c3 = r.params->c3;
      out->gamma = r.params->gamma;
      out->nu = r.params->nu;
    }
    out->converged = r.converged ? 1 : 0;
    out->evaluations = r.evaluations;
  });
}

ricb_status ricb_reference_lookup(int table_id, double alpha, double rho, const char* quantity,
                                  double* out) {
  RICB_REQUIRE(quantity);
  RICB_REQUIRE(out);
  return guarded([&] {
    *out = ricb::ReferenceTables::builtin().lookup(table_id, alpha, rho,
                                                   ricb::parse_quantity(quantity));
  });
}

ricb_status ricb_reference_find(int table_id, double alpha, double rho, const char* quantity,
                                int* found, double* out) {
  RICB_REQUIRE(quantity);
  RICB_REQUIRE(found);
  RICB_REQUIRE(out);
  return guarded([&] {
    const auto v = ricb::ReferenceTables::builtin().find(table_id, alpha, rho,
                                                         ricb::parse_quantity(quantity));
    *found = v ? 1 : 0;
    *out = v.value_or(0.0);
  });
}

size_t ricb_reference_count(void) {
  try {
    return ricb::ReferenceTables::builtin().entries().size();
  } catch (...) {
    return 0;
  }
}

ricb_status ricb_reference_entry(size_t index, int* table_id, double* alpha, double* rho,
                                 const char** quantity, double* value) {
  return guarded([&] {
    const auto entries = ricb::ReferenceTables::builtin().entries();
    if (index >= entries.size()) throw ricb::NotFoundError("reference index out of range");
    const auto& e = entries[index];
    if (table_id) *table_id = e.table_id;
    if (alpha) *alpha = e.alpha;
    if (rho) *rho = e.rho;
    if (quantity) *quantity = ricb::to_string(e.quantity).data();
    if (value) *value = e.value;
  });
}

ricb_status ricb_bt_relation(double xi_bt, int upper, double* out) {
  RICB_REQUIRE(out);
  return guarded(
      [&] { *out = ricb::bt_relation(xi_bt, upper ? ricb::Side::upper : ricb::Side::lower); });
}

ricb_status ricb_empirical_run(size_t m, size_t n, size_t k, size_t trials,
                               uint64_t support_budget, uint64_t seed, unsigned threads,
                               ricb_empirical** out) {
  RICB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto pair = ricb::empirical_ric(m, n, k, trials, support_budget, seed, threads);
    *out = new ricb_empirical{std::move(pair)};
  });
}

void ricb_empirical_destroy(ricb_empirical* run) { delete run; }

ricb_status ricb_empirical_summary(const ricb_empirical* run, ricb_quantity quantity,
                                   ricb_estimate_summary* out) {
  RICB_REQUIRE(run);
  RICB_REQUIRE(out);
  const auto& est = pick(run, quantity);
  out->mean = est.mean;
  out->stddev = est.stddev;
  out->trials = est.trials;
  out->sampled = est.mode == ricb::SupportMode::sampled ? 1 : 0;
  out->supports_per_trial = est.supports_per_trial;
  g_last_error.clear();
  return RICB_OK;
}

ricb_status ricb_empirical_per_trial(const ricb_empirical* run, ricb_quantity quantity,
                                     const double** values, size_t* count) {
  RICB_REQUIRE(run);
  RICB_REQUIRE(values);
  RICB_REQUIRE(count);
  const auto& est = pick(run, quantity);
  *values = est.per_trial.data();
  *count = est.per_trial.size();
  g_last_error.clear();
  return RICB_OK;
}

ricb_status ricb_erf(double x, double* out) { return special(&ricb::specfun::erf, x, out); }
ricb_status ricb_erfc(double x, double* out) { return special(&ricb::specfun::erfc, x, out); }
ricb_status ricb_erfcx(double x, double* out) { return special(&ricb::specfun::erfcx, x, out); }
ricb_status ricb_erfinv(double p, double* out) { return special(&ricb::specfun::erfinv, p, out); }

}  // extern "C"
