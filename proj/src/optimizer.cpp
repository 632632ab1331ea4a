// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include "ricb/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ricb/bounds_lifted.hpp"
#include "ricb/bounds_simple.hpp"
#include "ricb/error.hpp"

namespace ricb {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Multistart box for gamma - c3/2 and nu.
constexpr double kStartLo = 1e-3;
constexpr double kStartHi = 30.0;

// Keeps p = c3/(4 gamma) <= 1/2 - 1e-9 through gamma - c3/2 >= 1e-9 c3.
constexpr double kGapFloor = 1e-9;

// Log-coordinates beyond this are treated as infeasible.
constexpr double kLogBox = 50.0;

constexpr int kOuterGrid = 25;
constexpr double kWidenFactor = 4.0;

// Simplex diameter at which an inner start is considered settled.
constexpr double kInnerXtol = 1e-8;

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = std::sqrt(lo * hi);
    return out;
  }
  const double llo = std::log(lo);
  const double step = (std::log(hi) - llo) / (count - 1);
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = std::exp(llo + step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

void require_c3(double c3) {
  if (!(c3 > 0.0) || !std::isfinite(c3)) {
    std::ostringstream msg;
    msg << "minimize_inner: c3=" << c3 << " must be finite and > 0";
    throw DomainError(msg.str());
  }
}

void require_beta(double beta) {
  if (!(beta >= kBetaMin - 1e-15 && beta <= kBetaMax + 1e-15)) {
    std::ostringstream msg;
    msg << "minimize_inner: beta=" << beta << " outside [" << kBetaMin << ", " << kBetaMax << "]";
    throw DomainError(msg.str());
  }
}

// Inner objective in (u, v) coordinates.
struct InnerObjective {
  double c3;
  double beta;
  double log_gap_floor;

  struct Point {
    double gap;
    double gamma;
    double nu;
  };

  Point map(const std::array<double, 2>& x) const {
    const double gap = std::exp(std::max(x[0], log_gap_floor));
    return {gap, 0.5 * c3 + gap, std::exp(x[1])};
  }

  double operator()(const std::array<double, 2>& x) const {
    if (std::fabs(x[0]) > kLogBox || std::fabs(x[1]) > kLogBox) return kInf;
    const Point pt = map(x);
    const double value =
        pt.nu * beta + pt.gamma + log_big_i_uric_with_gap(pt.gamma, pt.nu, pt.gap / pt.gamma) / c3;
    return std::isfinite(value) ? value : kInf;
  }
};

struct OuterPoint {
  double c3 = 0.0;
  double score = kInf;  // minimised; the lower bound uses the negated value
  OptimReport inner;
};

enum class Side { upper, lower };

OuterPoint evaluate_outer(double c3, const ProblemShape& shape, const OptimizerConfig& config,
                          Side side, std::uint64_t& evals) {
  OuterPoint pt;
  pt.c3 = c3;
  pt.inner = minimize_inner(c3, shape.beta(), config);
  evals += pt.inner.evaluations;
  const double value = side == Side::upper
                           ? upper_from_inner(c3, shape.alpha(), pt.inner.best_value)
                           : lower_from_inner(c3, shape.alpha(), pt.inner.best_value);
  pt.score = side == Side::upper ? value : -value;
  if (!std::isfinite(pt.score)) pt.score = kInf;
  return pt;
}

struct GridScan {
  std::vector<double> c3;
  std::size_t best = 0;
  OuterPoint best_point;
};

GridScan scan_grid(double lo, double hi, const ProblemShape& shape, const OptimizerConfig& config,
                   Side side, std::uint64_t& evals) {
  GridScan scan;
  scan.c3 = log_grid(lo, hi, kOuterGrid);
  for (std::size_t i = 0; i < scan.c3.size(); ++i) {
    OuterPoint pt = evaluate_outer(scan.c3[i], shape, config, side, evals);
    // Strict comparison: ties keep the smaller c3.
    if (i == 0 || pt.score < scan.best_point.score) {
      scan.best = i;
      scan.best_point = std::move(pt);
    }
  }
  return scan;
}

// Parameters of the exact c3 -> 0 limit: nu_s = nu^2/(4 gamma) with
// nu = sqrt(2) erfinv(1 - beta) and gamma = tail_term / 2.
LiftedParams limit_params(double beta) {
  const double gamma = 0.5 * tail_term(beta);
  const double nu = optimal_nu(beta);
  return {0.0, gamma, nu * nu / (4.0 * gamma)};
}

BoundResult optimize_side(const ProblemShape& shape, const OptimizerConfig& config, Side side) {
  config.validate();
  std::uint64_t evals = 0;
  double lo = config.c3_min;
  double hi = config.c3_max;

  GridScan scan = scan_grid(lo, hi, shape, config, side, evals);
  const std::size_t last = scan.c3.size() - 1;
  bool at_edge = scan.best == 0 || scan.best == last;
  if (at_edge) {
    if (scan.best == 0) {
      lo /= kWidenFactor;
    } else {
      hi *= kWidenFactor;
    }
    scan = scan_grid(lo, hi, shape, config, side, evals);
    at_edge = scan.best == 0 || scan.best == last;
  }

  const double left = scan.c3[scan.best == 0 ? 0 : scan.best - 1];
  const double right = scan.c3[std::min(scan.best + 1, last)];

  OuterPoint best = scan.best_point;
  // Golden-section works on the score only; the report at the winning c3 is
  // recomputed once afterwards.
  auto score = [&](double c3) { return evaluate_outer(c3, shape, config, side, evals).score; };
  const search::LineResult line = search::golden_section(score, left, right, config.outer_tol);
  if (line.value < best.score) {
    best = evaluate_outer(line.x, shape, config, side, evals);
  }

  BoundResult result;
  result.kind = side == Side::upper ? BoundKind::upper_lifted : BoundKind::lower_lifted;
  result.value = side == Side::upper ? best.score : -best.score;
  result.params = LiftedParams{best.c3, best.inner.best_params.gamma, best.inner.best_params.nu};
  result.converged = best.inner.converged && !at_edge;
  result.evaluations = evals;

  // The c3 -> 0 limit is part of the feasible set; its value is the simple
  // bound.
  if (side == Side::upper) {
    const double limit = simple_upper(shape).value;
    if (limit < result.value) {
      result.value = limit;
      result.params = limit_params(shape.beta());
    }
  } else {
    const double limit = simple_lower(shape).value;
    if (limit > result.value) {
      result.value = limit;
      result.params = limit_params(shape.beta());
    }
  }
  return result;
}

}  // namespace

void OptimizerConfig::validate() const {
  std::ostringstream msg;
  if (!(inner_tol > 0.0) || !(outer_tol > 0.0)) {
    msg << "optimizer config: tolerances must be > 0";
  } else if (multistart_grid < 1) {
    msg << "optimizer config: multistart grid must be >= 1";
  } else if (max_evals < 1) {
    msg << "optimizer config: evaluation budget must be >= 1";
  } else if (!(c3_min > 0.0) || !(c3_min < c3_max) || !std::isfinite(c3_max)) {
    msg << "optimizer config: c3 bracket [" << c3_min << ", " << c3_max << "] is invalid";
  } else {
    return;
  }
  throw DomainError(msg.str());
}

OptimReport minimize_inner(double c3, double beta, const OptimizerConfig& config) {
  config.validate();
  require_c3(c3);
  require_beta(beta);

  const InnerObjective objective{c3, beta, std::log(kGapFloor * c3)};
  const std::vector<double> starts = log_grid(kStartLo, kStartHi, config.multistart_grid);
  const std::uint64_t seeds = starts.size() * starts.size();
  const std::uint64_t per_seed = std::max<std::uint64_t>(config.max_evals / seeds, 1);

  OptimReport report;
  report.best_value = kInf;
  std::array<double, 2> best_x{};
  bool have_best = false;

  for (double gap0 : starts) {
    for (double nu0 : starts) {
      const std::array<double, 2> x0{std::log(gap0), std::log(nu0)};
      search::SimplexResult first =
          search::nelder_mead(objective, x0, 0.5, config.inner_tol, kInnerXtol, per_seed);
      std::uint64_t used = first.evaluations;
      search::SimplexResult run = first;
      if (used < per_seed) {
        // One restart from the settled vertex guards against a collapsed
        // simplex stopping short of the minimum.
        search::SimplexResult again = search::nelder_mead(objective, first.x, 0.05,
                                                          config.inner_tol, kInnerXtol,
                                                          per_seed - used);
        used += again.evaluations;
        if (again.value <= run.value) {
          run.x = again.x;
          run.value = again.value;
        }
        run.converged = again.converged;
      } else {
        run.converged = false;
      }
      report.evaluations += used;
      ++report.restarts_used;
      if (!have_best || run.value < report.best_value) {
        have_best = true;
        report.best_value = run.value;
        report.converged = run.converged;
        best_x = run.x;
      }
    }
  }

  const InnerObjective::Point pt = objective.map(best_x);
  report.best_params = LiftedParams{c3, pt.gamma, pt.nu};
  if (!std::isfinite(report.best_value)) report.converged = false;
  return report;
}

BoundResult optimize_upper(const ProblemShape& shape, const OptimizerConfig& config) {
  return optimize_side(shape, config, Side::upper);
}

BoundResult optimize_lower(const ProblemShape& shape, const OptimizerConfig& config) {
  return optimize_side(shape, config, Side::lower);
}

BoundResult compute_bound(BoundKind kind, const ProblemShape& shape,
                          const OptimizerConfig& config) {
  switch (kind) {
    case BoundKind::upper_simple:
      return simple_upper(shape);
    case BoundKind::lower_simple:
      return simple_lower(shape);
    case BoundKind::upper_lifted:
      return optimize_upper(shape, config);
    case BoundKind::lower_lifted:
      return optimize_lower(shape, config);
  }
  throw DomainError("compute_bound: unknown bound kind");
}

namespace search {

SimplexResult nelder_mead(const std::function<double(const std::array<double, 2>&)>& f,
                          std::array<double, 2> start, double step, double ftol, double xtol,
                          std::uint64_t max_evals) {
  using Vec = std::array<double, 2>;
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  SimplexResult out;
  auto eval = [&](const Vec& x) {
    ++out.evaluations;
    const double v = f(x);
    return std::isfinite(v) ? v : kInf;
  };
  auto lerp = [](const Vec& a, const Vec& b, double t) {
    return Vec{a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
  };

  std::array<Vec, 3> pts{start, Vec{start[0] + step, start[1]}, Vec{start[0], start[1] + step}};
  std::array<double, 3> vals{};
  for (std::size_t i = 0; i < 3; ++i) vals[i] = eval(pts[i]);

  while (true) {
    // Stable order: best first; ties keep the lower index.
    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::array<Vec, 3> sp{pts[order[0]], pts[order[1]], pts[order[2]]};
    std::array<double, 3> sv{vals[order[0]], vals[order[1]], vals[order[2]]};
    pts = sp;
    vals = sv;

    double diameter = 0.0;
    for (std::size_t i = 1; i < 3; ++i) {
      diameter = std::max({diameter, std::fabs(pts[i][0] - pts[0][0]),
                           std::fabs(pts[i][1] - pts[0][1])});
    }
    const bool flat = std::isfinite(vals[2]) && (vals[2] - vals[0]) <= ftol;
    if (flat && diameter <= xtol) {
      out.converged = true;
      break;
    }
    if (out.evaluations >= max_evals) break;

    const Vec centroid{0.5 * (pts[0][0] + pts[1][0]), 0.5 * (pts[0][1] + pts[1][1])};
    const Vec reflected = lerp(centroid, pts[2], -kReflect);
    const double fr = eval(reflected);
    if (fr < vals[0]) {
      const Vec expanded = lerp(centroid, pts[2], -kExpand);
      const double fe = eval(expanded);
      if (fe < fr) {
        pts[2] = expanded;
        vals[2] = fe;
      } else {
        pts[2] = reflected;
        vals[2] = fr;
      }
      continue;
    }
    if (fr < vals[1]) {
      pts[2] = reflected;
      vals[2] = fr;
      continue;
    }
    // Contraction, outside or inside depending on the reflected value.
    const bool outside = fr < vals[2];
    const Vec contracted =
        outside ? lerp(centroid, reflected, kContract) : lerp(centroid, pts[2], kContract);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : vals[2])) {
      pts[2] = contracted;
      vals[2] = fc;
      continue;
    }
    for (std::size_t i = 1; i < 3; ++i) {
      pts[i] = lerp(pts[0], pts[i], kShrink);
      vals[i] = eval(pts[i]);
    }
  }

  out.x = pts[0];
  out.value = vals[0];
  return out;
}

LineResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  LineResult out;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  out.evaluations = 2;
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    ++out.evaluations;
  }
  if (f1 <= f2) {
    out.x = x1;
    out.value = f1;
  } else {
    out.x = x2;
    out.value = f2;
  }
  return out;
}

}  // namespace search
}  // namespace ricb
