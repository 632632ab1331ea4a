// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#include "ricb/empirical.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "ricb/error.hpp"
#include "ricb/philox.hpp"

namespace ricb {
namespace {

__extension__ using u128 = unsigned __int128;

// Domain tag separating support draws from matrix entries under one seed.
constexpr std::uint32_t kSupportDomain = 0x9E3779B9u;

std::uint32_t lo32(std::uint64_t x) { return static_cast<std::uint32_t>(x); }
std::uint32_t hi32(std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); }

// Gram matrix G = A^T A, n x n, row-major.
std::vector<double> gram(const Matrix& a) {
  const std::size_t n = a.cols();
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ci = a.column(i);
    for (std::size_t j = i; j < n; ++j) {
      const auto cj = a.column(j);
      double s = 0.0;
      for (std::size_t r = 0; r < ci.size(); ++r) s += ci[r] * cj[r];
      g[i * n + j] = s;
      g[j * n + i] = s;
    }
  }
  return g;
}

// Extreme eigenvalues of the principal submatrix G[idx, idx].
std::pair<double, double> extreme_eigs(const std::vector<double>& g, std::size_t n,
                                       std::span<const std::size_t> idx) {
  const std::size_t k = idx.size();
  if (k == 1) {
    const double v = g[idx[0] * n + idx[0]];
    return {v, v};
  }
  std::vector<double> sub(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sub[i * k + j] = g[idx[i] * n + idx[j]];
  const auto eig = symmetric_eigenvalues(std::move(sub), k);
  return {eig.front(), eig.back()};
}

double sigma_from_eig(double lambda) { return std::sqrt(std::max(lambda, 0.0)); }

// Floyd's algorithm for one uniform k-subset of {0..n-1}; draw `index` of the
// (seed, trial) sequence.
std::vector<std::size_t> draw_support(std::size_t n, std::size_t k, std::uint64_t index,
                                      const philox::Key& key, std::uint64_t trial) {
  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  std::uint32_t step = 0;
  for (std::size_t j = n - k; j < n; ++j, ++step) {
    const philox::Counter ctr{step, lo32(index), hi32(index), lo32(trial)};
    const auto t = static_cast<std::size_t>(philox::uniform_below(ctr, key, j + 1));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
      chosen.push_back(t);
    else
      chosen.push_back(j);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

void validate_dims(std::size_t m, std::size_t n, std::size_t k) {
  if (!(0 < k && k < m && m < n)) {
    throw DomainError("infeasible dimensions: need 0 < k < m < n, got m=" + std::to_string(m) +
                      " n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

EmpiricalEstimate aggregate(RicQuantity q, std::vector<double> values, SupportMode mode,
                            std::uint64_t supports) {
  EmpiricalEstimate est;
  est.quantity = q;
  est.trials = values.size();
  est.mode = mode;
  est.supports_per_trial = supports;
  double sum = 0.0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    est.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  est.per_trial = std::move(values);
  return est;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::scaled(double factor) const {
  Matrix out = *this;
  for (double& v : out.data_) v *= factor;
  return out;
}

GaussianMatrix sample_matrix(std::size_t m, std::size_t n, std::uint64_t seed,
                             std::uint64_t trial) {
  if (m == 0 || m >= n) {
    throw DomainError("sample_matrix needs 0 < m < n, got m=" + std::to_string(m) +
                      " n=" + std::to_string(n));
  }
  GaussianMatrix g{Matrix(m, n), seed, trial};
  const philox::Key key = philox::make_key(seed);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < m; ++r) {
      const philox::Counter ctr{static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(r),
                                lo32(trial), hi32(trial)};
      g.entries(r, c) = philox::normal(ctr, key);
    }
  }
  return g;
}

SupportSet::SupportSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw DomainError("support must be non-empty");
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1])
      throw DomainError("support indices must be strictly increasing");
  }
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t k) {
  if (a.size() != k * k) throw DomainError("symmetric_eigenvalues: size mismatch");
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * k + j]; };

  double total = 0.0;
  for (double v : a) total += v * v;

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = p + 1; q < k; ++q) off += at(p, q) * at(p, q);
    if (off <= 1e-32 * total || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (std::size_t r = 0; r < k; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
      }
    }
  }

  std::vector<double> eig(k);
  for (std::size_t i = 0; i < k; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

SingularPair extremal_singular(const Matrix& a, const SupportSet& support) {
  const auto idx = support.indices();
  if (idx.back() >= a.cols() || idx.size() > a.rows()) {
    throw DomainError("support does not fit a " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " matrix");
  }
  const std::size_t k = idx.size();
  std::vector<double> sub(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto ci = a.column(idx[i]);
    for (std::size_t j = i; j < k; ++j) {
      const auto cj = a.column(idx[j]);
      double s = 0.0;
      for (std::size_t r = 0; r < ci.size(); ++r) s += ci[r] * cj[r];
      sub[i * k + j] = s;
      sub[j * k + i] = s;
    }
  }
  const auto eig = symmetric_eigenvalues(std::move(sub), k);
  return {sigma_from_eig(eig.front()), sigma_from_eig(eig.back())};
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(r);
}

std::string_view to_string(RicQuantity q) noexcept {
  return q == RicQuantity::uric ? "uric" : "lric";
}

std::string_view to_string(SupportMode mode) noexcept {
  return mode == SupportMode::exhaustive ? "exhaustive" : "sampled";
}

std::vector<SupportSet> sampled_supports(std::size_t n, std::size_t k, std::uint64_t count,
                                         std::uint64_t seed, std::uint64_t trial) {
  if (k == 0 || k > n) throw DomainError("sampled_supports needs 0 < k <= n");
  if (count > binomial(n, k)) throw DomainError("more distinct supports requested than exist");
  const philox::Key key = philox::make_key(seed, kSupportDomain);
  std::set<std::vector<std::size_t>> seen;
  std::vector<SupportSet> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t draw = 0; out.size() < count; ++draw) {
    auto s = draw_support(n, k, draw, key, trial);
    if (seen.insert(s).second) out.emplace_back(std::move(s));
  }
  return out;
}

TrialExtremes trial_extremes(const Matrix& a, std::size_t k, std::uint64_t support_budget,
                             std::uint64_t seed, std::uint64_t trial) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  validate_dims(m, n, k);
  if (support_budget < 1) throw DomainError("support budget must be at least 1");

  const auto g = gram(a);
  double lam_max = 0.0;
  double lam_min = std::numeric_limits<double>::infinity();
  auto visit = [&](std::span<const std::size_t> idx) {
    const auto [lo, hi] = extreme_eigs(g, n, idx);
    lam_max = std::max(lam_max, hi);
    lam_min = std::min(lam_min, lo);
  };

  TrialExtremes out;
  const std::uint64_t total = binomial(n, k);
  if (total <= support_budget) {
    out.mode = SupportMode::exhaustive;
    out.supports = total;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      visit(idx);
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    out.mode = SupportMode::sampled;
    out.supports = support_budget;
    for (const auto& s : sampled_supports(n, k, support_budget, seed, trial)) visit(s.indices());
  }

  const double root_m = std::sqrt(static_cast<double>(m));
  out.uric = sigma_from_eig(lam_max) / root_m;
  out.lric = sigma_from_eig(lam_min) / root_m;
  return out;
}

EmpiricalPair empirical_ric(std::size_t m, std::size_t n, std::size_t k, std::size_t trials,
                            std::uint64_t support_budget, std::uint64_t seed, unsigned threads) {
  validate_dims(m, n, k);
  if (trials < 1) throw DomainError("trials must be at least 1");
  if (support_budget < 1) throw DomainError("support budget must be at least 1");

  std::vector<TrialExtremes> results(trials);
  auto run_trial = [&](std::size_t t) {
    const auto mat = sample_matrix(m, n, seed, t);
    results[t] = trial_extremes(mat.entries, k, support_budget, seed, t);
  };

  const auto workers = std::min<std::size_t>(std::max(threads, 1u), trials);
  if (workers <= 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < trials; t = next++) {
          try {
            run_trial(t);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<double> uric(trials), lric(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    uric[t] = results[t].uric;
    lric[t] = results[t].lric;
  }
  const SupportMode mode = results.front().mode;
  const std::uint64_t supports = results.front().supports;
  return {aggregate(RicQuantity::uric, std::move(uric), mode, supports),
          aggregate(RicQuantity::lric, std::move(lric), mode, supports)};
}

}  // namespace ricb
