// Copyright 2026 The ricbounds Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

// Finite-n oracle for the restricted isometry constants.
//
// For an m x n matrix A with i.i.d. N(0,1) entries, the per-matrix extremes
// are the largest and smallest singular values over all m x k column
// submatrices, divided by sqrt(m).  Small problems enumerate every support;
// larger ones evaluate a deterministic pseudo-random subset of supports, which
// can only under-estimate the upper extreme and over-estimate the lower one.

namespace ricb {

/// Dense column-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[c * rows_ + r]; }
  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[c * rows_ + r]; }

  std::span<const double> column(std::size_t c) const noexcept {
    return {data_.data() + c * rows_, rows_};
  }

  Matrix scaled(double factor) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct GaussianMatrix {
  Matrix entries;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

/// Entry (r, c) is a function of (seed, trial, r, c) only.  Requires
/// 0 < m < n.
GaussianMatrix sample_matrix(std::size_t m, std::size_t n, std::uint64_t seed,
                             std::uint64_t trial = 0);

/// Strictly increasing column indices (0-based).
class SupportSet {
 public:
  explicit SupportSet(std::vector<std::size_t> indices);

  std::span<const std::size_t> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }

 private:
  std::vector<std::size_t> indices_;
};

struct SingularPair {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

/// Extreme singular values of the column submatrix A[:, support], from the
/// eigenvalues of its Gram matrix.
SingularPair extremal_singular(const Matrix& a, const SupportSet& support);

/// Eigenvalues of a symmetric k x k matrix (row-major), ascending, by cyclic
/// Jacobi rotations.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t k);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

enum class RicQuantity { uric, lric };
enum class SupportMode { exhaustive, sampled };

std::string_view to_string(RicQuantity q) noexcept;
std::string_view to_string(SupportMode mode) noexcept;

struct EmpiricalEstimate {
  RicQuantity quantity = RicQuantity::uric;
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation across trials
  std::size_t trials = 0;
  SupportMode mode = SupportMode::exhaustive;
  std::uint64_t supports_per_trial = 0;
  std::vector<double> per_trial;
};

struct EmpiricalPair {
  EmpiricalEstimate uric;
  EmpiricalEstimate lric;
};

struct TrialExtremes {
  double uric = 0.0;  ///< max over supports of sigma_max / sqrt(m)
  double lric = 0.0;  ///< min over supports of sigma_min / sqrt(m)
  std::uint64_t supports = 0;
  SupportMode mode = SupportMode::exhaustive;
};

/// Extremes of one matrix over k-column supports.  Enumerates all supports
/// when C(n, k) <= support_budget; otherwise takes the first support_budget
/// distinct supports of the (seed, trial)-keyed sequence, so a larger budget
/// always evaluates a superset.
TrialExtremes trial_extremes(const Matrix& a, std::size_t k, std::uint64_t support_budget,
                             std::uint64_t seed, std::uint64_t trial);

/// The first `count` distinct supports of the keyed sampling sequence.
std::vector<SupportSet> sampled_supports(std::size_t n, std::size_t k, std::uint64_t count,
                                         std::uint64_t seed, std::uint64_t trial);

/// Runs `trials` independent matrices.  Requires 0 < k < m < n, trials >= 1,
/// support_budget >= 1.  threads == 0 or 1 runs inline; results do not depend
/// on the thread count.
EmpiricalPair empirical_ric(std::size_t m, std::size_t n, std::size_t k, std::size_t trials,
                            std::uint64_t support_budget, std::uint64_t seed,
                            unsigned threads = 1);

}  // namespace ricb
