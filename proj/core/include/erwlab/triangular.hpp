#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "erwlab/memory_schedule.hpp"
#include "erwlab/params.hpp"
#include "erwlab/rng.hpp"
#include "erwlab/trajectory.hpp"
#include "erwlab/walk.hpp"

namespace erwlab {

enum class SampleMethod { direct, collapsed };

/// One realization of row n of the triangular array.
///
/// The row keeps the first m = m_n base steps and redraws the remaining
/// n - m steps i.i.d. from the conditional law at (W_m, Sigma_m). row_sum
/// is T_n, row_moves is Xi_n = Sigma_m + #moves among the fresh steps,
/// cond_mean is A_n = E[T_n | base walk] and residual is B_n = T_n - A_n.
struct TriangularSample {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double gamma_n = 0.0;
  std::int64_t base_position = 0;  // W_{m_n}
  std::int64_t base_moves = 0;     // Sigma_{m_n}
  std::int64_t row_sum = 0;        // T_n
  std::int64_t row_moves = 0;      // Xi_n
  double cond_mean = 0.0;          // A_n
  double residual = 0.0;           // B_n
};

/// Conditional moments of (T_n, Xi_n) given the base prefix state:
///   E[T_n | .]  = W_m + alpha (n-m) W_m / m
///   V[T_n | .]  = (n-m) (beta Sigma_m/m - alpha^2 (W_m/m)^2)
///   E[Xi_n | .] = Sigma_m + (n-m) beta Sigma_m / m
///   V[Xi_n | .] = (n-m) (beta Sigma_m/m)(1 - beta Sigma_m/m)
struct ConditionalMoments {
  double mean_row_sum = 0.0;
  double var_residual = 0.0;
  double mean_row_moves = 0.0;
  double var_row_moves = 0.0;
};
ConditionalMoments conditional_moments(std::int64_t w_m, std::int64_t sigma_m,
                                       std::int64_t n, std::int64_t m,
                                       const WalkParams& params);

/// Samples row n given a base trajectory of length >= m.
///
/// direct draws each of the n-m row steps one by one; collapsed draws the
/// trinomial counts of the n-m steps in one shot (exact, not a normal
/// approximation). Both produce the same conditional law of (T_n, Xi_n).
TriangularSample sample_row(const Trajectory& base, std::int64_t n,
                            std::int64_t m, const WalkParams& params,
                            RngStream stream, SampleMethod method);

/// Monte Carlo ensemble at a single row index n: replication r uses a fresh
/// base walk of length m_n on the stream keyed (master_seed, r). Output is
/// ordered by replication and identical for any thread count.
std::vector<TriangularSample> sample_ensemble(const WalkParams& params,
                                              const MemorySchedule& schedule,
                                              std::int64_t n,
                                              std::int64_t replications,
                                              std::uint64_t master_seed,
                                              SampleMethod method,
                                              int threads = 0);

/// Rows at every grid index sharing one base walk (of length m at the last
/// grid point); the fresh row randomness is independent across rows. The
/// grid must be strictly increasing.
std::vector<TriangularSample> sample_coupled_sequence(
    const WalkParams& params, const MemorySchedule& schedule,
    std::span<const std::int64_t> grid, RngStream stream,
    SampleMethod method = SampleMethod::collapsed);

/// A fully materialized row: Y_k = X_k for k <= m, then the fresh steps.
/// Opt-in (tests and diagnostics); samplers above never build this.
struct RowTrajectory {
  std::vector<std::int8_t> row_steps;        // Y_1 .. Y_n
  std::vector<std::int64_t> partial_sums;    // S_0 .. S_n
};
RowTrajectory sample_row_trajectory(const Trajectory& base, std::int64_t n,
                                    std::int64_t m, const WalkParams& params,
                                    RngStream stream);

}  // namespace erwlab
