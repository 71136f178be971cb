#include "erwlab/triangular.hpp"

#include <stdexcept>
#include <string>

#include "erwlab/parallel.hpp"

namespace erwlab {

namespace {

// Stream roles within one replication.
constexpr std::uint64_t kBaseRole = 0;
constexpr std::uint64_t kArrayRole = 1;

TriangularSample finish_sample(std::int64_t n, std::int64_t m,
                               std::int64_t w_m, std::int64_t sigma_m,
                               std::int64_t delta_sum, std::int64_t delta_moves,
                               const WalkParams& params) {
  TriangularSample s;
  s.n = n;
  s.m = m;
  s.gamma_n = static_cast<double>(m) / static_cast<double>(n);
  s.base_position = w_m;
  s.base_moves = sigma_m;
  s.row_sum = w_m + delta_sum;
  s.row_moves = sigma_m + delta_moves;
  s.cond_mean = static_cast<double>(w_m) *
                (1.0 + params.alpha() * static_cast<double>(n - m) /
                           static_cast<double>(m));
  s.residual = static_cast<double>(s.row_sum) - s.cond_mean;
  return s;
}

}  // namespace

ConditionalMoments conditional_moments(std::int64_t w_m, std::int64_t sigma_m,
                                       std::int64_t n, std::int64_t m,
                                       const WalkParams& params) {
  if (m > n)
    throw std::invalid_argument("conditional_moments: need m <= n, got m=" +
                                std::to_string(m) + ", n=" + std::to_string(n));
  // Validates reachability of (w_m, sigma_m) at time m.
  (void)step_distribution(m, w_m, sigma_m, params);

  const double a = params.alpha();
  const double b = params.beta();
  const double extra = static_cast<double>(n - m);
  const double wm = static_cast<double>(w_m) / static_cast<double>(m);
  const double sm = static_cast<double>(sigma_m) / static_cast<double>(m);

  ConditionalMoments cm;
  cm.mean_row_sum = static_cast<double>(w_m) + a * extra * wm;
  cm.var_residual = extra * (b * sm - a * a * wm * wm);
  cm.mean_row_moves = static_cast<double>(sigma_m) + extra * b * sm;
  cm.var_row_moves = extra * (b * sm) * (1.0 - b * sm);
  return cm;
}

TriangularSample sample_row(const Trajectory& base, std::int64_t n,
                            std::int64_t m, const WalkParams& params,
                            RngStream stream, SampleMethod method) {
  if (m < 1 || m > n) throw std::invalid_argument("sample_row: need 1 <= m <= n");
  if (base.length() < m)
    throw std::invalid_argument(
        "sample_row: base trajectory has length " +
        std::to_string(base.length()) + ", need at least m=" +
        std::to_string(m));
  const std::int64_t w_m = base.position_at(m);
  const std::int64_t sigma_m = base.moves_at(m);
  const std::int64_t extra = n - m;
  if (extra == 0) return finish_sample(n, m, w_m, sigma_m, 0, 0, params);

  const StepLaw law = step_distribution(m, w_m, sigma_m, params);
  std::int64_t delta_sum = 0;
  std::int64_t delta_moves = 0;
  if (method == SampleMethod::direct) {
    for (std::int64_t k = 0; k < extra; ++k) {
      const int step = sample_step(law, stream);
      delta_sum += step;
      delta_moves += step != 0 ? 1 : 0;
    }
  } else {
    const TrinomialCounts counts =
        trinomial_draw(stream, extra, law.up, law.down);
    delta_sum = counts.up - counts.down;
    delta_moves = counts.up + counts.down;
  }
  return finish_sample(n, m, w_m, sigma_m, delta_sum, delta_moves, params);
}

std::vector<TriangularSample> sample_ensemble(const WalkParams& params,
                                              const MemorySchedule& schedule,
                                              std::int64_t n,
                                              std::int64_t replications,
                                              std::uint64_t master_seed,
                                              SampleMethod method,
                                              int threads) {
  if (replications < 1)
    throw std::invalid_argument("sample_ensemble: replications must be >= 1");
  const std::int64_t m = schedule.m_of(n);
  std::vector<TriangularSample> out(static_cast<std::size_t>(replications));
  const RngStream root(master_seed);
  parallel_chunks(replications, threads, [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t r = lo; r < hi; ++r) {
      const RngStream rep = root.fork(static_cast<std::uint64_t>(r));
      const Trajectory base =
          simulate_base_walk(params, m, rep.fork(kBaseRole));
      out[static_cast<std::size_t>(r)] =
          sample_row(base, n, m, params, rep.fork(kArrayRole), method);
    }
  });
  return out;
}

std::vector<TriangularSample> sample_coupled_sequence(
    const WalkParams& params, const MemorySchedule& schedule,
    std::span<const std::int64_t> grid, RngStream stream,
    SampleMethod method) {
  if (grid.empty())
    throw std::invalid_argument("sample_coupled_sequence: empty grid");
  for (std::size_t j = 1; j < grid.size(); ++j)
    if (grid[j] <= grid[j - 1])
      throw std::invalid_argument(
          "sample_coupled_sequence: grid must be strictly increasing");

  const std::int64_t m_last = schedule.m_of(grid.back());
  const Trajectory base =
      simulate_base_walk(params, m_last, stream.fork(kBaseRole));
  std::vector<TriangularSample> out;
  out.reserve(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const std::int64_t n = grid[j];
    const std::int64_t m = schedule.m_of(n);
    out.push_back(sample_row(base, n, m, params,
                             stream.fork(kArrayRole + j), method));
  }
  return out;
}

RowTrajectory sample_row_trajectory(const Trajectory& base, std::int64_t n,
                                    std::int64_t m, const WalkParams& params,
                                    RngStream stream) {
  if (m < 1 || m > n)
    throw std::invalid_argument("sample_row_trajectory: need 1 <= m <= n");
  if (base.length() < m)
    throw std::invalid_argument("sample_row_trajectory: base shorter than m");
  RowTrajectory row;
  row.row_steps.reserve(static_cast<std::size_t>(n));
  row.partial_sums.reserve(static_cast<std::size_t>(n + 1));
  row.partial_sums.push_back(0);
  for (std::int64_t k = 1; k <= m; ++k) {
    row.row_steps.push_back(base.steps[static_cast<std::size_t>(k - 1)]);
    row.partial_sums.push_back(row.partial_sums.back() +
                               row.row_steps.back());
  }
  const StepLaw law =
      step_distribution(m, base.position_at(m), base.moves_at(m), params);
  for (std::int64_t k = m + 1; k <= n; ++k) {
    const int step = sample_step(law, stream);
    row.row_steps.push_back(static_cast<std::int8_t>(step));
    row.partial_sums.push_back(row.partial_sums.back() + step);
  }
  return row;
}

}  // namespace erwlab
