#include "erwlab/walk.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace erwlab {

namespace {

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

void append_step(Trajectory& traj, int step) {
  traj.steps.push_back(static_cast<std::int8_t>(step));
  traj.positions.push_back(traj.positions.back() + step);
  traj.moves.push_back(traj.moves.back() + (step != 0 ? 1 : 0));
}

}  // namespace

StepLaw step_distribution(std::int64_t n, std::int64_t w, std::int64_t sigma,
                          const WalkParams& params) {
  if (n < 1) throw std::invalid_argument("step_distribution: n must be >= 1");
  if (sigma < 1 || sigma > n)
    throw std::invalid_argument(
        "step_distribution: need 1 <= Sigma <= n, got Sigma=" +
        std::to_string(sigma) + " at n=" + std::to_string(n));
  if (std::llabs(w) > sigma)
    throw std::invalid_argument("step_distribution: need |W| <= Sigma, got W=" +
                                std::to_string(w) +
                                ", Sigma=" + std::to_string(sigma));
  if (((w - sigma) & 1) != 0)
    throw std::invalid_argument(
        "step_distribution: unreachable state, W and Sigma differ in parity");

  const double move_rate = params.beta() * static_cast<double>(sigma) /
                           static_cast<double>(n);
  const double drift = params.alpha() * static_cast<double>(w) /
                       static_cast<double>(n);
  StepLaw law;
  law.up = clamp01(0.5 * (move_rate + drift));
  law.down = clamp01(0.5 * (move_rate - drift));
  law.stay = params.has_stops() ? clamp01(1.0 - move_rate) : 0.0;
  return law;
}

int sample_step(const StepLaw& law, RngStream& rng) {
  const double u = rng.next_unit();
  if (u < law.up) return 1;
  if (u < law.up + law.down) return -1;
  return 0;
}

Trajectory simulate_base_walk(const WalkParams& params, std::int64_t n,
                              RngStream stream) {
  if (n < 1) throw std::invalid_argument("simulate_base_walk: n must be >= 1");
  Trajectory traj;
  traj.reserve(n);
  traj.positions.push_back(0);
  traj.moves.push_back(0);
  append_step(traj, stream.bernoulli(params.s()) ? 1 : -1);
  for (std::int64_t k = 1; k < n; ++k) {
    const StepLaw law =
        step_distribution(k, traj.positions[k], traj.moves[k], params);
    append_step(traj, sample_step(law, stream));
  }
  return traj;
}

Trajectory extend_base_walk(const Trajectory& traj, const WalkParams& params,
                            std::int64_t n2, RngStream stream) {
  const std::int64_t n1 = traj.length();
  if (n1 < 1)
    throw std::invalid_argument("extend_base_walk: empty trajectory");
  if (n2 < n1)
    throw std::invalid_argument(
        "extend_base_walk: new horizon " + std::to_string(n2) +
        " is shorter than the trajectory (" + std::to_string(n1) + ")");
  Trajectory out = traj;
  out.reserve(n2);
  for (std::int64_t k = n1; k < n2; ++k) {
    const StepLaw law =
        step_distribution(k, out.positions[k], out.moves[k], params);
    append_step(out, sample_step(law, stream));
  }
  return out;
}

std::vector<std::string> trajectory_violations(const Trajectory& traj,
                                               bool stops_allowed) {
  std::vector<std::string> errs;
  const std::int64_t n = traj.length();
  auto fail = [&](std::int64_t k, const std::string& what) {
    errs.push_back("k=" + std::to_string(k) + ": " + what);
  };
  if (traj.positions.size() != static_cast<std::size_t>(n + 1) ||
      traj.moves.size() != static_cast<std::size_t>(n + 1)) {
    errs.push_back("prefix arrays must have length steps+1");
    return errs;
  }
  if (traj.positions[0] != 0 || traj.moves[0] != 0)
    errs.push_back("W_0 and Sigma_0 must be 0");
  for (std::int64_t k = 1; k <= n; ++k) {
    const int step = traj.steps[k - 1];
    if (step < -1 || step > 1) fail(k, "step outside {-1,0,+1}");
    if (step == 0 && (k == 1 || !stops_allowed))
      fail(k, k == 1 ? "first step must be nonzero" : "zero step without stops");
    if (traj.positions[k] - traj.positions[k - 1] != step)
      fail(k, "W_k - W_{k-1} != X_k");
    if (traj.moves[k] - traj.moves[k - 1] != (step != 0 ? 1 : 0))
      fail(k, "Sigma_k - Sigma_{k-1} != X_k^2");
    if (std::llabs(traj.positions[k]) > traj.moves[k])
      fail(k, "|W_k| > Sigma_k");
    if (traj.moves[k] > k) fail(k, "Sigma_k > k");
    if (!stops_allowed && traj.moves[k] != k) fail(k, "Sigma_k != k");
    if (((traj.positions[k] - traj.moves[k]) & 1) != 0)
      fail(k, "W_k and Sigma_k parity mismatch");
  }
  return errs;
}

}  // namespace erwlab
