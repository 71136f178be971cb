#pragma once

#include <cstdint>

#include "erwlab/params.hpp"
#include "erwlab/rng.hpp"
#include "erwlab/trajectory.hpp"

namespace erwlab {

/// Conditional one-step law of the next increment.
struct StepLaw {
  double up = 0.0;    // P(X = +1)
  double down = 0.0;  // P(X = -1)
  double stay = 0.0;  // P(X = 0); zero when r = 0
};

/// Law of X_{n+1} given position W_n = w and move count Sigma_n = sigma:
///
///   P(+1) = (beta*sigma/n + alpha*w/n) / 2
///   P(-1) = (beta*sigma/n - alpha*w/n) / 2
///   P( 0) = 1 - beta*sigma/n
///
/// Rejects states that violate 1 <= sigma <= n, |w| <= sigma or the parity
/// w == sigma (mod 2).
StepLaw step_distribution(std::int64_t n, std::int64_t w, std::int64_t sigma,
                          const WalkParams& params);

/// Draws -1, 0 or +1 from a step law. Consumes exactly one uniform.
int sample_step(const StepLaw& law, RngStream& rng);

/// Simulates the base walk to horizon n: X_1 = +1 with probability s, every
/// later step drawn from step_distribution at the current state. A pure
/// function of (params, n, stream).
Trajectory simulate_base_walk(const WalkParams& params, std::int64_t n,
                              RngStream stream);

/// Returns a copy of traj continued to horizon n2 with fresh randomness from
/// stream; the first traj.length() steps are unchanged. n2 < traj.length()
/// is rejected, n2 == traj.length() is the identity.
Trajectory extend_base_walk(const Trajectory& traj, const WalkParams& params,
                            std::int64_t n2, RngStream stream);

}  // namespace erwlab
