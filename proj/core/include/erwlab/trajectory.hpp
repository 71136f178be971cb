#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace erwlab {

/// One realized base-walk path.
///
/// steps holds X_1..X_N (values -1, 0, +1); positions and moves hold the
/// prefix sums W_0..W_N and Sigma_0..Sigma_N, so positions[k] is the
/// position after k steps and moves[k] counts the nonzero steps among the
/// first k. W_0 = Sigma_0 = 0 and Sigma_1 = 1 always (the first step is
/// never 0).
struct Trajectory {
  std::vector<std::int8_t> steps;
  std::vector<std::int64_t> positions;
  std::vector<std::int64_t> moves;

  std::int64_t length() const {
    return static_cast<std::int64_t>(steps.size());
  }
  std::int64_t position_at(std::int64_t k) const { return positions[k]; }
  std::int64_t moves_at(std::int64_t k) const { return moves[k]; }

  void reserve(std::int64_t n) {
    steps.reserve(n);
    positions.reserve(n + 1);
    moves.reserve(n + 1);
  }
};

/// All violated path invariants; empty means the trajectory is consistent.
/// With stops_allowed = false also checks Sigma_k = k and W_k parity.
std::vector<std::string> trajectory_violations(const Trajectory& traj,
                                               bool stops_allowed);

}  // namespace erwlab
