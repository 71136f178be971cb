#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "erwlab/params.hpp"

namespace erwlab {

/// A state-space cap was exceeded; never silently truncated.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleCaps {
  std::int64_t walk_pmf = 4096;       // horizon cap without stops (O(n) states)
  std::int64_t walk_pmf_stops = 512;  // horizon cap with stops (O(n^2) states)
};

/// Exact finite distribution over integer states.
///
/// dims == 1: scalar states in `first` (W_n, or T_n). dims == 2: pairs
/// (first, second) = (W_n, Sigma_n) or (T_n, Xi_n). States are sorted,
/// unique and carry strictly positive probability.
struct Pmf {
  int dims = 1;
  std::vector<std::int64_t> first;
  std::vector<std::int64_t> second;  // empty when dims == 1
  std::vector<double> prob;

  std::size_t size() const { return prob.size(); }
  /// Total probability, compensated summation.
  double total() const;
  /// Marginal over the first / second coordinate (dims == 2 only).
  Pmf marginal_first() const;
  Pmf marginal_second() const;
};

/// Exact law of the base walk at time n by forward dynamic programming over
/// reachable states: the law of W_n when r = 0, the joint law of
/// (W_n, Sigma_n) when r > 0.
Pmf walk_pmf(const WalkParams& params, std::int64_t n,
             const OracleCaps& caps = {});

/// Exact law of the row sum T_n for a row (n, m): mixture over the base law
/// at time m of W_m plus the trinomial displacement of the n-m fresh row
/// steps. Scalar law of T_n when r = 0 (Xi_n = n is deterministic), joint
/// law of (T_n, Xi_n) when r > 0. t_pmf with m = n is walk_pmf at n.
Pmf t_pmf(const WalkParams& params, std::int64_t n, std::int64_t m,
          const OracleCaps& caps = {});

/// Raw and central moments up to order k_max (<= 4) of a scalar pmf.
/// raw[j] = sum p_i x_i^j and central[j] = sum p_i (x_i - mean)^j, with
/// compensated summation throughout.
struct PmfMoments {
  double raw[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
  double central[5] = {1.0, 0.0, 0.0, 0.0, 0.0};
};
PmfMoments pmf_moments(const Pmf& pmf, int k_max);

}  // namespace erwlab
