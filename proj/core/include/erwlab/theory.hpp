#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erwlab/params.hpp"

namespace erwlab {

enum class Regime { subcritical, critical, supercritical };

std::string regime_name(Regime r);

/// Regime of the row sums: against the threshold alpha = beta/2 (which is
/// alpha = 1/2 without stops). Decided exactly on the rational parameters,
/// so a critical configuration is never misclassified by rounding.
Regime classify_regime(const WalkParams& params);

/// gamma_n + x * (1 - gamma_n); the coefficient that mixes the remembered
/// prefix with the drift of the fresh row steps (x = alpha for positions,
/// x = beta for move counts).
double mix_coefficient(double gamma_n, double x);

enum class Normalization {
  sqrt_m,                // sqrt(m_n)
  sqrt_m_log_m,          // sqrt(m_n log m_n)
  m_pow_alpha,           // m_n^alpha
  sqrt_sigma_m,          // sqrt(Sigma_{m_n})
  sqrt_sigma_log_sigma,  // sqrt(Sigma_{m_n} log Sigma_{m_n})
};

std::string normalization_label(Normalization n);

enum class Centering { none, limit_times_mix_m_alpha };

/// Limit statement for gamma_n * T_n under a given memory fraction gamma.
///
/// Subcritical and critical cases: (gamma_n T_n) / normalization converges
/// to N(0, limit_variance) with no centering. Supercritical: the centered
/// statistic (gamma_n T_n - M * c_n * m_n^alpha) / normalization converges
/// to N(0, limit_variance), where M is the almost-sure limit of the base
/// walk W_n / n^alpha and c_n = gamma_n + alpha (1 - gamma_n); the
/// uncentered ratio gamma_n T_n / m_n^alpha converges to
/// as_limit_coefficient * M.
struct TheoryPrediction {
  Regime regime = Regime::subcritical;
  Normalization normalization = Normalization::sqrt_m;
  double limit_variance = 0.0;
  Centering centering = Centering::none;
  double as_limit_coefficient = 0.0;  // gamma + alpha (1 - gamma)
  std::string case_name;
  std::string variance_formula;  // with a = alpha, b = beta, g = gamma
};

/// The matching normalization, limiting variance and centering for the
/// configured regime; gamma must lie in [0, 1].
TheoryPrediction limit_prediction(const WalkParams& params, double gamma);

/// Exact one-step moment recursions, from the conditional law:
///   E[W_{n+1}]       = (1 + alpha/n) E[W_n]
///   E[W_{n+1}^2]     = (1 + 2 alpha/n) E[W_n^2] + beta E[Sigma_n] / n
///   E[Sigma_{n+1}]   = (1 + beta/n) E[Sigma_n]
///   E[Sigma_{n+1}^2] = (1 + 2 beta/n) E[Sigma_n^2] + beta E[Sigma_n] / n
/// with E[W_1] = 2s - 1, E[W_1^2] = E[Sigma_1] = E[Sigma_1^2] = 1.
struct MomentSeries {
  // Indexed by n; entry 0 is the (zero) state before the first step.
  std::vector<double> mean_w;
  std::vector<double> mean_w2;
  std::vector<double> mean_sigma;
  std::vector<double> mean_sigma2;
};
MomentSeries moment_recursions(const WalkParams& params, std::int64_t horizon);

/// Same recursion evaluated at a single n with O(1) memory.
struct MomentPoint {
  double mean_w = 0.0;
  double mean_w2 = 0.0;
  double mean_sigma = 0.0;
  double mean_sigma2 = 0.0;
};
MomentPoint moments_at(const WalkParams& params, std::int64_t n);

/// Exact row-sum moments for a row (n, m), by the tower rule over the
/// conditional moments given the base prefix:
///   E[T]   = (1 + alpha (n-m)/m) E[W_m]
///   E[T^2] = (1 + alpha (n-m)/m)^2 E[W_m^2]
///            + (n-m) (beta E[Sigma_m]/m - alpha^2 E[W_m^2]/m^2)
/// and the analogous identities for Xi with beta in place of alpha.
struct RowMoments {
  double mean_row_sum = 0.0;
  double var_row_sum = 0.0;
  double mean_row_moves = 0.0;
  double var_row_moves = 0.0;
};
RowMoments exact_row_moments(const WalkParams& params, std::int64_t n,
                             std::int64_t m);

/// Gamma function by the Lanczos approximation (g = 7, 9 terms); relative
/// error below 1e-10 on (0, 20].
double gamma_fn(double x);

/// Scale constants of the limit laws:
///   mean_limit_m:     E[M] = (2s - 1) / Gamma(1 + alpha)
///   mean_limit_sigma: E[Sigma] = 1 / Gamma(1 + beta)   (1 when beta = 1)
///   w2_growth_scale:  E[W_n^2] ~ w2_growth_scale * n^{2 alpha} in the
///                     supercritical stops regime, = 1/((2a - b) Gamma(2a));
///                     NaN outside that regime.
struct AsymptoticConstants {
  double mean_limit_m = 0.0;
  double mean_limit_sigma = 0.0;
  double w2_growth_scale = 0.0;
};
AsymptoticConstants asymptotic_constants(const WalkParams& params);

}  // namespace erwlab
