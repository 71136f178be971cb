#include "erwlab/theory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace erwlab {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::subcritical: return "subcritical";
    case Regime::critical: return "critical";
    case Regime::supercritical: return "supercritical";
  }
  return "?";
}

std::string normalization_label(Normalization n) {
  switch (n) {
    case Normalization::sqrt_m: return "sqrt(m_n)";
    case Normalization::sqrt_m_log_m: return "sqrt(m_n log m_n)";
    case Normalization::m_pow_alpha: return "m_n^alpha";
    case Normalization::sqrt_sigma_m: return "sqrt(Sigma_m_n)";
    case Normalization::sqrt_sigma_log_sigma:
      return "sqrt(Sigma_m_n log Sigma_m_n)";
  }
  return "?";
}

Regime classify_regime(const WalkParams& params) {
  // 2*alpha vs beta, cross-multiplied in 128-bit integers: exact.
  const Rational& a = params.alpha_exact();
  const Rational& b = params.beta_exact();
  const __int128 lhs = static_cast<__int128>(2) * a.num() * b.den();
  const __int128 rhs = static_cast<__int128>(b.num()) * a.den();
  if (lhs < rhs) return Regime::subcritical;
  if (lhs > rhs) return Regime::supercritical;
  return Regime::critical;
}

double mix_coefficient(double gamma_n, double x) {
  return gamma_n + x * (1.0 - gamma_n);
}

TheoryPrediction limit_prediction(const WalkParams& params, double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::invalid_argument("limit_prediction: gamma must lie in [0,1]");
  const double a = params.alpha();
  const double b = params.beta();
  const double g = gamma;
  const double c = mix_coefficient(g, a);

  TheoryPrediction pred;
  pred.regime = classify_regime(params);
  pred.as_limit_coefficient = c;
  pred.case_name = regime_name(pred.regime) +
                   std::string(params.has_stops() ? " (stops)" : "");

  if (!params.has_stops()) {
    switch (pred.regime) {
      case Regime::subcritical:
        pred.normalization = Normalization::sqrt_m;
        pred.limit_variance = c * c / (1.0 - 2.0 * a) + g * (1.0 - g);
        pred.centering = Centering::none;
        pred.variance_formula = "{g+a(1-g)}^2/(1-2a) + g(1-g)";
        break;
      case Regime::critical:
        pred.normalization = Normalization::sqrt_m_log_m;
        pred.limit_variance = (1.0 + g) * (1.0 + g) / 4.0;
        pred.centering = Centering::none;
        pred.variance_formula = "(1+g)^2/4";
        break;
      case Regime::supercritical:
        pred.normalization = Normalization::sqrt_m;
        pred.limit_variance = c * c / (2.0 * a - 1.0) + g * (1.0 - g);
        pred.centering = Centering::limit_times_mix_m_alpha;
        pred.variance_formula = "{g+a(1-g)}^2/(2a-1) + g(1-g)";
        break;
    }
  } else {
    switch (pred.regime) {
      case Regime::subcritical:
        pred.normalization = Normalization::sqrt_sigma_m;
        pred.limit_variance =
            b * c * c / (b - 2.0 * a) + b * g * (1.0 - g);
        pred.centering = Centering::none;
        pred.variance_formula = "b{g+a(1-g)}^2/(b-2a) + b g(1-g)";
        break;
      case Regime::critical: {
        pred.normalization = Normalization::sqrt_sigma_log_sigma;
        const double cb = g + b * (1.0 - g) / 2.0;
        pred.limit_variance = cb * cb;
        pred.centering = Centering::none;
        pred.variance_formula = "{g+b(1-g)/2}^2";
        break;
      }
      case Regime::supercritical:
        pred.normalization = Normalization::sqrt_sigma_m;
        pred.limit_variance =
            b * c * c / (2.0 * a - b) + b * g * (1.0 - g);
        pred.centering = Centering::limit_times_mix_m_alpha;
        pred.variance_formula = "b{g+a(1-g)}^2/(2a-b) + b g(1-g)";
        break;
    }
  }
  return pred;
}

namespace {

struct MomentState {
  double w, w2, sigma, sigma2;
};

MomentState moment_step(const MomentState& cur, std::int64_t n, double alpha,
                        double beta) {
  const double dn = static_cast<double>(n);
  MomentState next;
  next.w = (1.0 + alpha / dn) * cur.w;
  next.w2 = (1.0 + 2.0 * alpha / dn) * cur.w2 + beta * cur.sigma / dn;
  next.sigma = (1.0 + beta / dn) * cur.sigma;
  next.sigma2 = (1.0 + 2.0 * beta / dn) * cur.sigma2 + beta * cur.sigma / dn;
  return next;
}

MomentState initial_state(const WalkParams& params) {
  return {2.0 * params.s() - 1.0, 1.0, 1.0, 1.0};
}

}  // namespace

MomentSeries moment_recursions(const WalkParams& params, std::int64_t horizon) {
  if (horizon < 1)
    throw std::invalid_argument("moment_recursions: horizon must be >= 1");
  MomentSeries out;
  const auto size = static_cast<std::size_t>(horizon + 1);
  out.mean_w.resize(size);
  out.mean_w2.resize(size);
  out.mean_sigma.resize(size);
  out.mean_sigma2.resize(size);
  MomentState st = initial_state(params);
  out.mean_w[1] = st.w;
  out.mean_w2[1] = st.w2;
  out.mean_sigma[1] = st.sigma;
  out.mean_sigma2[1] = st.sigma2;
  for (std::int64_t n = 1; n < horizon; ++n) {
    st = moment_step(st, n, params.alpha(), params.beta());
    out.mean_w[n + 1] = st.w;
    out.mean_w2[n + 1] = st.w2;
    out.mean_sigma[n + 1] = st.sigma;
    out.mean_sigma2[n + 1] = st.sigma2;
  }
  return out;
}

MomentPoint moments_at(const WalkParams& params, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moments_at: n must be >= 1");
  MomentState st = initial_state(params);
  for (std::int64_t k = 1; k < n; ++k)
    st = moment_step(st, k, params.alpha(), params.beta());
  return {st.w, st.w2, st.sigma, st.sigma2};
}

RowMoments exact_row_moments(const WalkParams& params, std::int64_t n,
                             std::int64_t m) {
  if (m < 1 || m > n)
    throw std::invalid_argument("exact_row_moments: need 1 <= m <= n");
  const MomentPoint base = moments_at(params, m);
  const double a = params.alpha();
  const double b = params.beta();
  const double dm = static_cast<double>(m);
  const double extra = static_cast<double>(n - m);

  RowMoments out;
  const double kt = 1.0 + a * extra / dm;
  out.mean_row_sum = kt * base.mean_w;
  const double second_t = kt * kt * base.mean_w2 +
                          extra * (b * base.mean_sigma / dm -
                                   a * a * base.mean_w2 / (dm * dm));
  out.var_row_sum = second_t - out.mean_row_sum * out.mean_row_sum;

  const double kx = 1.0 + b * extra / dm;
  out.mean_row_moves = kx * base.mean_sigma;
  const double second_x = kx * kx * base.mean_sigma2 +
                          extra * (b * base.mean_sigma / dm -
                                   b * b * base.mean_sigma2 / (dm * dm));
  out.var_row_moves = second_x - out.mean_row_moves * out.mean_row_moves;
  return out;
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("gamma_fn: x must be > 0");
  // Lanczos, g = 7, 9 coefficients.
  static const double kCoef[9] = {
      0.99999999999980993,      676.5203681218851,   -1259.1392167224028,
      771.32342877765313,       -176.61502916214059, 12.507343278686905,
      -0.13857109526572012,     9.9843695780195716e-6,
      1.5056327351493116e-7};
  if (x < 0.5) {
    // Reflection keeps accuracy near 0.
    return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
  }
  const double z = x - 1.0;
  double sum = kCoef[0];
  for (int i = 1; i < 9; ++i) sum += kCoef[i] / (z + static_cast<double>(i));
  const double t = z + 7.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * sum;
}

AsymptoticConstants asymptotic_constants(const WalkParams& params) {
  AsymptoticConstants out;
  const double a = params.alpha();
  const double b = params.beta();
  out.mean_limit_m = (2.0 * params.s() - 1.0) / gamma_fn(1.0 + a);
  out.mean_limit_sigma = 1.0 / gamma_fn(1.0 + b);
  if (2.0 * a > b && 2.0 * a > 0.0)
    out.w2_growth_scale = 1.0 / ((2.0 * a - b) * gamma_fn(2.0 * a));
  else
    out.w2_growth_scale = std::numeric_limits<double>::quiet_NaN();
  return out;
}

}  // namespace erwlab
