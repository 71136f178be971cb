#include "erwlab/exact.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "erwlab/walk.hpp"

namespace erwlab {

namespace {

// Neumaier compensated accumulator.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

// Triangular layout for states with |w| <= sigma <= cap and w == sigma (2):
// index = base[sigma] + (w + sigma)/2, where level sigma holds sigma+1 slots.
std::vector<std::size_t> make_bases(std::int64_t cap, std::int64_t first_level) {
  std::vector<std::size_t> base(static_cast<std::size_t>(cap + 2), 0);
  std::size_t acc = 0;
  for (std::int64_t s = first_level; s <= cap; ++s) {
    base[static_cast<std::size_t>(s)] = acc;
    acc += static_cast<std::size_t>(s + 1);
  }
  base[static_cast<std::size_t>(cap + 1)] = acc;
  return base;
}

void check_caps(const WalkParams& params, std::int64_t n,
                const OracleCaps& caps) {
  const std::int64_t cap =
      params.has_stops() ? caps.walk_pmf_stops : caps.walk_pmf;
  if (n > cap)
    throw ResourceLimitError(
        "exact oracle: horizon " + std::to_string(n) + " exceeds the " +
        (params.has_stops() ? "stops" : "no-stops") + " cap " +
        std::to_string(cap));
}

// Law of W_n on the lattice {-n, -n+2, ..., n}; slot i holds W = 2i - k.
std::vector<double> walk_layers_no_stops(const WalkParams& params,
                                         std::int64_t n) {
  std::vector<double> cur(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> next(static_cast<std::size_t>(n) + 1, 0.0);
  cur[1] = params.s();
  cur[0] = 1.0 - params.s();
  for (std::int64_t k = 1; k < n; ++k) {
    std::fill(next.begin(), next.begin() + k + 2, 0.0);
    for (std::int64_t i = 0; i <= k; ++i) {
      const double p = cur[static_cast<std::size_t>(i)];
      if (p == 0.0) continue;
      const std::int64_t w = 2 * i - k;
      const StepLaw law = step_distribution(k, w, k, params);
      next[static_cast<std::size_t>(i + 1)] += p * law.up;
      next[static_cast<std::size_t>(i)] += p * law.down;
    }
    cur.swap(next);
  }
  return cur;
}

// Joint law of (W_n, Sigma_n) in the triangular layout.
std::vector<double> walk_layers_stops(const WalkParams& params, std::int64_t n,
                                      const std::vector<std::size_t>& base) {
  const std::size_t states = base[static_cast<std::size_t>(n + 1)];
  std::vector<double> cur(states, 0.0);
  std::vector<double> next(states, 0.0);
  cur[base[1] + 1] = params.s();        // (w=+1, sigma=1)
  cur[base[1] + 0] = 1.0 - params.s();  // (w=-1, sigma=1)
  for (std::int64_t k = 1; k < n; ++k) {
    const std::size_t active = base[static_cast<std::size_t>(k + 1)];
    std::fill(next.begin(),
              next.begin() +
                  static_cast<std::ptrdiff_t>(
                      base[static_cast<std::size_t>(k + 2)]),
              0.0);
    for (std::int64_t sigma = 1; sigma <= k; ++sigma) {
      const std::size_t row = base[static_cast<std::size_t>(sigma)];
      for (std::int64_t j = 0; j <= sigma; ++j) {
        const double p = cur[row + static_cast<std::size_t>(j)];
        if (p == 0.0) continue;
        const std::int64_t w = 2 * j - sigma;
        const StepLaw law = step_distribution(k, w, sigma, params);
        const std::size_t up_row = base[static_cast<std::size_t>(sigma + 1)];
        next[up_row + static_cast<std::size_t>(j + 1)] += p * law.up;  // w+1
        next[up_row + static_cast<std::size_t>(j)] += p * law.down;    // w-1
        next[row + static_cast<std::size_t>(j)] += p * law.stay;
      }
    }
    (void)active;
    cur.swap(next);
  }
  return cur;
}

Pmf collect_scalar(const std::vector<double>& lattice, std::int64_t n) {
  Pmf out;
  out.dims = 1;
  for (std::int64_t i = 0; i <= n; ++i) {
    const double p = lattice[static_cast<std::size_t>(i)];
    if (p > 0.0) {
      out.first.push_back(2 * i - n);
      out.prob.push_back(p);
    }
  }
  return out;
}

Pmf collect_pairs(const std::vector<double>& tri,
                  const std::vector<std::size_t>& base, std::int64_t n) {
  Pmf out;
  out.dims = 2;
  for (std::int64_t sigma = 1; sigma <= n; ++sigma) {
    const std::size_t row = base[static_cast<std::size_t>(sigma)];
    for (std::int64_t j = 0; j <= sigma; ++j) {
      const double p = tri[row + static_cast<std::size_t>(j)];
      if (p > 0.0) {
        out.first.push_back(2 * j - sigma);
        out.second.push_back(sigma);
        out.prob.push_back(p);
      }
    }
  }
  return out;
}

// log n! via lgamma, tabulated once per call site.
std::vector<double> log_factorials(std::int64_t up_to) {
  std::vector<double> lf(static_cast<std::size_t>(up_to) + 1, 0.0);
  for (std::int64_t k = 1; k <= up_to; ++k)
    lf[static_cast<std::size_t>(k)] = std::lgamma(static_cast<double>(k) + 1.0);
  return lf;
}

}  // namespace

double Pmf::total() const {
  KahanSum s;
  for (double p : prob) s.add(p);
  return s.value();
}

Pmf Pmf::marginal_first() const {
  if (dims == 1) return *this;
  std::map<std::int64_t, KahanSum> acc;
  for (std::size_t i = 0; i < prob.size(); ++i) acc[first[i]].add(prob[i]);
  Pmf out;
  out.dims = 1;
  for (const auto& [state, sum] : acc) {
    out.first.push_back(state);
    out.prob.push_back(sum.value());
  }
  return out;
}

Pmf Pmf::marginal_second() const {
  if (dims != 2)
    throw std::invalid_argument("marginal_second: scalar pmf has no second axis");
  std::map<std::int64_t, KahanSum> acc;
  for (std::size_t i = 0; i < prob.size(); ++i) acc[second[i]].add(prob[i]);
  Pmf out;
  out.dims = 1;
  for (const auto& [state, sum] : acc) {
    out.first.push_back(state);
    out.prob.push_back(sum.value());
  }
  return out;
}

Pmf walk_pmf(const WalkParams& params, std::int64_t n, const OracleCaps& caps) {
  if (n < 1) throw std::invalid_argument("walk_pmf: n must be >= 1");
  check_caps(params, n, caps);
  if (!params.has_stops()) {
    return collect_scalar(walk_layers_no_stops(params, n), n);
  }
  const auto base = make_bases(n, 1);
  return collect_pairs(walk_layers_stops(params, n, base), base, n);
}

Pmf t_pmf(const WalkParams& params, std::int64_t n, std::int64_t m,
          const OracleCaps& caps) {
  if (m < 1 || m > n) throw std::invalid_argument("t_pmf: need 1 <= m <= n");
  check_caps(params, n, caps);
  const std::int64_t extra = n - m;

  if (!params.has_stops()) {
    // T = W_m + 2*N_up - (n-m) with N_up ~ Bin(n-m, (1 + alpha W_m/m)/2)
    // conditionally on W_m; slot i of the output holds T = 2i - n.
    const std::vector<double> at_m = walk_layers_no_stops(params, m);
    std::vector<KahanSum> out(static_cast<std::size_t>(n) + 1);
    const auto lf = log_factorials(extra);
    for (std::int64_t i = 0; i <= m; ++i) {
      const double pw = at_m[static_cast<std::size_t>(i)];
      if (pw == 0.0) continue;
      const std::int64_t w = 2 * i - m;
      if (extra == 0) {
        out[static_cast<std::size_t>((w + n) / 2)].add(pw);
        continue;
      }
      const StepLaw law = step_distribution(m, w, m, params);
      const double lp = std::log(law.up);
      const double lq = std::log(law.down);
      for (std::int64_t k = 0; k <= extra; ++k) {
        const double logpmf =
            lf[static_cast<std::size_t>(extra)] -
            lf[static_cast<std::size_t>(k)] -
            lf[static_cast<std::size_t>(extra - k)] +
            static_cast<double>(k) * lp + static_cast<double>(extra - k) * lq;
        const std::int64_t t = w + 2 * k - extra;
        out[static_cast<std::size_t>((t + n) / 2)].add(pw * std::exp(logpmf));
      }
    }
    Pmf pmf;
    pmf.dims = 1;
    for (std::int64_t i = 0; i <= n; ++i) {
      const double p = out[static_cast<std::size_t>(i)].value();
      if (p > 0.0) {
        pmf.first.push_back(2 * i - n);
        pmf.prob.push_back(p);
      }
    }
    return pmf;
  }

  // With stops: joint (T, Xi) = (W_m + U - D, Sigma_m + U + D) where
  // (U, D) are the up/down counts of the n-m row steps, multinomial with
  // the fixed conditional law at (W_m, Sigma_m). T and Xi share parity, so
  // the output reuses the triangular layout over (xi, t).
  const auto base_m = make_bases(m, 1);
  const std::vector<double> at_m = walk_layers_stops(params, m, base_m);
  const auto out_base = make_bases(n, 1);
  std::vector<KahanSum> out(out_base[static_cast<std::size_t>(n + 1)]);
  const auto lf = log_factorials(extra);

  for (std::int64_t sigma = 1; sigma <= m; ++sigma) {
    const std::size_t row = base_m[static_cast<std::size_t>(sigma)];
    for (std::int64_t j = 0; j <= sigma; ++j) {
      const double pw = at_m[row + static_cast<std::size_t>(j)];
      if (pw == 0.0) continue;
      const std::int64_t w = 2 * j - sigma;
      auto deposit = [&](std::int64_t t, std::int64_t xi, double p) {
        const std::size_t idx = out_base[static_cast<std::size_t>(xi)] +
                                static_cast<std::size_t>((t + xi) / 2);
        out[idx].add(p);
      };
      if (extra == 0) {
        deposit(w, sigma, pw);
        continue;
      }
      const StepLaw law = step_distribution(m, w, sigma, params);
      const double lp = law.up > 0.0 ? std::log(law.up) : 0.0;
      const double lq = law.down > 0.0 ? std::log(law.down) : 0.0;
      const double ls = law.stay > 0.0 ? std::log(law.stay) : 0.0;
      for (std::int64_t u = 0; u <= extra; ++u) {
        if (law.up == 0.0 && u > 0) break;
        for (std::int64_t d = 0; d + u <= extra; ++d) {
          if (law.down == 0.0 && d > 0) break;
          const std::int64_t stay = extra - u - d;
          if (law.stay == 0.0 && stay > 0) continue;
          const double logpmf = lf[static_cast<std::size_t>(extra)] -
                                lf[static_cast<std::size_t>(u)] -
                                lf[static_cast<std::size_t>(d)] -
                                lf[static_cast<std::size_t>(stay)] +
                                static_cast<double>(u) * lp +
                                static_cast<double>(d) * lq +
                                static_cast<double>(stay) * ls;
          deposit(w + u - d, sigma + u + d, pw * std::exp(logpmf));
        }
      }
    }
  }

  Pmf pmf;
  pmf.dims = 2;
  for (std::int64_t xi = 1; xi <= n; ++xi) {
    const std::size_t row = out_base[static_cast<std::size_t>(xi)];
    for (std::int64_t j = 0; j <= xi; ++j) {
      const double p = out[row + static_cast<std::size_t>(j)].value();
      if (p > 0.0) {
        pmf.first.push_back(2 * j - xi);
        pmf.second.push_back(xi);
        pmf.prob.push_back(p);
      }
    }
  }
  return pmf;
}

PmfMoments pmf_moments(const Pmf& pmf, int k_max) {
  if (pmf.dims != 1)
    throw std::invalid_argument(
        "pmf_moments: marginalize a joint pmf before taking moments");
  if (k_max < 0 || k_max > 4)
    throw std::invalid_argument("pmf_moments: k_max must lie in [0,4]");
  PmfMoments mom;
  mom.raw[0] = pmf.total();
  mom.central[0] = mom.raw[0];
  for (int k = 1; k <= k_max; ++k) {
    KahanSum s;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      double term = pmf.prob[i];
      for (int j = 0; j < k; ++j) term *= static_cast<double>(pmf.first[i]);
      s.add(term);
    }
    mom.raw[k] = s.value();
  }
  const double mean = mom.raw[1];
  for (int k = 2; k <= k_max; ++k) {
    KahanSum s;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
      const double dx = static_cast<double>(pmf.first[i]) - mean;
      double term = pmf.prob[i];
      for (int j = 0; j < k; ++j) term *= dx;
      s.add(term);
    }
    mom.central[k] = s.value();
  }
  mom.central[1] = 0.0;
  return mom;
}

}  // namespace erwlab
