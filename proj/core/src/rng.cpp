#include "erwlab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace erwlab {

namespace {

// One inversion pass over a block small enough that (1-p)^block stays far
// from the double underflow threshold (p <= 1/2 here, so >= 2^-512).
std::int64_t binomial_block(RngStream& rng, std::int64_t n, double p) {
  const double u = rng.next_unit();
  const double ratio = p / (1.0 - p);
  double pmf = std::exp(static_cast<double>(n) * std::log1p(-p));
  double cdf = pmf;
  std::int64_t k = 0;
  while (u > cdf && k < n) {
    pmf *= ratio * static_cast<double>(n - k) / static_cast<double>(k + 1);
    ++k;
    cdf += pmf;
  }
  return k;
}

}  // namespace

std::int64_t binomial_draw(RngStream& rng, std::int64_t n, double p) {
  if (n < 0 || p < 0.0 || p > 1.0)
    throw std::invalid_argument("binomial_draw: need n >= 0, p in [0,1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial_draw(rng, n, 1.0 - p);

  constexpr std::int64_t kBlock = 512;
  std::int64_t total = 0;
  std::int64_t remaining = n;
  while (remaining > 0) {
    const std::int64_t block = remaining < kBlock ? remaining : kBlock;
    total += binomial_block(rng, block, p);
    remaining -= block;
  }
  return total;
}

TrinomialCounts trinomial_draw(RngStream& rng, std::int64_t n, double p_up,
                               double p_down) {
  if (p_up < 0.0 || p_down < 0.0 || p_up + p_down > 1.0 + 1e-12)
    throw std::invalid_argument("trinomial_draw: invalid probabilities");
  TrinomialCounts c;
  c.up = binomial_draw(rng, n, p_up);
  const double rest = 1.0 - p_up;
  if (n > c.up && rest > 0.0) {
    double cond = p_down / rest;
    if (cond > 1.0) cond = 1.0;
    c.down = binomial_draw(rng, n - c.up, cond);
  }
  c.stay = n - c.up - c.down;
  return c;
}

}  // namespace erwlab
