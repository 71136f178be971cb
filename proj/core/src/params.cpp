#include "erwlab/params.hpp"

#include <stdexcept>

namespace erwlab {

namespace {
const Rational kZero(0, 1);
const Rational kOne(1, 1);
const Rational kTwo(2, 1);
}  // namespace

std::vector<std::string> WalkParams::violations(const Rational& s,
                                                const Rational& p,
                                                const Rational& q,
                                                const Rational& r) {
  std::vector<std::string> errs;
  if (s < kZero || s > kOne) errs.push_back("s must lie in [0,1]");
  if (p < kZero || q < kZero || r < kZero)
    errs.push_back("p, q, r must be non-negative");
  if (p + q + r != kOne)
    errs.push_back("p + q + r = 1 is required (got " + (p + q + r).str() + ")");
  if (r >= kOne) errs.push_back("r must lie in [0,1), so beta = 1 - r > 0");
  if (r == kZero && (p <= kZero || p >= kOne))
    errs.push_back("standard walk (r = 0) requires p strictly inside (0,1)");
  return errs;
}

WalkParams::WalkParams(Rational s, Rational p, Rational q, Rational r)
    : s_(s), p_(p), q_(q), r_(r), alpha_(p - q), beta_(kOne - r) {}

WalkParams WalkParams::from_pqr(const Rational& s, const Rational& p,
                                const Rational& q, const Rational& r) {
  auto errs = violations(s, p, q, r);
  if (!errs.empty()) {
    std::string msg = "invalid walk parameters:";
    for (const auto& e : errs) msg += " " + e + ";";
    throw std::invalid_argument(msg);
  }
  return WalkParams(s, p, q, r);
}

WalkParams WalkParams::from_alpha_beta(const Rational& s, const Rational& alpha,
                                       const Rational& beta) {
  // p = (beta + alpha) / 2, q = (beta - alpha) / 2, r = 1 - beta.
  Rational p = (beta + alpha) * Rational(1, 2);
  Rational q = (beta - alpha) * Rational(1, 2);
  return from_pqr(s, p, q, kOne - beta);
}

}  // namespace erwlab
