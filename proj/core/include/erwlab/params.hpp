#pragma once

#include <string>
#include <vector>

#include "erwlab/rational.hpp"

namespace erwlab {

/// Parameters of the base walk.
///
/// (s, p, q, r): first step is +1 with probability s (and -1 otherwise --
/// the first step is never 0); a later step copies a remembered step with
/// probability p, flips it with probability q and stops (emits 0) with
/// probability r. Derived: alpha = p - q, beta = 1 - r. r = 0 is the
/// standard walk, where p must lie strictly inside (0, 1); the degenerate
/// p in {0, 1} is rejected. Parameters are kept as exact rationals so the
/// critical threshold 2*alpha = beta can be decided without rounding.
class WalkParams {
 public:
  static WalkParams from_pqr(const Rational& s, const Rational& p,
                             const Rational& q, const Rational& r);
  static WalkParams from_alpha_beta(const Rational& s, const Rational& alpha,
                                    const Rational& beta);
  static WalkParams from_pqr(double s, double p, double q, double r) {
    return from_pqr(Rational::from_double(s), Rational::from_double(p),
                    Rational::from_double(q), Rational::from_double(r));
  }
  static WalkParams from_alpha_beta(double s, double alpha, double beta) {
    return from_alpha_beta(Rational::from_double(s),
                           Rational::from_double(alpha),
                           Rational::from_double(beta));
  }

  /// All violated invariants for (s, p, q, r); empty means valid.
  static std::vector<std::string> violations(const Rational& s,
                                             const Rational& p,
                                             const Rational& q,
                                             const Rational& r);

  double s() const { return s_.value(); }
  double p() const { return p_.value(); }
  double q() const { return q_.value(); }
  double r() const { return r_.value(); }
  double alpha() const { return alpha_.value(); }
  double beta() const { return beta_.value(); }
  bool has_stops() const { return r_.num() != 0; }

  const Rational& s_exact() const { return s_; }
  const Rational& p_exact() const { return p_; }
  const Rational& q_exact() const { return q_; }
  const Rational& r_exact() const { return r_; }
  const Rational& alpha_exact() const { return alpha_; }
  const Rational& beta_exact() const { return beta_; }

 private:
  WalkParams(Rational s, Rational p, Rational q, Rational r);

  Rational s_, p_, q_, r_, alpha_, beta_;
};

}  // namespace erwlab
