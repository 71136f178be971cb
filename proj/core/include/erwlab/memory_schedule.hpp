#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "erwlab/rational.hpp"

namespace erwlab {

/// The memory-size rule n -> m_n with ratio gamma_n = m_n / n.
///
/// Built-in kinds satisfy 1 <= m_n <= n, m_n nondecreasing, m_n -> infinity
/// and gamma_n -> declared_gamma. Ceilings are used so m_1 = 1 holds. The
/// table kind carries an explicit sequence and may break any of this;
/// validate() reports violations instead of guessing.
class MemorySchedule {
 public:
  enum class Kind { proportional, power, sublinear_log, table };

  /// m_n = ceil(gamma * n), gamma in (0, 1]. Exact integer ceiling.
  static MemorySchedule proportional(const Rational& gamma);
  static MemorySchedule proportional(double gamma) {
    return proportional(Rational::from_double(gamma));
  }
  /// m_n = ceil(n^theta), theta in (0, 1). declared_gamma = 0.
  static MemorySchedule power(double theta);
  /// m_n = min(n, max(1, ceil(n / log(n + 1)))). declared_gamma = 0.
  static MemorySchedule sublinear_log();
  /// Explicit sequence m_1, m_2, ...; declared_gamma is caller-supplied.
  static MemorySchedule table(std::vector<std::int64_t> values,
                              double declared_gamma = 0.0);

  Kind kind() const { return kind_; }
  double declared_gamma() const { return declared_gamma_; }
  /// Limit hypothesis m_n -> infinity holds by construction (false for table).
  bool grows_unbounded() const { return kind_ != Kind::table; }

  /// m_n. Deterministic; table kind rejects indices past the end.
  std::int64_t m_of(std::int64_t n) const;

  struct Report {
    std::vector<std::pair<std::int64_t, std::int64_t>> violations;  // (n, m_n)
    double sup_gamma_gap = 0.0;  // sup over n in [N/2, N] of |gamma_n - gamma|
    std::vector<double> gamma_seq;  // gamma_1 .. gamma_N
  };
  /// Scans n = 1..horizon; report-only (never throws on violations).
  Report validate(std::int64_t horizon) const;

  std::string describe() const;

 private:
  MemorySchedule() = default;

  Kind kind_ = Kind::proportional;
  Rational gamma_{1, 1};  // proportional
  double theta_ = 0.0;    // power
  std::vector<std::int64_t> values_;
  double declared_gamma_ = 1.0;
};

}  // namespace erwlab
