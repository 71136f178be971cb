#include "erwlab/memory_schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace erwlab {

MemorySchedule MemorySchedule::proportional(const Rational& gamma) {
  if (gamma <= Rational(0, 1) || gamma > Rational(1, 1))
    throw std::invalid_argument("proportional schedule needs gamma in (0,1]");
  MemorySchedule s;
  s.kind_ = Kind::proportional;
  s.gamma_ = gamma;
  s.declared_gamma_ = gamma.value();
  return s;
}

MemorySchedule MemorySchedule::power(double theta) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("power schedule needs theta in (0,1)");
  MemorySchedule s;
  s.kind_ = Kind::power;
  s.theta_ = theta;
  s.declared_gamma_ = 0.0;
  return s;
}

MemorySchedule MemorySchedule::sublinear_log() {
  MemorySchedule s;
  s.kind_ = Kind::sublinear_log;
  s.declared_gamma_ = 0.0;
  return s;
}

MemorySchedule MemorySchedule::table(std::vector<std::int64_t> values,
                                     double declared_gamma) {
  if (values.empty())
    throw std::invalid_argument("table schedule needs at least one entry");
  MemorySchedule s;
  s.kind_ = Kind::table;
  s.values_ = std::move(values);
  s.declared_gamma_ = declared_gamma;
  return s;
}

std::int64_t MemorySchedule::m_of(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("m_of: n must be >= 1");
  switch (kind_) {
    case Kind::proportional: {
      // ceil(gamma * n) on integers.
      const __int128 num = static_cast<__int128>(gamma_.num()) * n;
      const __int128 den = gamma_.den();
      return static_cast<std::int64_t>((num + den - 1) / den);
    }
    case Kind::power: {
      const double raw = std::pow(static_cast<double>(n), theta_);
      const double snapped = std::round(raw);
      double m = (std::fabs(raw - snapped) < 1e-9 * (1.0 + raw))
                     ? snapped
                     : std::ceil(raw);
      if (m < 1.0) m = 1.0;
      if (m > static_cast<double>(n)) m = static_cast<double>(n);
      return static_cast<std::int64_t>(m);
    }
    case Kind::sublinear_log: {
      const double raw =
          static_cast<double>(n) / std::log(static_cast<double>(n) + 1.0);
      std::int64_t m = static_cast<std::int64_t>(std::ceil(raw));
      if (m < 1) m = 1;
      if (m > n) m = n;  // keeps 1 <= m_n <= n at n = 1
      return m;
    }
    case Kind::table: {
      if (static_cast<std::size_t>(n) > values_.size())
        throw std::out_of_range("table schedule has no entry for n=" +
                                std::to_string(n));
      return values_[static_cast<std::size_t>(n - 1)];
    }
  }
  throw std::logic_error("unreachable");
}

MemorySchedule::Report MemorySchedule::validate(std::int64_t horizon) const {
  if (horizon < 1) throw std::invalid_argument("validate: horizon must be >= 1");
  Report rep;
  rep.gamma_seq.reserve(static_cast<std::size_t>(horizon));
  const std::int64_t half = (horizon + 1) / 2;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    std::int64_t m = 0;
    if (kind_ == Kind::table &&
        static_cast<std::size_t>(n) > values_.size()) {
      rep.violations.emplace_back(n, -1);
      rep.gamma_seq.push_back(0.0);
      continue;
    }
    m = m_of(n);
    const double g = static_cast<double>(m) / static_cast<double>(n);
    rep.gamma_seq.push_back(g);
    if (m < 1 || m > n) rep.violations.emplace_back(n, m);
    if (n >= half) {
      const double gap = std::fabs(g - declared_gamma_);
      if (gap > rep.sup_gamma_gap) rep.sup_gamma_gap = gap;
    }
  }
  return rep;
}

std::string MemorySchedule::describe() const {
  switch (kind_) {
    case Kind::proportional:
      return "proportional(" + gamma_.str() + ")";
    case Kind::power:
      return "power(" + std::to_string(theta_) + ")";
    case Kind::sublinear_log:
      return "sublinear-log";
    case Kind::table:
      return "table[" + std::to_string(values_.size()) + " entries]";
  }
  return "?";
}

}  // namespace erwlab
