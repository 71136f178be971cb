#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace erwlab {

/// Thrown when a rational result does not fit in 64-bit integers.
struct RationalOverflow : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// Small exact rational on 64-bit integers.
///
/// Model parameters may be given as fractions ("3/4"), decimal strings
/// ("0.7") or doubles (every finite double is a dyadic rational, so that
/// conversion is exact too). Keeping parameters rational lets the regime
/// classifier compare 2*alpha against beta without floating-point ties.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  static Rational from_double(double x);
  /// Accepts "3/4", "0.625", "1", "-2/5".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator+(const Rational& o) const {
    return combine(o, /*sign=*/+1);
  }
  Rational operator-(const Rational& o) const {
    return combine(o, /*sign=*/-1);
  }
  Rational operator*(const Rational& o) const {
    return from_i128(static_cast<__int128>(num_) * o.num_,
                     static_cast<__int128>(den_) * o.den_);
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return cross(o) < 0; }
  bool operator<=(const Rational& o) const { return cross(o) <= 0; }
  bool operator>(const Rational& o) const { return cross(o) > 0; }
  bool operator>=(const Rational& o) const { return cross(o) >= 0; }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;

  static unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    unsigned __int128 an = n < 0 ? static_cast<unsigned __int128>(-n)
                                 : static_cast<unsigned __int128>(n);
    unsigned __int128 ad = static_cast<unsigned __int128>(d);
    if (an != 0) {
      unsigned __int128 g = gcd128(an, ad);
      an /= g;
      ad /= g;
    } else {
      ad = 1;
    }
    constexpr unsigned __int128 kMax = INT64_MAX;
    if (an > kMax || ad > kMax)
      throw RationalOverflow("Rational: value does not fit in int64");
    Rational r;
    r.num_ = n < 0 ? -static_cast<std::int64_t>(an)
                   : static_cast<std::int64_t>(an);
    r.den_ = static_cast<std::int64_t>(ad);
    return r;
  }

  void assign(std::int64_t n, std::int64_t d) {
    *this = from_i128(n, d);
  }

  Rational combine(const Rational& o, int sign) const {
    __int128 n = static_cast<__int128>(num_) * o.den_ +
                 static_cast<__int128>(sign) * o.num_ * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    return from_i128(n, d);
  }

  int cross(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
};

inline Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite");
  if (x == 0.0) return Rational(0, 1);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));  // exact
  exp -= 53;
  if (exp >= 0) {
    if (exp > 10) throw RationalOverflow("Rational: double too large");
    return from_i128(static_cast<__int128>(scaled) << exp, 1);
  }
  if (exp < -62) throw RationalOverflow("Rational: double too small");
  return from_i128(scaled, static_cast<__int128>(1) << (-exp));
}

inline Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("Rational: cannot parse '" +
                                std::string(text) + "'");
  };
  if (text.empty()) fail();
  bool neg = false;
  std::size_t i = 0;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  bool in_frac = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      if (num > (INT64_MAX - 9) / 10) fail();
      num = num * 10 + (c - '0');
      if (in_frac) {
        if (den > INT64_MAX / 10) fail();
        den *= 10;
      }
      any_digit = true;
    } else if (c == '.' && !in_frac) {
      in_frac = true;
    } else if (c == '/' && !in_frac && any_digit && i + 1 < text.size()) {
      Rational d = parse(text.substr(i + 1));
      if (d.num_ == 0) fail();
      return from_i128(static_cast<__int128>(neg ? -num : num) * d.den_,
                       static_cast<__int128>(den) * d.num_);
    } else {
      fail();
    }
  }
  if (!any_digit) fail();
  return Rational(neg ? -num : num, den);
}

}  // namespace erwlab
