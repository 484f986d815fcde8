#include "riesz/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace riesz {

namespace {

using int128 = Rational::int128;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Splits a 128-bit magnitude into two 64-bit halves so conversion to floating
// point rounds only once per half.
template <typename Real>
Real to_real(int128 v) {
  const bool negative = v < 0;
  auto u = static_cast<unsigned __int128>(negative ? -v : v);
  const auto hi = static_cast<std::uint64_t>(u >> 64);
  const auto lo = static_cast<std::uint64_t>(u);
  Real r = static_cast<Real>(hi) * static_cast<Real>(18446744073709551616.0L) +
           static_cast<Real>(lo);
  return negative ? -r : r;
}

}  // namespace

Rational::Rational(int128 num, int128 den) : num_(num), den_(den) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const int128 g = gcd128(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

double Rational::to_double() const {
  constexpr int128 exact_limit = int128{1} << 53;
  if (abs128(num_) <= exact_limit && den_ <= exact_limit) {
    // Single correctly rounded division.
    return static_cast<double>(static_cast<std::int64_t>(num_)) /
           static_cast<double>(static_cast<std::int64_t>(den_));
  }
  return static_cast<double>(to_long_double());
}

long double Rational::to_long_double() const {
  return to_real<long double>(num_) / to_real<long double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  const int128 g = gcd128(a.den_, b.den_);
  return Rational(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const int128 g1 = gcd128(a.num_, b.den_);
  const int128 g2 = gcd128(b.num_, a.den_);
  const int128 s1 = g1 == 0 ? 1 : g1;
  const int128 s2 = g2 == 0 ? 1 : g2;
  return Rational((a.num_ / s1) * (b.num_ / s2), (a.den_ / s2) * (b.den_ / s1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int128 lhs = a.num_ * b.den_;
  const int128 rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  auto u = static_cast<unsigned __int128>(negative ? -value : value);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace riesz
