#ifndef RIESZ_RATIONAL_HPP
#define RIESZ_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace riesz {

/// Exact rational with 128-bit numerator and denominator, always reduced and
/// with a positive denominator. Overflow is not checked; the inner-product
/// kernel stays far inside the representable range (denominators ≤ 3·2⁸⁰).
class Rational {
 public:
  using int128 = __int128;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int128 num, int128 den);

  int128 numerator() const { return num_; }
  int128 denominator() const { return den_; }

  double to_double() const;
  long double to_long_double() const;
  std::string str() const;

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  Rational abs() const { return Rational(num_ < 0 ? -num_ : num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  int128 num_ = 0;
  int128 den_ = 1;
};

std::string to_string(Rational::int128 value);

}  // namespace riesz

#endif  // RIESZ_RATIONAL_HPP
