#ifndef RIESZ_NUMTHEORY_HPP
#define RIESZ_NUMTHEORY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "riesz/types.hpp"

namespace riesz::numtheory {

std::int64_t gcd(std::int64_t i, std::int64_t j);

/// Largest e with 2^e | n. Requires n ≥ 1.
int two_adic_valuation(std::int64_t n);

/// Möbius function backed by a linear sieve of smallest prime factors.
/// Arguments beyond the sieve bound fall back to trial division.
class MoebiusSieve {
 public:
  explicit MoebiusSieve(std::int64_t bound);

  int operator()(std::int64_t n) const;
  std::int64_t bound() const { return bound_; }

 private:
  std::int64_t bound_;
  std::vector<std::int8_t> mu_;
};

/// Process-wide sieve up to 10⁶, built on first use and immutable afterwards.
const MoebiusSieve& default_moebius_sieve();

int moebius(std::int64_t n);

/// Trial-division Möbius, independent of any sieve.
int moebius_by_factorization(std::int64_t n);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

/// α = content · direction after flipping α so that its first nonzero entry is
/// positive; `flipped` records whether the flip happened.
struct PrimitiveDecomposition {
  IntVector direction;
  std::int64_t content = 0;
  bool flipped = false;
};

PrimitiveDecomposition primitive_decompose(const IntVector& alpha);

/// Reduced fraction p_num/q_den of two odd positive integers.
struct OddRatio {
  std::int64_t p_num = 1;
  std::int64_t q_den = 1;

  friend bool operator==(const OddRatio&, const OddRatio&) = default;
};

/// t with α = t·β when t is a quotient of two odd positive integers, else
/// nothing. Throws std::invalid_argument for a zero vector or mismatched
/// lengths.
std::optional<OddRatio> odd_ratio(const IntVector& alpha, const IntVector& beta);

/// Same test on already decomposed vectors (avoids repeated gcd work when a
/// system is scanned pairwise).
std::optional<OddRatio> odd_ratio(const PrimitiveDecomposition& alpha,
                                  const PrimitiveDecomposition& beta);

/// Bound up to which euler_product_partial multiplies exact rationals.
inline constexpr std::int64_t kExactEulerBound = 10'000;

/// ∏_{p ≤ bound} (1 + p⁻²)/(1 − p⁻²), optionally skipping p = 2, in exact
/// rational arithmetic.
mpq_class euler_product_exact(std::int64_t prime_bound, bool include_two);

/// Same product; primes up to kExactEulerBound are multiplied exactly, the
/// rest in extended precision.
long double euler_product_partial(std::int64_t prime_bound, bool include_two);

}  // namespace riesz::numtheory

#endif  // RIESZ_NUMTHEORY_HPP
