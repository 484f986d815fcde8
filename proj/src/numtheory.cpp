#include "riesz/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace riesz::numtheory {

std::int64_t gcd(std::int64_t i, std::int64_t j) { return std::gcd(i, j); }

int two_adic_valuation(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("two_adic_valuation: n must be positive");
  return __builtin_ctzll(static_cast<unsigned long long>(n));
}

MoebiusSieve::MoebiusSieve(std::int64_t bound) : bound_(bound), mu_(static_cast<std::size_t>(bound) + 1, 0) {
  if (bound < 1) throw std::invalid_argument("MoebiusSieve: bound must be positive");
  std::vector<std::int64_t> primes;
  std::vector<bool> composite(mu_.size(), false);
  mu_[1] = 1;
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu_[i] = -1;
    }
    for (std::int64_t p : primes) {
      const std::int64_t m = i * p;
      if (m > bound) break;
      composite[m] = true;
      if (i % p == 0) {
        mu_[m] = 0;
        break;
      }
      mu_[m] = static_cast<std::int8_t>(-mu_[i]);
    }
  }
}

int MoebiusSieve::operator()(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("moebius: n must be positive");
  if (n <= bound_) return mu_[static_cast<std::size_t>(n)];
  return moebius_by_factorization(n);
}

const MoebiusSieve& default_moebius_sieve() {
  static const MoebiusSieve sieve(1'000'000);
  return sieve;
}

int moebius(std::int64_t n) { return default_moebius_sieve()(n); }

int moebius_by_factorization(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("moebius: n must be positive");
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t m = i * i; m <= bound; m += i) composite[m] = true;
  }
  return primes;
}

PrimitiveDecomposition primitive_decompose(const IntVector& alpha) {
  PrimitiveDecomposition out;
  Eigen::Index lead = 0;
  while (lead < alpha.size() && alpha[lead] == 0) ++lead;
  if (lead == alpha.size()) throw std::invalid_argument("primitive_decompose: zero vector");

  out.flipped = alpha[lead] < 0;
  out.direction = out.flipped ? IntVector(-alpha) : alpha;
  std::int64_t content = 0;
  for (Eigen::Index i = lead; i < alpha.size(); ++i) content = std::gcd(content, out.direction[i]);
  out.content = content;
  out.direction /= content;
  return out;
}

std::optional<OddRatio> odd_ratio(const PrimitiveDecomposition& alpha,
                                  const PrimitiveDecomposition& beta) {
  // A flipped input had a negative leading entry; the scalar relating it to an
  // unflipped vector is then negative and never an odd/odd positive ratio.
  if (alpha.flipped != beta.flipped) return std::nullopt;
  if (alpha.direction.size() != beta.direction.size() || alpha.direction != beta.direction) {
    return std::nullopt;
  }
  const std::int64_t g = std::gcd(alpha.content, beta.content);
  const std::int64_t p = alpha.content / g;
  const std::int64_t q = beta.content / g;
  if (p % 2 == 0 || q % 2 == 0) return std::nullopt;
  return OddRatio{p, q};
}

std::optional<OddRatio> odd_ratio(const IntVector& alpha, const IntVector& beta) {
  if (alpha.size() != beta.size()) throw std::invalid_argument("odd_ratio: dimension mismatch");
  return odd_ratio(primitive_decompose(alpha), primitive_decompose(beta));
}

mpq_class euler_product_exact(std::int64_t prime_bound, bool include_two) {
  if (prime_bound < 2) throw std::invalid_argument("euler_product: prime bound must be ≥ 2");
  mpz_class num = 1;
  mpz_class den = 1;
  for (std::int64_t p : primes_up_to(prime_bound)) {
    if (p == 2 && !include_two) continue;
    const mpz_class p2 = mpz_class(static_cast<long>(p)) * static_cast<long>(p);
    num *= p2 + 1;
    den *= p2 - 1;
  }
  mpq_class result(num, den);
  result.canonicalize();
  return result;
}

long double euler_product_partial(std::int64_t prime_bound, bool include_two) {
  const std::int64_t exact_part = std::min(prime_bound, kExactEulerBound);
  const mpq_class exact = euler_product_exact(exact_part, include_two);

  // Leading double plus its residual, recombined in long double.
  mpf_class head(exact, 128);
  long exponent = 0;
  const double mantissa_hi = mpf_get_d_2exp(&exponent, head.get_mpf_t());
  mpf_class residual = head - mpf_class(std::ldexp(mantissa_hi, static_cast<int>(exponent)), 128);
  long double value = std::ldexp(static_cast<long double>(mantissa_hi), static_cast<int>(exponent)) +
                      static_cast<long double>(residual.get_d());

  if (prime_bound > exact_part) {
    for (std::int64_t p : primes_up_to(prime_bound)) {
      if (p <= exact_part) continue;
      const long double inv = 1.0L / (static_cast<long double>(p) * static_cast<long double>(p));
      value *= (1.0L + inv) / (1.0L - inv);
    }
  }
  return value;
}

}  // namespace riesz::numtheory
