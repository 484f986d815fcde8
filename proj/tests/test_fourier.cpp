#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "riesz/fourier.hpp"
#include "riesz/gram.hpp"

using namespace riesz;
using namespace riesz::fourier;

namespace {
IntVector vec(std::initializer_list<std::int64_t> v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) out[i++] = x;
  return out;
}
VectorXd pt(double a) {
  VectorXd v(1);
  v << a;
  return v;
}
}  // namespace

TEST_CASE("mu constant") {
  // 50-digit mpmath value.
  CHECK(mu_constant() == doctest::Approx(0.992740800234228399852108551571).epsilon(1e-15));
}

TEST_CASE("fourier expansion of the profiles") {
  const auto c = fourier_expansion(BasisFunction::cos_like(1, true), 4);
  REQUIRE(c.terms.size() == 4);
  CHECK(c.terms[0].harmonic == 1);
  CHECK(c.terms[0].coefficient == doctest::Approx(mu_constant()));
  CHECK(c.terms[1].harmonic == 3);
  CHECK(c.terms[1].coefficient == doctest::Approx(mu_constant() / 9));
  const auto s = fourier_expansion(BasisFunction::sin_like(1, true), 4);
  CHECK(s.terms[1].coefficient == doctest::Approx(-mu_constant() / 9));
  CHECK(s.terms[2].coefficient == doctest::Approx(mu_constant() / 25));

  // Parseval: the full series has unit norm.
  CHECK(fourier_expansion(BasisFunction::cos_like(1, true), 20000).l2_norm() == doctest::Approx(1.0).epsilon(1e-9));

  // Pointwise convergence to the profile.
  const auto big = fourier_expansion(BasisFunction::cos_like(RidgeIndex(vec({2})), false), 4000);
  for (double x : {0.0, 0.1, 0.3, 0.77}) CHECK(big.evaluate(pt(x)) == doctest::Approx(eval_c(2 * x)).epsilon(1e-4));
  const auto bs = fourier_expansion(BasisFunction::sin_like(3), 4000);
  for (double x : {0.05, 0.2, 0.61}) CHECK(bs.evaluate(pt(x)) == doctest::Approx(eval_s(3 * x)).scale(1.0).epsilon(1e-4));

  CHECK_THROWS_AS(fourier_expansion(BasisFunction::constant(1), 3), std::invalid_argument);
  CHECK_THROWS_AS(fourier_expansion(BasisFunction::cos_like(1), 0), std::invalid_argument);
}

TEST_CASE("coefficient matching reproduces the analytic kernel") {
  CHECK(coefficient_matching_inner_product(Parity::SinLike, 1, 3, 200) == doctest::Approx(-1.0 / 27.0).epsilon(1e-6));
  for (std::int64_t i = 1; i <= 12; ++i) {
    for (std::int64_t j = 1; j <= 12; ++j) {
      for (bool cos : {true, false}) {
        const double exact = univariate_inner_product(cos, i, j).to_double();
        const double approx = coefficient_matching_inner_product(cos ? Parity::CosLike : Parity::SinLike, i, j, 4000);
        REQUIRE(std::fabs(exact - approx) < 1e-6 * std::max(std::fabs(exact), 1e-3));
      }
    }
  }
}

TEST_CASE("convolution identity") {
  for (std::int64_t n = 1; n <= 5000; ++n) REQUIRE(convolution_identity_check(n));
  CHECK(convolution_sum(1) == 1);
  CHECK(convolution_sum(15) == 0);
  CHECK_THROWS_AS(convolution_sum(0), std::invalid_argument);
}

TEST_CASE("decomposition coefficients") {
  const auto cos = decomposition_coefficients(Target::Cos, 9);
  REQUIRE(cos.terms.size() == 5);
  CHECK(cos.terms[0].coefficient == 1.0);
  CHECK(cos.terms[1].coefficient == doctest::Approx(-1.0 / 9));
  CHECK(cos.terms[2].coefficient == doctest::Approx(-1.0 / 25));
  CHECK(cos.terms[4].index == 9);
  CHECK(cos.terms[4].coefficient == 0.0);
  const auto sin = decomposition_coefficients(Target::Sin, 7);
  CHECK(sin.terms[1].coefficient == doctest::Approx(1.0 / 9));
  CHECK(sin.terms[2].coefficient == doctest::Approx(-1.0 / 25));
  CHECK(sin.terms[3].coefficient == doctest::Approx(1.0 / 49));
  CHECK(cos.terms[0].weight() == doctest::Approx(1.0 / mu_constant()));
  CHECK(cos.terms[0].function(Target::Cos) == BasisFunction::cos_like(1, true));
  CHECK_THROWS_AS(decomposition_coefficients(Target::Cos, 0), std::invalid_argument);
}

TEST_CASE("frozen decomposition errors") {
  // Independent Parseval computation (tests/reference/compute_reference.py).
  const std::array<std::pair<std::int64_t, double>, 4> ref = {{{9, 0.012526937385511583},
                                                               {19, 0.003960698584240515},
                                                               {49, 0.0010811377672445416},
                                                               {99, 0.00037004538324834495}}};
  for (Target t : {Target::Cos, Target::Sin}) {
    double prev = INFINITY;
    for (const auto& [l, e] : ref) {
      const double err = decomposition_l2_error(decomposition_coefficients(t, l));
      CHECK(err == doctest::Approx(e).epsilon(1e-9));
      CHECK(err < prev);
      prev = err;
    }
  }
}

TEST_CASE("decomposition series converges pointwise") {
  const auto series = decomposition_coefficients(Target::Cos, 999);
  for (double x : {0.0, 0.13, 0.5, 0.71}) {
    CHECK(series.evaluate(x) == doctest::Approx(std::sqrt(2.0) * std::cos(2 * M_PI * x)).scale(1.0).epsilon(1e-4));
  }
}

TEST_CASE("tensor decomposition coefficients") {
  const double r = 1.0 / (std::sqrt(2.0) * mu_constant());
  const std::array<std::int64_t, 2> k = {1, 1};
  {
    const std::array<Target, 2> kinds = {Target::Cos, Target::Cos};
    const auto terms = tensor_decomposition_2d(kinds, k, 1);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].function == BasisFunction::cos_like(RidgeIndex(vec({1, -1})), true));
    CHECK(terms[0].coefficient == doctest::Approx(r));
    CHECK(terms[1].function == BasisFunction::cos_like(RidgeIndex(vec({1, 1})), true));
    CHECK(terms[1].coefficient == doctest::Approx(r));
  }
  {
    const std::array<Target, 2> kinds = {Target::Sin, Target::Sin};
    const auto terms = tensor_decomposition_2d(kinds, k, 1);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].function.index().alpha() == vec({1, -1}));
    CHECK(terms[0].coefficient == doctest::Approx(r));
    CHECK(terms[1].function.index().alpha() == vec({1, 1}));
    CHECK(terms[1].coefficient == doctest::Approx(-r));
  }
  {
    const std::array<Target, 2> kinds = {Target::Cos, Target::Sin};
    const auto terms = tensor_decomposition_2d(kinds, k, 1);
    REQUIRE(terms.size() == 2);
    CHECK(terms[1].function == BasisFunction::sin_like(RidgeIndex(vec({1, 1})), true));
    CHECK(terms[1].coefficient == doctest::Approx(r));
    CHECK(terms[0].function.kind() == BasisKind::SinLike);
  }
  const std::array<Target, 1> one = {Target::Cos};
  const std::array<std::int64_t, 1> k1 = {1};
  CHECK_THROWS_AS(tensor_decomposition_2d(one, k1, 3), std::invalid_argument);
}

TEST_CASE("tensor decomposition errors reduce to the univariate ones") {
  // For k = (1,1) the residual splits over two primitive ridges whose
  // harmonics are disjoint, so the error equals the univariate error.
  const double mu = mu_constant();
  const std::array<std::pair<std::int64_t, double>, 3> ref = {
      {{1, std::sqrt(1.0 / (mu * mu) - 1.0)}, {9, 0.012526937385511583}, {19, 0.003960698584240515}}};
  const std::array<std::int64_t, 2> k = {1, 1};
  for (Target a : {Target::Cos, Target::Sin}) {
    for (Target b : {Target::Cos, Target::Sin}) {
      const std::array<Target, 2> kinds = {a, b};
      for (const auto& [l, e] : ref) {
        const auto terms = tensor_decomposition_2d(kinds, k, l);
        CHECK(tensor_l2_error(kinds, k, terms) == doctest::Approx(e).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("tensor decomposition with unequal frequencies") {
  const std::array<std::int64_t, 2> k = {2, 3};
  const std::array<Target, 2> kinds = {Target::Sin, Target::Cos};
  const double e1 = tensor_l2_error(kinds, k, tensor_decomposition_2d(kinds, k, 1));
  const double e9 = tensor_l2_error(kinds, k, tensor_decomposition_2d(kinds, k, 9));
  CHECK(e9 < e1);
  CHECK(e9 < 0.02);
}
