#include <doctest.h>

#include <random>

#include "riesz/basis.hpp"
#include "riesz/oracle.hpp"

using namespace riesz;

namespace {
IntVector vec(std::initializer_list<std::int64_t> v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) out[i++] = x;
  return out;
}
VectorXd pt(std::initializer_list<double> v) {
  VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (auto x : v) out[i++] = x;
  return out;
}
}  // namespace

TEST_CASE("profile values") {
  CHECK(eval_c(0.0) == 1.0);
  CHECK(eval_c(0.5) == -1.0);
  CHECK(eval_c(2.4) == doctest::Approx(-0.6).epsilon(1e-14));
  CHECK(eval_s(0.25) == 1.0);
  CHECK(eval_s(0.0) == 0.0);
  CHECK(eval_s(0.875) == -0.5);
  CHECK(eval_c(0.25) == 0.0);
  CHECK(eval_s(0.5) == 0.0);
  CHECK(eval_s(0.75) == -1.0);
  CHECK_THROWS_AS(eval_c(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(eval_s(INFINITY), std::domain_error);
}

TEST_CASE("profiles templated on the scalar type") {
  CHECK(eval_c(0.1L) == doctest::Approx(0.6));
  CHECK(eval_s(0.1f) == doctest::Approx(0.4f));
}

TEST_CASE("ridge evaluation") {
  CHECK(eval_ridge(BasisFunction::cos_like(RidgeIndex(vec({1, 1}))), pt({0.25, 0.25})) == -1.0);
  CHECK(eval_ridge(BasisFunction::sin_like(5), pt({0.05})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eval_ridge(BasisFunction::constant(3), pt({0.1, 0.2, 0.3})) == 1.0);
  CHECK(eval_ridge(BasisFunction::cos_like(1, true), pt({0.0})) == doctest::Approx(std::sqrt(3.0)));
  CHECK_THROWS_AS(eval_ridge(BasisFunction::cos_like(1), pt({0.1, 0.2})), std::invalid_argument);
}

TEST_CASE("ridge index validation") {
  CHECK_THROWS_AS(RidgeIndex(vec({-1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(RidgeIndex(vec({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(RidgeIndex::scalar(0), std::invalid_argument);
  CHECK_THROWS_AS(RidgeIndex(vec({kMaxFrequencyL1, 1})), std::invalid_argument);
  bool flipped = false;
  const auto r = RidgeIndex::normalized(vec({0, -2, 3}), &flipped);
  CHECK(flipped);
  CHECK(r.alpha() == vec({0, 2, -3}));
  CHECK(r.l1_norm() == 5);
  CHECK(r.str() == "0,2,-3");
  CHECK_THROWS_AS(BasisFunction::constant(2).index(), std::logic_error);
  CHECK(BasisFunction::sin_like(RidgeIndex(vec({1, -2})), true).str() == "sqrt3*S:1,-2");
}

TEST_CASE("index enumeration") {
  const auto one = enumerate_indices(1, 3);
  REQUIRE(one.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(one[k] == RidgeIndex::scalar(k + 1));

  const auto two = enumerate_indices(2, 1);
  REQUIRE(two.size() == 4);
  CHECK(two[0].alpha() == vec({0, 1}));
  CHECK(two[1].alpha() == vec({1, -1}));
  CHECK(two[2].alpha() == vec({1, 0}));
  CHECK(two[3].alpha() == vec({1, 1}));

  for (std::int64_t m = 1; m <= 6; ++m) {
    CHECK(enumerate_indices(2, m).size() == static_cast<std::size_t>(((2 * m + 1) * (2 * m + 1) - 1) / 2));
  }
  CHECK(enumerate_indices(3, 2).size() == static_cast<std::size_t>((125 - 1) / 2));
  const auto three = enumerate_indices(3, 2);
  CHECK(std::is_sorted(three.begin(), three.end()));
}

TEST_CASE("breakpoints") {
  CHECK(breakpoints_c(1) == std::vector<double>{0, 0.5, 1});
  CHECK(breakpoints_s(1) == std::vector<double>{0, 0.25, 0.75, 1});
  CHECK(breakpoints_c(2) == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
  CHECK(breakpoints_s(2) == std::vector<double>{0, 0.125, 0.375, 0.625, 0.875, 1});
}

TEST_CASE("periodicity, range, symmetry and shift identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 10000; ++i) {
    const double t = u(rng);
    const double tol = 16 * eps * (std::fabs(t) + 1.0);
    REQUIRE(std::fabs(eval_c(t) - eval_c(t + 1.0)) <= tol);
    REQUIRE(std::fabs(eval_s(t) - eval_s(t + 1.0)) <= tol);
    REQUIRE(std::fabs(eval_c(t)) <= 1.0);
    REQUIRE(std::fabs(eval_s(t)) <= 1.0);
    REQUIRE(std::fabs(eval_c(-t) - eval_c(t)) <= tol);
    REQUIRE(std::fabs(eval_s(-t) + eval_s(t)) <= tol);
    REQUIRE(std::fabs(eval_s(t) - eval_c(t - 0.25)) <= tol);
  }
}

TEST_CASE("profiles are affine between breakpoints") {
  for (std::int64_t k : {1, 2, 3, 7, 16}) {
    for (bool cos : {true, false}) {
      const auto bp = cos ? breakpoints_c(k) : breakpoints_s(k);
      for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double a = bp[i];
        const double h = (bp[i + 1] - a) / 40.0;
        for (int j = 1; j < 39; ++j) {
          auto f = [&](double x) { return cos ? eval_c(k * x) : eval_s(k * x); };
          const double x = a + j * h;
          REQUIRE(std::fabs(f(x - h) - 2 * f(x) + f(x + h)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("basis functions have mean zero") {
  const auto one = BasisFunction::constant(1);
  for (std::int64_t k = 1; k <= 64; ++k) {
    REQUIRE(std::fabs(oracle::inner_product_oracle_1d(one, BasisFunction::cos_like(k))) <= 1e-14);
    REQUIRE(std::fabs(oracle::inner_product_oracle_1d(one, BasisFunction::sin_like(k))) <= 1e-14);
  }
}
