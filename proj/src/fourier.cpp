#include "riesz/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "riesz/gram.hpp"
#include "riesz/numtheory.hpp"
#include "riesz/oracle.hpp"
#include "riesz/summation.hpp"

namespace riesz::fourier {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double trig(Target t, double theta) {
  return std::numbers::sqrt2 * (t == Target::Cos ? std::cos(kTwoPi * theta) : std::sin(kTwoPi * theta));
}

double decomposition_coefficient(Target target, std::int64_t l) {
  const int mu = numtheory::moebius(l);
  if (mu == 0) return 0.0;
  double c = static_cast<double>(mu) / (static_cast<double>(l) * static_cast<double>(l));
  if (target == Target::Sin && ((l - 1) / 2) % 2 != 0) c = -c;
  return c;
}

}  // namespace

double mu_constant() { return std::sqrt(96.0) / (std::numbers::pi * std::numbers::pi); }

double FourierExpansion::evaluate(const Eigen::Ref<const VectorXd>& x) const {
  const IntVector& alpha = base_frequency.alpha();
  if (x.size() != alpha.size()) throw std::invalid_argument("FourierExpansion::evaluate: dimension mismatch");
  double t = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) t += static_cast<double>(alpha[i]) * x[i];
  const Target kind = parity == Parity::CosLike ? Target::Cos : Target::Sin;
  CompensatedSum<double> sum;
  for (const auto& term : terms) sum.add(term.coefficient * trig(kind, static_cast<double>(term.harmonic) * t));
  return sum.value();
}

double FourierExpansion::l2_norm() const {
  CompensatedSum<double> sum;
  for (const auto& term : terms) sum.add(term.coefficient * term.coefficient);
  return std::sqrt(sum.value());
}

FourierExpansion fourier_expansion(const BasisFunction& f, std::int64_t m) {
  if (f.is_constant()) throw std::invalid_argument("fourier_expansion: the constant has no expansion");
  if (m < 1) throw std::invalid_argument("fourier_expansion: truncation must be positive");
  const Parity parity = f.kind() == BasisKind::CosLike ? Parity::CosLike : Parity::SinLike;
  FourierExpansion out{f.index(), parity, {}};
  out.terms.reserve(static_cast<std::size_t>(m));
  const double lead = mu_constant() * f.scale() / std::sqrt(3.0);
  for (std::int64_t k = 0; k < m; ++k) {
    const std::int64_t h = 2 * k + 1;
    double c = lead / (static_cast<double>(h) * static_cast<double>(h));
    if (parity == Parity::SinLike && k % 2 != 0) c = -c;
    out.terms.push_back({h, c});
  }
  return out;
}

BasisFunction DecompositionTerm::function(Target target) const {
  return target == Target::Cos ? BasisFunction::cos_like(index, true) : BasisFunction::sin_like(index, true);
}

double DecompositionTerm::weight() const { return coefficient / mu_constant(); }

double DecompositionSeries::evaluate(double x) const {
  CompensatedSum<double> sum;
  for (const auto& term : terms) {
    if (term.coefficient == 0.0) continue;
    const double t = static_cast<double>(term.index) * x;
    const double v = target == Target::Cos ? eval_c(t) : eval_s(t);
    sum.add(term.weight() * std::sqrt(3.0) * v);
  }
  return sum.value();
}

DecompositionSeries decomposition_coefficients(Target target, std::int64_t truncation) {
  if (truncation < 1) throw std::invalid_argument("decomposition_coefficients: truncation must be ≥ 1");
  DecompositionSeries out{target, {}};
  for (std::int64_t l = 1; l <= truncation; l += 2) out.terms.push_back({l, decomposition_coefficient(target, l)});
  return out;
}

double decomposition_l2_error(const DecompositionSeries& series) {
  std::vector<double> points = oracle::uniform_partition(256);
  for (const auto& term : series.terms) {
    if (term.coefficient == 0.0) continue;
    const auto bp = series.target == Target::Cos ? breakpoints_c(term.index) : breakpoints_s(term.index);
    points.insert(points.end(), bp.begin(), bp.end());
  }
  points = oracle::merge_partitions(std::move(points));
  const double err2 = oracle::integrate_1d(
      [&](double x) {
        const double r = trig(series.target, x) - series.evaluate(x);
        return r * r;
      },
      points, 8);
  return std::sqrt(std::max(0.0, err2));
}

std::int64_t convolution_sum(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("convolution_sum: n must be positive");
  std::int64_t sum = 0;
  for (std::int64_t l = 1; l * l <= n; ++l) {
    if (n % l != 0) continue;
    const std::int64_t m = n / l;
    auto term = [](std::int64_t b, std::int64_t a) -> std::int64_t {
      const std::int64_t beta = b % 2 == 0 ? 0 : numtheory::moebius(b);
      const std::int64_t alpha = a % 2 == 0 ? 0 : 1;
      return beta * alpha;
    };
    sum += term(l, m);
    if (m != l) sum += term(m, l);
  }
  return sum;
}

bool convolution_identity_check(std::int64_t n) { return convolution_sum(n) == (n == 1 ? 1 : 0); }

double coefficient_matching_inner_product(Parity parity, std::int64_t i, std::int64_t j, std::int64_t m) {
  if (i < 1 || j < 1 || m < 0) throw std::invalid_argument("coefficient_matching_inner_product: bad arguments");
  long double sum = 0.0L;
  for (std::int64_t a = 0; a <= m; ++a) {
    const std::int64_t p = 2 * a + 1;
    if ((p * i) % j != 0) continue;
    const std::int64_t q = p * i / j;
    if (q % 2 == 0 || (q - 1) / 2 > m) continue;
    long double term = 1.0L / (static_cast<long double>(p) * p * static_cast<long double>(q) * q);
    if (parity == Parity::SinLike && ((p - 1) / 2 + (q - 1) / 2) % 2 != 0) term = -term;
    sum += term;
  }
  const long double mu = mu_constant();
  return static_cast<double>(mu * mu * sum / 3.0L);
}

namespace {

void check_tensor_args(std::span<const Target> kinds, std::span<const std::int64_t> frequencies) {
  if (kinds.size() != 2 || frequencies.size() != 2) {
    throw std::invalid_argument("tensor_decomposition_2d: unsupported arity " + std::to_string(kinds.size()) +
                                " (only two factors are implemented)");
  }
  for (auto k : frequencies) {
    if (k < 1) throw std::invalid_argument("tensor_decomposition_2d: frequencies must be positive");
  }
}

}  // namespace

std::vector<RidgeTerm> tensor_decomposition_2d(std::span<const Target> kinds,
                                               std::span<const std::int64_t> frequencies,
                                               std::int64_t truncation) {
  check_tensor_args(kinds, frequencies);
  if (truncation < 1) throw std::invalid_argument("tensor_decomposition_2d: truncation must be ≥ 1");
  const int sin_count = static_cast<int>(std::count(kinds.begin(), kinds.end(), Target::Sin));
  const Target series_kind = sin_count % 2 == 1 ? Target::Sin : Target::Cos;
  const double prefactor = ((sin_count / 2) % 2 == 0 ? 1.0 : -1.0) / 2.0;
  const double to_ridge = 1.0 / (std::numbers::sqrt2 * mu_constant());
  const auto series = decomposition_coefficients(series_kind, truncation);

  std::map<std::pair<int, std::vector<std::int64_t>>, double> merged;
  for (int e1 : {-1, 1}) {
    for (int e2 : {-1, 1}) {
      const int e[2] = {e1, e2};
      double sign_weight = 1.0;
      for (int u = 0; u < 2; ++u) {
        if (kinds[u] == Target::Sin) sign_weight *= e[u];
      }
      for (const auto& term : series.terms) {
        if (term.coefficient == 0.0) continue;
        IntVector gamma(2);
        gamma << e1 * frequencies[0] * term.index, e2 * frequencies[1] * term.index;
        bool flipped = false;
        const RidgeIndex idx = RidgeIndex::normalized(gamma, &flipped);
        double c = prefactor * sign_weight * term.coefficient * to_ridge;
        if (flipped && series_kind == Target::Sin) c = -c;
        auto& slot = merged[{series_kind == Target::Cos ? 0 : 1,
                             std::vector<std::int64_t>(idx.alpha().data(), idx.alpha().data() + 2)}];
        slot += c;
      }
    }
  }

  std::vector<RidgeTerm> out;
  for (const auto& [key, c] : merged) {
    if (c == 0.0) continue;
    IntVector alpha(2);
    alpha << key.second[0], key.second[1];
    RidgeIndex idx(std::move(alpha));
    out.push_back({key.first == 0 ? BasisFunction::cos_like(std::move(idx), true)
                                  : BasisFunction::sin_like(std::move(idx), true),
                   c});
  }
  return out;
}

double tensor_product_value(std::span<const Target> kinds, std::span<const std::int64_t> frequencies,
                            const Eigen::Ref<const VectorXd>& x) {
  check_tensor_args(kinds, frequencies);
  if (x.size() != 2) throw std::invalid_argument("tensor_product_value: point must be two-dimensional");
  return trig(kinds[0], static_cast<double>(frequencies[0]) * x[0]) *
         trig(kinds[1], static_cast<double>(frequencies[1]) * x[1]);
}

double tensor_l2_error(std::span<const Target> kinds, std::span<const std::int64_t> frequencies,
                       const std::vector<RidgeTerm>& terms) {
  check_tensor_args(kinds, frequencies);
  const oracle::Target product = [&](const Eigen::Ref<const VectorXd>& x) {
    return tensor_product_value(kinds, frequencies, x);
  };
  std::int64_t max_l1 = frequencies[0] + frequencies[1];
  for (const auto& t : terms) max_l1 = std::max(max_l1, t.function.index().l1_norm());
  const oracle::QuadratureSpec spec = smooth_target_spec(2, max_l1);

  CompensatedSum<double> err2;
  err2.add(1.0);  // both factors have unit norm
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& fi = terms[i].function;
    err2.add(-2.0 * terms[i].coefficient * oracle::project_oracle(product, fi, spec));
    for (std::size_t j = 0; j < terms.size(); ++j) {
      const auto& fj = terms[j].function;
      const double g = inner_product_analytic(fi, fj).to_double() * fi.scale() * fj.scale();
      err2.add(terms[i].coefficient * terms[j].coefficient * g);
    }
  }
  return std::sqrt(std::max(0.0, err2.value()));
}

}  // namespace riesz::fourier
