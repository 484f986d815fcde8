#include "riesz/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "riesz/summation.hpp"

namespace riesz::oracle {

namespace {

constexpr int kMaxGaussOrder = 16;

struct GaussTable {
  std::array<std::vector<double>, kMaxGaussOrder + 1> nodes;
  std::array<std::vector<double>, kMaxGaussOrder + 1> weights;
};

// Newton iteration on P_n in long double, seeded with the Chebyshev-like
// approximation cos(π(i − 1/4)/(n + 1/2)).
GaussTable build_gauss_table() {
  GaussTable table;
  for (int n = 1; n <= kMaxGaussOrder; ++n) {
    auto& xs = table.nodes[n];
    auto& ws = table.weights[n];
    xs.assign(n, 0.0);
    ws.assign(n, 0.0);
    for (int i = 1; i <= (n + 1) / 2; ++i) {
      long double z = std::cos(std::numbers::pi_v<long double> * (i - 0.25L) / (n + 0.5L));
      long double dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        long double p0 = 1, p1 = 0;
        for (int j = 1; j <= n; ++j) {
          const long double p2 = p1;
          p1 = p0;
          p0 = ((2.0L * j - 1.0L) * z * p1 - (j - 1.0L) * p2) / j;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0L);
        const long double step = p0 / dp;
        z -= step;
        if (std::fabs(step) < 1e-19L) break;
      }
      const long double w = 2.0L / ((1.0L - z * z) * dp * dp);
      xs[i - 1] = static_cast<double>(-z);
      xs[n - i] = static_cast<double>(z);
      ws[i - 1] = ws[n - i] = static_cast<double>(w);
    }
    if (n % 2 == 1) xs[n / 2] = 0.0;
  }
  return table;
}

const GaussTable& gauss_table() {
  static const GaussTable table = build_gauss_table();
  return table;
}

void check_order(int order) {
  if (order < 1 || order > kMaxGaussOrder) {
    throw std::invalid_argument("Gauss–Legendre order must be in 1..16, got " + std::to_string(order));
  }
}

// One ridge factor scale·profile(coeff·x) of the integrand.
struct Factor {
  BasisKind kind;
  std::vector<double> coeff;
  double scale;
};

// Appends the t ∈ (0,1) at which profile(offset + slope·t) has a kink.
void append_kinks(BasisKind kind, double offset, double slope, std::vector<double>& out) {
  if (slope == 0.0 || kind == BasisKind::Constant) return;
  // 𝒞 kinks where 2a ∈ ℤ, 𝒮 kinks where 2(a − 1/4) ∈ ℤ.
  const double shift = kind == BasisKind::CosLike ? 0.0 : 0.25;
  const double a0 = offset;
  const double a1 = offset + slope;
  const double lo = std::min(a0, a1) - shift;
  const double hi = std::max(a0, a1) - shift;
  const auto k_lo = static_cast<std::int64_t>(std::ceil(2.0 * lo));
  const auto k_hi = static_cast<std::int64_t>(std::floor(2.0 * hi));
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const double t = (0.5 * static_cast<double>(k) + shift - offset) / slope;
    if (t > 0.0 && t < 1.0) out.push_back(t);
  }
}

// Nested integration over [0,1]^d. The innermost axis is split at every kink
// of every factor, so for pure ridge products it is exact. Outer axes combine
// a uniform grid with the kinks that make the slice integral non-smooth:
// factors independent of all inner axes, and (one level above the innermost)
// the points where a kink crosses the faces of the innermost axis.
class NestedIntegrator {
 public:
  NestedIntegrator(std::vector<Factor> factors, const Target* weight, int dim,
                   const QuadratureSpec& spec)
      : factors_(std::move(factors)),
        weight_(weight),
        dim_(dim),
        spec_(spec),
        x_(VectorXd::Zero(dim)),
        scratch_(static_cast<std::size_t>(dim)) {
    choose_axis_order();
  }

  double run() { return level(0); }

 private:
  void choose_axis_order() {
    std::vector<int> axes(static_cast<std::size_t>(dim_));
    for (int a = 0; a < dim_; ++a) axes[a] = a;
    auto dependents = [&](int axis) {
      int count = 0;
      for (const auto& f : factors_) count += f.coeff[axis] != 0.0 ? 1 : 0;
      return count;
    };
    // Innermost axis: one where exactly one of two factors varies makes the
    // inner integral span whole periods of a mean-zero profile; otherwise
    // prefer axes on which every factor varies.
    auto innermost_score = [&](int axis) {
      const int c = dependents(axis);
      if (weight_ == nullptr && factors_.size() == 2 && c == 1) return 3;
      if (c == static_cast<int>(factors_.size()) && c > 0) return 2;
      return c > 0 ? 1 : 0;
    };
    int best = 0;
    for (int a = 1; a < dim_; ++a) {
      if (innermost_score(a) > innermost_score(best)) best = a;
    }
    order_.clear();
    for (int a : axes) {
      if (a != best) order_.push_back(a);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return dependents(a) < dependents(b); });
    order_.push_back(best);
  }

  double integrand() const {
    double v = weight_ != nullptr ? (*weight_)(x_) : 1.0;
    for (const auto& f : factors_) {
      double t = 0.0;
      for (int a = 0; a < dim_; ++a) t += f.coeff[a] * x_[a];
      v *= f.scale * eval_profile(f.kind, t);
    }
    return v;
  }

  void build_partition(int lvl, std::vector<double>& part) const {
    const int axis = order_[lvl];
    const bool innermost = lvl == dim_ - 1;
    part.clear();
    const int cells = (innermost && weight_ == nullptr) ? 1 : spec_.points_per_axis;
    for (int i = 0; i <= cells; ++i) part.push_back(static_cast<double>(i) / cells);
    part.back() = 1.0;
    if (dim_ == 1) {
      for (double t : spec_.target_breakpoints) {
        if (t > 0.0 && t < 1.0) part.push_back(t);
      }
    }
    if (!spec_.align_to_kinks && !innermost) return;

    for (const auto& f : factors_) {
      const double slope = f.coeff[axis];
      if (slope == 0.0) continue;
      double offset = 0.0;
      for (int j = 0; j < lvl; ++j) offset += f.coeff[order_[j]] * x_[order_[j]];
      bool inner_independent = true;
      for (int j = lvl + 1; j < dim_; ++j) inner_independent &= f.coeff[order_[j]] == 0.0;
      if (innermost || inner_independent) append_kinks(f.kind, offset, slope, part);
      if (lvl == dim_ - 2) {
        const double inner = f.coeff[order_[dim_ - 1]];
        if (inner != 0.0) {
          append_kinks(f.kind, offset, slope, part);
          append_kinks(f.kind, offset + inner, slope, part);
        }
      }
    }
    std::sort(part.begin(), part.end());
    part.erase(std::unique(part.begin(), part.end()), part.end());
  }

  double level(int lvl) {
    auto& part = scratch_[lvl];
    build_partition(lvl, part);
    const int axis = order_[lvl];
    const bool innermost = lvl == dim_ - 1;
    // Products of two affine pieces are quadratics: two points are exact.
    const int order = (innermost && weight_ == nullptr) ? std::min(spec_.gauss_order, 2) : spec_.gauss_order;
    const auto nodes = gauss_nodes(order);
    const auto weights = gauss_weights(order);
    CompensatedSum<double> sum;
    for (std::size_t i = 0; i + 1 < part.size(); ++i) {
      const double a = part[i];
      const double b = part[i + 1];
      const double half = 0.5 * (b - a);
      if (half <= 0.0) continue;
      const double mid = 0.5 * (a + b);
      for (int q = 0; q < order; ++q) {
        x_[axis] = mid + half * nodes[q];
        const double v = innermost ? integrand() : level(lvl + 1);
        sum.add(weights[q] * half * v);
      }
    }
    return sum.value();
  }

  std::vector<Factor> factors_;
  const Target* weight_;
  int dim_;
  QuadratureSpec spec_;
  VectorXd x_;
  std::vector<int> order_;
  std::vector<std::vector<double>> scratch_;
};

Factor to_factor(const BasisFunction& f) {
  Factor out{f.kind(), {}, f.scale()};
  const IntVector& alpha = f.index().alpha();
  out.coeff.resize(static_cast<std::size_t>(alpha.size()));
  for (Eigen::Index i = 0; i < alpha.size(); ++i) out.coeff[i] = static_cast<double>(alpha[i]);
  return out;
}

// Canonical argument order so that oracle(f, g) and oracle(g, f) run the
// identical computation.
bool canonically_before(const BasisFunction& a, const BasisFunction& b) {
  if (a.kind() != b.kind()) return static_cast<int>(a.kind()) < static_cast<int>(b.kind());
  if (a.is_constant()) return a.normalized() < b.normalized();
  if (a.index() == b.index()) return a.normalized() < b.normalized();
  return a.index() < b.index();
}

double integrate_pair(const BasisFunction& f, const BasisFunction& g, const QuadratureSpec& spec) {
  const BasisFunction& first = canonically_before(g, f) ? g : f;
  const BasisFunction& second = canonically_before(g, f) ? f : g;
  std::vector<Factor> factors;
  double constant = 1.0;
  for (const BasisFunction* h : {&first, &second}) {
    if (h->is_constant()) {
      constant *= h->scale();
    } else {
      factors.push_back(to_factor(*h));
    }
  }
  if (factors.empty()) return constant;
  NestedIntegrator integrator(std::move(factors), nullptr, static_cast<int>(f.dim()), spec);
  return constant * integrator.run();
}

}  // namespace

std::span<const double> gauss_nodes(int order) {
  check_order(order);
  return gauss_table().nodes[order];
}

std::span<const double> gauss_weights(int order) {
  check_order(order);
  return gauss_table().weights[order];
}

void validate(const QuadratureSpec& spec) {
  if (spec.dimension < 1) throw std::invalid_argument("QuadratureSpec: dimension must be positive");
  if (spec.points_per_axis < 1) throw std::invalid_argument("QuadratureSpec: points_per_axis must be positive");
  if (spec.rule == QuadratureRule::ExactPiecewise && spec.dimension != 1) {
    throw std::invalid_argument("QuadratureSpec: exact_piecewise requires dimension 1");
  }
  if (spec.rule == QuadratureRule::ExactPiecewise && !spec.align_to_kinks) {
    throw std::invalid_argument("QuadratureSpec: exact_piecewise requires kink alignment");
  }
  check_order(spec.gauss_order);
  if (!spec.target_breakpoints.empty() && spec.dimension != 1) {
    throw std::invalid_argument("QuadratureSpec: target breakpoints are supported in dimension 1 only");
  }
}

QuadratureSpec exact_spec_1d() {
  QuadratureSpec spec;
  spec.dimension = 1;
  spec.points_per_axis = 1;
  spec.rule = QuadratureRule::ExactPiecewise;
  spec.reported_error_bound = 1e-13;
  return spec;
}

QuadratureSpec default_spec(int dimension, std::int64_t max_l1) {
  if (dimension < 1 || dimension > kMaxOracleDimension) {
    throw std::invalid_argument("default_spec: unsupported dimension " + std::to_string(dimension));
  }
  if (dimension == 1) return exact_spec_1d();
  const auto scale = std::max<std::int64_t>(1, max_l1);
  QuadratureSpec spec;
  spec.dimension = dimension;
  spec.rule = QuadratureRule::CompositeGauss;
  // Bounds are about ten times the worst error seen over a few thousand
  // random pairs; unaligned kinks on the outer axes dominate.
  if (dimension == 2) {
    spec.points_per_axis = static_cast<int>(64 * scale);
    spec.reported_error_bound = 1e-8;
  } else {
    spec.points_per_axis = static_cast<int>(4 * scale);
    spec.reported_error_bound = 1e-6;
  }
  return spec;
}

double inner_product_oracle_1d(const BasisFunction& f, const BasisFunction& g) {
  if (f.dim() != 1 || g.dim() != 1) {
    throw std::invalid_argument("inner_product_oracle_1d: both functions must be univariate");
  }
  return integrate_pair(f, g, exact_spec_1d());
}

double inner_product_oracle_nd(const BasisFunction& f, const BasisFunction& g,
                               const QuadratureSpec& spec) {
  validate(spec);
  if (f.dim() != g.dim() || f.dim() != spec.dimension) {
    throw std::invalid_argument("inner_product_oracle_nd: dimension mismatch");
  }
  if (spec.dimension > kMaxOracleDimension) {
    throw std::invalid_argument("inner_product_oracle_nd: dimension " + std::to_string(spec.dimension) +
                                " is not supported (d ≤ 3)");
  }
  for (const BasisFunction* h : {&f, &g}) {
    if (!h->is_constant() && h->index().l1_norm() > kMaxOracleL1) {
      throw std::domain_error("inner_product_oracle_nd: frequency " + h->str() +
                              " too large for the oracle tolerance (‖α‖₁ ≤ 32)");
    }
  }
  return integrate_pair(f, g, spec);
}

double inner_product_oracle_nd(const BasisFunction& f, const BasisFunction& g) {
  std::int64_t max_l1 = 1;
  for (const BasisFunction* h : {&f, &g}) {
    if (!h->is_constant()) max_l1 = std::max(max_l1, h->index().l1_norm());
  }
  return inner_product_oracle_nd(f, g, default_spec(static_cast<int>(f.dim()), max_l1));
}

double project_oracle(const Target& target, const BasisFunction& g, const QuadratureSpec& spec) {
  validate(spec);
  if (g.dim() != spec.dimension) throw std::invalid_argument("project_oracle: dimension mismatch");
  if (spec.dimension > kMaxOracleDimension) {
    throw std::invalid_argument("project_oracle: dimension " + std::to_string(spec.dimension) +
                                " is not supported (d ≤ 3)");
  }
  std::vector<Factor> factors;
  if (!g.is_constant()) factors.push_back(to_factor(g));
  const double constant = g.is_constant() ? g.scale() : 1.0;
  NestedIntegrator integrator(std::move(factors), &target, spec.dimension, spec);
  return constant * integrator.run();
}

double integrate_1d(const std::function<double(double)>& f, std::span<const double> partition,
                    int order) {
  const auto nodes = gauss_nodes(order);
  const auto weights = gauss_weights(order);
  CompensatedSum<double> sum;
  for (std::size_t i = 0; i + 1 < partition.size(); ++i) {
    const double half = 0.5 * (partition[i + 1] - partition[i]);
    if (half <= 0.0) continue;
    const double mid = 0.5 * (partition[i + 1] + partition[i]);
    for (int q = 0; q < order; ++q) sum.add(weights[q] * half * f(mid + half * nodes[q]));
  }
  return sum.value();
}

double integrate_box(const Target& f, int dimension, int cells_per_axis, int order) {
  QuadratureSpec spec;
  spec.dimension = dimension;
  spec.rule = QuadratureRule::CompositeGauss;
  spec.points_per_axis = cells_per_axis;
  spec.gauss_order = order;
  spec.align_to_kinks = false;
  validate(spec);
  NestedIntegrator integrator({}, &f, dimension, spec);
  return integrator.run();
}

std::vector<double> merge_partitions(std::vector<double> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

std::vector<double> uniform_partition(int cells) {
  if (cells < 1) throw std::invalid_argument("uniform_partition: cells must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) out.push_back(static_cast<double>(i) / cells);
  return out;
}

}  // namespace riesz::oracle
