#include "riesz/gram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "riesz/numtheory.hpp"

namespace riesz {

namespace {

using int128 = Rational::int128;

Rational odd_ratio_value(bool cos, std::int64_t a, std::int64_t b) {
  const int128 den = int128{3} * a * a * b * b;
  int sign = 1;
  if (!cos && ((a - 1) / 2 + (b - 1) / 2) % 2 != 0) sign = -1;
  return Rational(sign, den);
}

Rational raw_entry(const BasisFunction& f, const BasisFunction& g,
                   const numtheory::PrimitiveDecomposition* pf,
                   const numtheory::PrimitiveDecomposition* pg) {
  if (f.is_constant() || g.is_constant()) {
    return (f.is_constant() && g.is_constant()) ? Rational(1) : Rational(0);
  }
  if (f.kind() != g.kind()) return Rational(0);
  const bool cos = f.kind() == BasisKind::CosLike;
  if (f.dim() == 1) return univariate_inner_product(cos, f.index()[0], g.index()[0]);
  const auto ratio = numtheory::odd_ratio(*pf, *pg);
  if (!ratio) return Rational(0);
  return odd_ratio_value(cos, ratio->p_num, ratio->q_den);
}

double normalized_scale(const BasisFunction& f, const BasisFunction& g, bool normalized) {
  if (!normalized || f.is_constant() || g.is_constant()) return 1.0;
  return 3.0;
}

struct UnionFind {
  explicit UnionFind(Eigen::Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  }
  Eigen::Index find(Eigen::Index i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(Eigen::Index a, Eigen::Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Eigen::Index> parent;
};

// Components of the exact nonzero pattern, each listed in increasing index order.
std::vector<std::vector<Eigen::Index>> components(const MatrixXd& m) {
  const Eigen::Index n = m.rows();
  UnionFind uf(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      if (m(i, j) != 0.0) uf.unite(i, j);
    }
  }
  std::vector<std::vector<Eigen::Index>> out;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index root = uf.find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<Eigen::Index>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(i);
  }
  return out;
}

SpectralSummary dense_extremes(const MatrixXd& block, double tolerance) {
  SpectralSummary s;
  s.n = block.rows();
  s.blocks = 1;
  s.largest_block = s.n;
  if (s.n == 1) {
    s.lambda_min = s.lambda_max = block(0, 0);
    s.residual_norms = {0.0, 0.0};
    return s;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXd> solver(block, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("dense symmetric eigensolver did not converge", 0, 0.0);
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  s.lambda_min = values[0];
  s.lambda_max = values[s.n - 1];
  const double r_min = (block * vectors.col(0) - values[0] * vectors.col(0)).norm();
  const double r_max = (block * vectors.col(s.n - 1) - values[s.n - 1] * vectors.col(s.n - 1)).norm();
  s.residual_norms = {r_min, r_max};
  const double worst = std::max(r_min, r_max);
  if (worst > tolerance) {
    throw ConvergenceError("dense eigensolver residual " + format_double(worst) + " above tolerance", 0, worst);
  }
  return s;
}

}  // namespace

Rational univariate_inner_product(bool cos, std::int64_t i, std::int64_t j) {
  if (i < 1 || j < 1) throw std::invalid_argument("univariate_inner_product: indices must be positive");
  const std::int64_t g = std::gcd(i, j);
  const std::int64_t a = i / g;
  const std::int64_t b = j / g;
  // Different powers of two: orthogonal.
  if (a % 2 == 0 || b % 2 == 0) return Rational(0);
  return odd_ratio_value(cos, a, b);
}

Rational inner_product_analytic(const BasisFunction& f, const BasisFunction& g) {
  if (f.dim() != g.dim()) {
    throw std::invalid_argument("inner_product_analytic: dimension mismatch (" + std::to_string(f.dim()) +
                                " vs " + std::to_string(g.dim()) + ")");
  }
  if (f.is_constant() || g.is_constant()) return raw_entry(f, g, nullptr, nullptr);
  if (f.kind() != g.kind()) return Rational(0);
  const auto ratio = numtheory::odd_ratio(f.index().alpha(), g.index().alpha());
  if (!ratio) return Rational(0);
  return odd_ratio_value(f.kind() == BasisKind::CosLike, ratio->p_num, ratio->q_den);
}

std::vector<BasisFunction> univariate_system(std::int64_t n, bool normalized) {
  if (n < 0) throw std::invalid_argument("univariate_system: N must be nonnegative");
  std::vector<BasisFunction> out;
  out.reserve(static_cast<std::size_t>(2 * n + 1));
  out.push_back(BasisFunction::constant(1, normalized));
  for (std::int64_t k = 1; k <= n; ++k) out.push_back(BasisFunction::cos_like(k, normalized));
  for (std::int64_t k = 1; k <= n; ++k) out.push_back(BasisFunction::sin_like(k, normalized));
  return out;
}

std::vector<BasisFunction> cos_block_system(std::int64_t n, bool normalized) {
  if (n < 1) throw std::invalid_argument("cos_block_system: N must be positive");
  std::vector<BasisFunction> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k <= n; ++k) out.push_back(BasisFunction::cos_like(k, normalized));
  return out;
}

std::vector<BasisFunction> multivariate_system(int d, std::int64_t max_inf_norm, bool normalized) {
  const auto indices = enumerate_indices(d, max_inf_norm);
  std::vector<BasisFunction> out;
  out.reserve(2 * indices.size() + 1);
  out.push_back(BasisFunction::constant(d, normalized));
  for (const auto& a : indices) out.push_back(BasisFunction::cos_like(a, normalized));
  for (const auto& a : indices) out.push_back(BasisFunction::sin_like(a, normalized));
  return out;
}

GramMatrix assemble_gram(const std::vector<BasisFunction>& system, bool normalized) {
  GramMatrix gram;
  gram.normalized = normalized;
  const auto n = static_cast<Eigen::Index>(system.size());
  if (n == 0) throw std::invalid_argument("assemble_gram: empty system");
  const Eigen::Index d = system.front().dim();
  gram.ordering.reserve(system.size());
  for (const auto& f : system) {
    if (f.dim() != d) throw std::invalid_argument("assemble_gram: mixed dimensions in system");
    gram.ordering.push_back(f.with_normalization(normalized));
  }

  std::vector<numtheory::PrimitiveDecomposition> prim(system.size());
  if (d > 1) {
    for (std::size_t i = 0; i < system.size(); ++i) {
      if (!system[i].is_constant()) prim[i] = numtheory::primitive_decompose(system[i].index().alpha());
    }
  }

  gram.entries.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      const auto& f = gram.ordering[i];
      const auto& g = gram.ordering[j];
      Rational r = raw_entry(f, g, &prim[i], &prim[j]);
      if (!r.is_zero() && normalized_scale(f, g, normalized) != 1.0) r = Rational(3) * r;
      const double v = r.is_zero() ? 0.0 : r.to_double();
      gram.entries(i, j) = v;
      gram.entries(j, i) = v;
    }
  }
  return gram;
}

GershgorinReport gershgorin_radii(const MatrixXd& m) {
  GershgorinReport report;
  const Eigen::Index n = m.rows();
  report.discs.resize(static_cast<std::size_t>(n));
  report.hull_lower = std::numeric_limits<double>::infinity();
  report.hull_upper = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    long double radius = 0.0L;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) radius += std::fabs(static_cast<long double>(m(j, i)));
    }
    GershgorinDisc disc{m(i, i), static_cast<double>(radius)};
    report.discs[i] = disc;
    report.hull_lower = std::min(report.hull_lower, disc.center - disc.radius);
    report.hull_upper = std::max(report.hull_upper, disc.center + disc.radius);
    report.max_radius = std::max(report.max_radius, disc.radius);
  }
  return report;
}

GershgorinReport gershgorin_radii(const GramMatrix& gram) { return gershgorin_radii(gram.entries); }

SpectralSummary lanczos_extremes(const MatrixXd& a, double tolerance, int max_iterations) {
  const Eigen::Index n = a.rows();
  if (n == 0) throw std::invalid_argument("lanczos_extremes: empty matrix");
  if (n == 1) return dense_extremes(a, tolerance);
  const Eigen::Index m_max = max_iterations > 0 ? std::min<Eigen::Index>(max_iterations, n) : n;

  // All-ones start, tilted by a fixed smooth perturbation so that it is not
  // orthogonal to eigenvectors that happen to be balanced.
  VectorXd q(n);
  for (Eigen::Index i = 0; i < n; ++i) q[i] = 1.0 + 0.25 * std::sin(0.7 * static_cast<double>(i) + 0.3);
  q.normalize();

  MatrixXd basis(n, m_max);
  std::vector<double> alpha;
  std::vector<double> beta;
  double last_residual = std::numeric_limits<double>::infinity();
  for (Eigen::Index k = 0; k < m_max; ++k) {
    basis.col(k) = q;
    VectorXd w = a * q;
    alpha.push_back(q.dot(w));
    const auto v = basis.leftCols(k + 1);
    for (int pass = 0; pass < 2; ++pass) w -= v * (v.transpose() * w);
    const double b = w.norm();
    const double scale = std::max(std::fabs(alpha.front()), 1.0);
    const bool breakdown = b <= 1e-13 * scale;
    const bool last = k + 1 == m_max;

    if ((k + 1) % 8 == 0 || breakdown || last) {
      const Eigen::Index size = k + 1;
      Eigen::VectorXd diag = Eigen::Map<VectorXd>(alpha.data(), size);
      Eigen::VectorXd sub = size > 1 ? Eigen::Map<VectorXd>(beta.data(), size - 1) : VectorXd();
      Eigen::SelfAdjointEigenSolver<MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto& theta = tri.eigenvalues();
      const auto& s = tri.eigenvectors();
      const double est = b * std::max(std::fabs(s(size - 1, 0)), std::fabs(s(size - 1, size - 1)));
      if (est <= 0.5 * tolerance || breakdown || last) {
        const VectorXd y_min = v * s.col(0);
        const VectorXd y_max = v * s.col(size - 1);
        const double r_min = (a * y_min - theta[0] * y_min).norm();
        const double r_max = (a * y_max - theta[size - 1] * y_max).norm();
        last_residual = std::max(r_min, r_max);
        if (last_residual <= tolerance) {
          SpectralSummary out;
          out.n = n;
          out.lambda_min = theta[0];
          out.lambda_max = theta[size - 1];
          out.residual_norms = {r_min, r_max};
          out.blocks = 1;
          out.largest_block = n;
          out.used_lanczos = true;
          return out;
        }
        if (breakdown || last) {
          throw ConvergenceError("Lanczos stopped after " + std::to_string(size) + " steps with residual " +
                                     format_double(last_residual),
                                 static_cast<int>(size), last_residual);
        }
      }
    }
    beta.push_back(b);
    q = w / b;
  }
  throw ConvergenceError("Lanczos exhausted its iteration budget", static_cast<int>(m_max), last_residual);
}

SpectralSummary extreme_eigenvalues(const MatrixXd& matrix, double tolerance, const EigenOptions& options) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw std::invalid_argument("extreme_eigenvalues: matrix must be square and nonempty");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("extreme_eigenvalues: tolerance must be positive");
  SpectralSummary total;
  total.n = matrix.rows();
  total.lambda_min = std::numeric_limits<double>::infinity();
  total.lambda_max = -std::numeric_limits<double>::infinity();
  total.residual_norms = {0.0, 0.0};
  for (const auto& idx : components(matrix)) {
    const auto size = static_cast<Eigen::Index>(idx.size());
    const MatrixXd block = matrix(idx, idx);
    const SpectralSummary part = size <= options.dense_limit
                                     ? dense_extremes(block, tolerance)
                                     : lanczos_extremes(block, tolerance, options.max_lanczos_iterations);
    ++total.blocks;
    total.largest_block = std::max(total.largest_block, size);
    total.used_lanczos = total.used_lanczos || part.used_lanczos;
    if (part.lambda_min < total.lambda_min) {
      total.lambda_min = part.lambda_min;
      total.residual_norms[0] = part.residual_norms[0];
    }
    if (part.lambda_max > total.lambda_max) {
      total.lambda_max = part.lambda_max;
      total.residual_norms[1] = part.residual_norms[1];
    }
  }
  return total;
}

SpectralSummary extreme_eigenvalues(const GramMatrix& gram, double tolerance, const EigenOptions& options) {
  return extreme_eigenvalues(gram.entries, tolerance, options);
}

RieszBounds::RieszBounds(double lower, double upper, BoundProvenance how)
    : lower_A(lower), upper_B(upper), provenance(how) {
  if (!(lower > 0.0) || !(lower <= upper)) {
    throw std::invalid_argument("RieszBounds: need 0 < A ≤ B, got A = " + format_double(lower) +
                                ", B = " + format_double(upper));
  }
}

RieszBounds certified_bounds(const GershgorinReport& report) {
  return RieszBounds(report.hull_lower, report.hull_upper, BoundProvenance::GershgorinCertified);
}

RieszBounds measured_bounds(const SpectralSummary& summary) {
  return RieszBounds(summary.lambda_min, summary.lambda_max, BoundProvenance::EigensolverMeasured);
}

double riesz_quadratic_form(const GramMatrix& gram, const Eigen::Ref<const VectorXd>& c) {
  if (c.size() != gram.size()) throw std::invalid_argument("riesz_quadratic_form: length mismatch");
  const double norm2 = c.squaredNorm();
  if (norm2 == 0.0) throw std::invalid_argument("riesz_quadratic_form: zero coefficient vector");
  return c.dot(gram.entries * c) / norm2;
}

oracle::QuadratureSpec smooth_target_spec(int dimension, std::int64_t max_l1) {
  if (dimension < 1 || dimension > oracle::kMaxOracleDimension) {
    throw std::invalid_argument("smooth_target_spec: unsupported dimension " + std::to_string(dimension));
  }
  const auto k = static_cast<int>(std::max<std::int64_t>(1, max_l1));
  oracle::QuadratureSpec spec;
  spec.dimension = dimension;
  spec.rule = oracle::QuadratureRule::CompositeGauss;
  switch (dimension) {
    case 1:
      spec.points_per_axis = std::max(64, 4 * k);
      spec.gauss_order = 8;
      spec.reported_error_bound = 1e-12;
      break;
    case 2:
      spec.points_per_axis = std::max(16, 4 * k);
      spec.gauss_order = 6;
      spec.reported_error_bound = 1e-8;
      break;
    default:
      spec.points_per_axis = std::max(8, 2 * k);
      spec.gauss_order = 4;
      spec.reported_error_bound = 1e-6;
      break;
  }
  return spec;
}

Projection project_l2(const oracle::Target& target, const std::vector<BasisFunction>& system,
                      const oracle::QuadratureSpec& spec) {
  if (system.empty()) throw std::invalid_argument("project_l2: empty system");
  oracle::validate(spec);
  const GramMatrix gram = assemble_gram(system, true);
  const int d = static_cast<int>(gram.ordering.front().dim());
  if (d != spec.dimension) throw std::invalid_argument("project_l2: spec dimension does not match the system");
  if (d > 1) {
    for (const auto& f : gram.ordering) {
      if (!f.is_constant() && f.index().l1_norm() > oracle::kMaxOracleL1) {
        throw std::domain_error("project_l2: quadrature tolerance unreachable for " + f.str());
      }
    }
  }

  const auto n = gram.size();
  VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) rhs[i] = oracle::project_oracle(target, gram.ordering[i], spec);
  Eigen::LLT<MatrixXd> llt(gram.entries);
  if (llt.info() != Eigen::Success) throw std::runtime_error("project_l2: Gram matrix is not positive definite");

  Projection out;
  out.coefficients = llt.solve(rhs);
  auto residual_sq = [&](const Eigen::Ref<const VectorXd>& x) {
    double r = target(x);
    for (Eigen::Index i = 0; i < n; ++i) r -= out.coefficients[i] * eval_ridge(gram.ordering[i], x);
    return r * r;
  };

  double err2 = 0.0;
  if (d == 1) {
    std::vector<double> points = oracle::uniform_partition(spec.points_per_axis);
    points.insert(points.end(), spec.target_breakpoints.begin(), spec.target_breakpoints.end());
    for (const auto& f : gram.ordering) {
      if (f.is_constant()) continue;
      const auto k = f.index()[0];
      const auto bp = f.kind() == BasisKind::CosLike ? breakpoints_c(k) : breakpoints_s(k);
      points.insert(points.end(), bp.begin(), bp.end());
    }
    points = oracle::merge_partitions(std::move(points));
    VectorXd x(1);
    err2 = oracle::integrate_1d(
        [&](double t) {
          x[0] = t;
          return residual_sq(x);
        },
        points, spec.gauss_order);
  } else {
    err2 = oracle::integrate_box(residual_sq, d, spec.points_per_axis, spec.gauss_order);
  }
  out.l2_error = std::sqrt(std::max(0.0, err2));
  return out;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_spectrum_csv(std::ostream& out, const std::string& config, const std::vector<SpectrumRow>& rows) {
  out << "# " << config << '\n';
  out << "N,lambda_min,lambda_max\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.lambda_min) << ',' << format_double(r.lambda_max) << '\n';
  }
}

void write_matrix_csv(std::ostream& out, const std::string& config, const GramMatrix& gram) {
  out << "# " << config << '\n';
  out << "row";
  for (const auto& f : gram.ordering) out << ',' << '"' << f.str() << '"';
  out << '\n';
  for (Eigen::Index i = 0; i < gram.size(); ++i) {
    out << '"' << gram.ordering[i].str() << '"';
    for (Eigen::Index j = 0; j < gram.size(); ++j) out << ',' << format_double(gram.entries(i, j));
    out << '\n';
  }
}

}  // namespace riesz
