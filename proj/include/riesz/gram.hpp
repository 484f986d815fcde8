#ifndef RIESZ_GRAM_HPP
#define RIESZ_GRAM_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "riesz/basis.hpp"
#include "riesz/oracle.hpp"
#include "riesz/rational.hpp"

namespace riesz {

/// Raw (unnormalized) ⟨f, g⟩ on [0,1]^d as an exact rational. Throws
/// std::invalid_argument when the dimensions differ.
Rational inner_product_analytic(const BasisFunction& f, const BasisFunction& g);

/// Univariate raw ⟨𝒞_i, 𝒞_j⟩ (cos = true) or ⟨𝒮_i, 𝒮_j⟩ in gcd/parity form.
/// Independent of the odd-ratio dispatch; used on the d = 1 fast path.
Rational univariate_inner_product(bool cos, std::int64_t i, std::int64_t j);

/// [const, 𝒞_1..𝒞_N, 𝒮_1..𝒮_N]. N = 0 gives the constant alone.
std::vector<BasisFunction> univariate_system(std::int64_t n, bool normalized);
/// [𝒞_1..𝒞_N] only.
std::vector<BasisFunction> cos_block_system(std::int64_t n, bool normalized);
/// [const, 𝒞(α·x) for α in enumerate_indices order, then 𝒮(α·x)].
std::vector<BasisFunction> multivariate_system(int d, std::int64_t max_inf_norm, bool normalized);

struct GramMatrix {
  std::vector<BasisFunction> ordering;
  MatrixXd entries;
  bool normalized = false;

  Eigen::Index size() const { return entries.rows(); }
};

/// Dense Gram matrix of `system`; every function is re-tagged with the
/// requested normalization. Throws std::invalid_argument on mixed dimensions.
GramMatrix assemble_gram(const std::vector<BasisFunction>& system, bool normalized);

struct GershgorinDisc {
  double center = 0.0;
  double radius = 0.0;
};

struct GershgorinReport {
  std::vector<GershgorinDisc> discs;
  double hull_lower = 0.0;
  double hull_upper = 0.0;
  double max_radius = 0.0;
};

GershgorinReport gershgorin_radii(const GramMatrix& gram);
GershgorinReport gershgorin_radii(const MatrixXd& matrix);

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int iterations, double residual)
      : std::runtime_error(what), iterations_(iterations), residual_(residual) {}
  int iterations() const { return iterations_; }
  double residual() const { return residual_; }

 private:
  int iterations_;
  double residual_;
};

struct SpectralSummary {
  Eigen::Index n = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  /// ‖Gv − λv‖ for the (λ_min, v) and (λ_max, v) pairs, in that order.
  std::vector<double> residual_norms;
  /// Number of independent diagonal blocks the matrix split into.
  Eigen::Index blocks = 0;
  Eigen::Index largest_block = 0;
  /// True if some block went through the iterative path.
  bool used_lanczos = false;
};

struct EigenOptions {
  /// Blocks up to this size use the dense solver with eigenvectors.
  Eigen::Index dense_limit = 4096;
  /// Cap on Lanczos steps per block (0: block size).
  int max_lanczos_iterations = 0;
};

/// Extreme eigenpairs of a symmetric matrix. The matrix is first split into
/// the connected components of its exact nonzero pattern; each component is
/// solved densely or, above `dense_limit`, by Lanczos with full
/// reorthogonalization and a fixed start vector. Throws ConvergenceError when
/// a residual stays above `tolerance`.
SpectralSummary extreme_eigenvalues(const MatrixXd& matrix, double tolerance,
                                    const EigenOptions& options = {});
SpectralSummary extreme_eigenvalues(const GramMatrix& gram, double tolerance,
                                    const EigenOptions& options = {});

/// Extreme eigenpairs of one symmetric block by Lanczos. Exposed for tests.
SpectralSummary lanczos_extremes(const MatrixXd& block, double tolerance, int max_iterations = 0);

enum class BoundProvenance { GershgorinCertified, EigensolverMeasured };

struct RieszBounds {
  double lower_A;
  double upper_B;
  BoundProvenance provenance;

  /// Throws std::invalid_argument unless 0 < A ≤ B.
  RieszBounds(double lower, double upper, BoundProvenance how);
};

RieszBounds certified_bounds(const GershgorinReport& report);
RieszBounds measured_bounds(const SpectralSummary& summary);

/// Rayleigh quotient cᵀGc / cᵀc. Throws on zero or mismatched vectors.
double riesz_quadratic_form(const GramMatrix& gram, const Eigen::Ref<const VectorXd>& coefficients);

struct Projection {
  VectorXd coefficients;
  double l2_error = 0.0;
};

/// Least-squares coefficients of `target` in the span of `system` (taken
/// normalized) and the L₂ norm of the residual. Inner products with the target
/// use `spec`; the residual norm is integrated on a partition refined at every
/// breakpoint in d = 1 and on a plain composite grid otherwise.
Projection project_l2(const oracle::Target& target, const std::vector<BasisFunction>& system,
                      const oracle::QuadratureSpec& spec);

/// Spec suited to smooth targets times basis functions.
oracle::QuadratureSpec smooth_target_spec(int dimension, std::int64_t max_l1);

struct SpectrumRow {
  std::int64_t n = 0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

/// `# <config>` line, header `N,lambda_min,lambda_max`, one row per entry.
void write_spectrum_csv(std::ostream& out, const std::string& config, const std::vector<SpectrumRow>& rows);

/// Row-major matrix with the ordering as the header row.
void write_matrix_csv(std::ostream& out, const std::string& config, const GramMatrix& gram);

/// %.17g formatting shared by all CSV writers.
std::string format_double(double v);

}  // namespace riesz

#endif  // RIESZ_GRAM_HPP
