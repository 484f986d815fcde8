#ifndef RIESZ_ORACLE_HPP
#define RIESZ_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "riesz/basis.hpp"

// Numerical inner products on [0,1]^d. Nothing here consults the closed-form
// kernel in gram.hpp; the two are meant to check each other.
namespace riesz::oracle {

enum class QuadratureRule {
  ExactPiecewise,  ///< d = 1 only: Gauss–Legendre on every affine piece.
  CompositeGauss,  ///< nested composite Gauss–Legendre, any supported d.
};

struct QuadratureSpec {
  int dimension = 1;
  /// Uniform cells per outer axis (and per axis for smooth targets).
  int points_per_axis = 1;
  QuadratureRule rule = QuadratureRule::ExactPiecewise;
  double reported_error_bound = 1e-13;
  int gauss_order = 4;
  /// Merge the known kink locations of ridge factors into each axis partition.
  /// Switching this off gives a plain uniform composite rule.
  bool align_to_kinks = true;
  /// d = 1 only: kinks of a piecewise-smooth target, merged into the partition.
  std::vector<double> target_breakpoints;
};

/// Throws std::invalid_argument on an inconsistent spec.
void validate(const QuadratureSpec& spec);

QuadratureSpec exact_spec_1d();

/// Default composite spec for d ∈ {1, 2, 3} and frequencies up to max_l1.
QuadratureSpec default_spec(int dimension, std::int64_t max_l1);

/// Largest ‖α‖₁ accepted by the multivariate oracle.
inline constexpr std::int64_t kMaxOracleL1 = 32;
inline constexpr int kMaxOracleDimension = 3;

using Target = std::function<double(const Eigen::Ref<const VectorXd>&)>;

/// ∫₀¹ f g, exact up to rounding. Throws std::invalid_argument unless d = 1.
double inner_product_oracle_1d(const BasisFunction& f, const BasisFunction& g);

/// ∫_{[0,1]^d} f g for d ≤ 3. Throws std::invalid_argument for unsupported
/// dimensions and std::domain_error for frequencies above kMaxOracleL1.
double inner_product_oracle_nd(const BasisFunction& f, const BasisFunction& g,
                               const QuadratureSpec& spec);
double inner_product_oracle_nd(const BasisFunction& f, const BasisFunction& g);

/// ⟨target, g⟩ for a target that can be evaluated pointwise.
double project_oracle(const Target& target, const BasisFunction& g, const QuadratureSpec& spec);

/// Gauss–Legendre nodes and weights on [−1, 1], orders 1..16.
std::span<const double> gauss_nodes(int order);
std::span<const double> gauss_weights(int order);

/// Σ over consecutive partition cells of the order-n Gauss rule for f.
double integrate_1d(const std::function<double(double)>& f, std::span<const double> partition,
                    int order);

/// Plain composite tensor Gauss–Legendre over [0,1]^d.
double integrate_box(const Target& f, int dimension, int cells_per_axis, int order);

/// Sorted union of partitions with exact duplicates removed.
std::vector<double> merge_partitions(std::vector<double> points);

/// Uniform partition 0, 1/n, ..., 1.
std::vector<double> uniform_partition(int cells);

}  // namespace riesz::oracle

#endif  // RIESZ_ORACLE_HPP
