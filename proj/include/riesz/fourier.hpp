#ifndef RIESZ_FOURIER_HPP
#define RIESZ_FOURIER_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "riesz/basis.hpp"

// Trigonometric side of the basis. Throughout, c_γ(x) = √2 cos(2π γ·x) and
// s_γ(x) = √2 sin(2π γ·x) denote the orthonormal trigonometric functions.
namespace riesz::fourier {

/// μ = √96 / π².
double mu_constant();

enum class Parity { CosLike, SinLike };

struct FourierTerm {
  std::int64_t harmonic;  ///< odd multiplier 2m+1
  double coefficient;
};

/// f = Σ coefficient · c_{harmonic·α} (or s_{…}), truncated.
struct FourierExpansion {
  RidgeIndex base_frequency;
  Parity parity;
  std::vector<FourierTerm> terms;

  double evaluate(const Eigen::Ref<const VectorXd>& x) const;
  /// L₂ norm of the truncated sum (Parseval).
  double l2_norm() const;
};

/// First M terms of the trigonometric series of a 𝒞/𝒮 basis function. The
/// √3 factor of a normalized function is included in the coefficients.
/// Throws std::invalid_argument for the constant or M < 1.
FourierExpansion fourier_expansion(const BasisFunction& f, std::int64_t m);

enum class Target { Cos, Sin };

/// coefficient · 𝒞̄_l (or 𝒮̄_l) with 𝒞̄_l = √3𝒞_l / μ.
struct DecompositionTerm {
  std::int64_t index;
  double coefficient;

  /// The normalized √3𝒞_l / √3𝒮_l; the 1/μ factor lives in `weight()`.
  BasisFunction function(Target target) const;
  /// Factor in front of the normalized basis function.
  double weight() const;
};

/// c_1 (or s_1) as a series over odd l. Every odd l ≤ L is listed; the
/// coefficient is exactly 0 when l is not square-free.
struct DecompositionSeries {
  Target target;
  std::vector<DecompositionTerm> terms;

  double evaluate(double x) const;
};

/// Throws std::invalid_argument for L < 1.
DecompositionSeries decomposition_coefficients(Target target, std::int64_t truncation);

/// ‖c_1 − series‖ (or s_1) on [0,1], integrated piecewise between all
/// breakpoints of the series.
double decomposition_l2_error(const DecompositionSeries& series);

/// Σ_{l·m = n} β_l α_m with β_l = μ(l) for odd l, 0 for even l, and α_m the
/// indicator of odd m.
std::int64_t convolution_sum(std::int64_t n);

/// convolution_sum(n) == (n == 1 ? 1 : 0).
bool convolution_identity_check(std::int64_t n);

/// Raw ⟨𝒞_i, 𝒞_j⟩ (or 𝒮) rebuilt from the trigonometric coefficients,
/// harmonics 2m+1 with m ≤ M.
double coefficient_matching_inner_product(Parity parity, std::int64_t i, std::int64_t j, std::int64_t m);

/// One ridge term of a tensor decomposition: coefficient · f with f a
/// normalized two-variable basis function.
struct RidgeTerm {
  BasisFunction function;
  double coefficient;
};

/// Expansion of u_1(k₁x₁)·u_2(k₂x₂), u ∈ {c, s}, into 𝒞/𝒮 ridge functions
/// with odd harmonics l ≤ truncation. Indices are sign-normalized and equal
/// ridges merged; the result is sorted by kind, then index. Throws
/// std::invalid_argument unless exactly two factors with positive frequencies
/// are given.
std::vector<RidgeTerm> tensor_decomposition_2d(std::span<const Target> kinds,
                                               std::span<const std::int64_t> frequencies,
                                               std::int64_t truncation);

/// The product u_1(k₁x₁)·u_2(k₂x₂) itself.
double tensor_product_value(std::span<const Target> kinds, std::span<const std::int64_t> frequencies,
                            const Eigen::Ref<const VectorXd>& x);

/// ‖product − Σ terms‖ on [0,1]², expanded as ‖T‖² − 2Σcᵢ⟨T, fᵢ⟩ + cᵀGc with
/// the ⟨T, fᵢ⟩ from the kink-aligned oracle and G exact.
double tensor_l2_error(std::span<const Target> kinds, std::span<const std::int64_t> frequencies,
                       const std::vector<RidgeTerm>& terms);

}  // namespace riesz::fourier

#endif  // RIESZ_FOURIER_HPP
