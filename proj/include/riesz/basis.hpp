#ifndef RIESZ_BASIS_HPP
#define RIESZ_BASIS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "riesz/types.hpp"

namespace riesz {

/// Largest supported ‖α‖₁. Beyond this the periodic wrap t − ⌊t⌋ in double
/// precision no longer resolves the pieces of 𝒞(α·x) on [0,1]^d.
inline constexpr std::int64_t kMaxFrequencyL1 = std::int64_t{1} << 20;

/// Nonzero integer frequency vector whose first nonzero entry is positive.
class RidgeIndex {
 public:
  /// Throws std::invalid_argument unless alpha ≻ 0 and ‖alpha‖₁ ≤ kMaxFrequencyL1.
  explicit RidgeIndex(IntVector alpha);

  /// Univariate index k ≥ 1.
  static RidgeIndex scalar(std::int64_t k);

  /// Flips the sign of a nonzero vector if needed. `flipped` (optional) reports it.
  static RidgeIndex normalized(const IntVector& alpha, bool* flipped = nullptr);

  const IntVector& alpha() const { return alpha_; }
  Eigen::Index dim() const { return alpha_.size(); }
  std::int64_t l1_norm() const { return alpha_.cwiseAbs().sum(); }
  std::int64_t operator[](Eigen::Index i) const { return alpha_[i]; }

  std::string str() const;

  friend bool operator==(const RidgeIndex& a, const RidgeIndex& b) { return a.alpha_ == b.alpha_; }
  /// Lexicographic order on the entries (the canonical Gram ordering).
  friend bool operator<(const RidgeIndex& a, const RidgeIndex& b);

 private:
  IntVector alpha_;
};

/// True when the first nonzero entry is positive.
bool is_positive_direction(const IntVector& alpha);

enum class BasisKind { Constant, CosLike, SinLike };

/// One element of {1} ∪ {𝒞(α·x)} ∪ {𝒮(α·x)}, optionally carrying the √3
/// normalization that gives unit L₂ norm.
class BasisFunction {
 public:
  static BasisFunction constant(Eigen::Index dim, bool normalized = false);
  static BasisFunction cos_like(RidgeIndex index, bool normalized = false);
  static BasisFunction sin_like(RidgeIndex index, bool normalized = false);
  /// Univariate 𝒞_k / 𝒮_k shorthands.
  static BasisFunction cos_like(std::int64_t k, bool normalized = false);
  static BasisFunction sin_like(std::int64_t k, bool normalized = false);

  BasisKind kind() const { return kind_; }
  bool is_constant() const { return kind_ == BasisKind::Constant; }
  /// Throws std::logic_error for the constant function.
  const RidgeIndex& index() const;
  const std::optional<RidgeIndex>& maybe_index() const { return index_; }
  Eigen::Index dim() const { return dim_; }
  bool normalized() const { return normalized_; }
  /// √3 for normalized 𝒞/𝒮, otherwise 1.
  double scale() const;

  BasisFunction with_normalization(bool normalized) const;
  std::string str() const;

  friend bool operator==(const BasisFunction&, const BasisFunction&) = default;

 private:
  BasisFunction(BasisKind kind, std::optional<RidgeIndex> index, Eigen::Index dim, bool normalized)
      : kind_(kind), index_(std::move(index)), dim_(dim), normalized_(normalized) {}

  BasisKind kind_;
  std::optional<RidgeIndex> index_;
  Eigen::Index dim_;
  bool normalized_;
};

namespace detail {
[[noreturn]] void throw_non_finite(const char* where);

template <typename Scalar>
Scalar wrap_unit(Scalar t, const char* where) {
  using std::floor;
  using std::isfinite;
  if (!isfinite(t)) throw_non_finite(where);
  return t - floor(t);
}
}  // namespace detail

/// 1-periodic 𝒞: 1 − 4u on [0, 1/2), 4u − 3 on [1/2, 1), u = t − ⌊t⌋.
template <typename Scalar>
Scalar eval_c(Scalar t) {
  const Scalar u = detail::wrap_unit(t, "eval_c");
  if (u < Scalar(0.5)) return Scalar(1) - Scalar(4) * u;
  return Scalar(4) * u - Scalar(3);
}

/// 1-periodic 𝒮: 4u on [0, 1/4), 2 − 4u on [1/4, 3/4), 4u − 4 on [3/4, 1).
template <typename Scalar>
Scalar eval_s(Scalar t) {
  const Scalar u = detail::wrap_unit(t, "eval_s");
  if (u < Scalar(0.25)) return Scalar(4) * u;
  if (u < Scalar(0.75)) return Scalar(2) - Scalar(4) * u;
  return Scalar(4) * u - Scalar(4);
}

/// Profile value of a non-constant kind at scalar argument t (no √3 factor).
double eval_profile(BasisKind kind, double t);

/// f(x) including the √3 factor for normalized functions; throws
/// std::invalid_argument on dimension mismatch.
double eval_ridge(const BasisFunction& f, const Eigen::Ref<const VectorXd>& x);

/// All α ∈ ℤ^d with ‖α‖_∞ ≤ max_inf_norm and α ≻ 0, lexicographically sorted.
std::vector<RidgeIndex> enumerate_indices(int d, std::int64_t max_inf_norm);

/// Sorted breakpoints of 𝒞_k on [0,1]: multiples of 1/(2k), endpoints included.
std::vector<double> breakpoints_c(std::int64_t k);
/// Sorted breakpoints of 𝒮_k on [0,1]: 0, odd multiples of 1/(4k), 1.
std::vector<double> breakpoints_s(std::int64_t k);

}  // namespace riesz

#endif  // RIESZ_BASIS_HPP
