#include "riesz/basis.hpp"

#include <algorithm>
#include <sstream>

namespace riesz {

namespace detail {
void throw_non_finite(const char* where) {
  throw std::domain_error(std::string(where) + ": non-finite argument");
}
}  // namespace detail

bool is_positive_direction(const IntVector& alpha) {
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0) return alpha[i] > 0;
  }
  return false;
}

RidgeIndex::RidgeIndex(IntVector alpha) : alpha_(std::move(alpha)) {
  if (alpha_.size() < 1) throw std::invalid_argument("RidgeIndex: empty frequency vector");
  if (!is_positive_direction(alpha_)) {
    throw std::invalid_argument("RidgeIndex: first nonzero entry must be positive, got " + str());
  }
  if (l1_norm() > kMaxFrequencyL1) {
    throw std::invalid_argument("RidgeIndex: ‖α‖₁ exceeds the supported maximum 2^20");
  }
}

RidgeIndex RidgeIndex::scalar(std::int64_t k) {
  IntVector a(1);
  a << k;
  return RidgeIndex(std::move(a));
}

RidgeIndex RidgeIndex::normalized(const IntVector& alpha, bool* flipped) {
  const bool flip = !is_positive_direction(alpha) && !alpha.isZero();
  if (flipped != nullptr) *flipped = flip;
  return RidgeIndex(flip ? IntVector(-alpha) : alpha);
}

std::string RidgeIndex::str() const {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < alpha_.size(); ++i) {
    if (i > 0) out << ',';
    out << alpha_[i];
  }
  return out.str();
}

bool operator<(const RidgeIndex& a, const RidgeIndex& b) {
  return std::lexicographical_compare(a.alpha_.data(), a.alpha_.data() + a.alpha_.size(),
                                      b.alpha_.data(), b.alpha_.data() + b.alpha_.size());
}

BasisFunction BasisFunction::constant(Eigen::Index dim, bool normalized) {
  if (dim < 1) throw std::invalid_argument("BasisFunction: dimension must be positive");
  return BasisFunction(BasisKind::Constant, std::nullopt, dim, normalized);
}

BasisFunction BasisFunction::cos_like(RidgeIndex index, bool normalized) {
  const auto d = index.dim();
  return BasisFunction(BasisKind::CosLike, std::move(index), d, normalized);
}

BasisFunction BasisFunction::sin_like(RidgeIndex index, bool normalized) {
  const auto d = index.dim();
  return BasisFunction(BasisKind::SinLike, std::move(index), d, normalized);
}

BasisFunction BasisFunction::cos_like(std::int64_t k, bool normalized) {
  return cos_like(RidgeIndex::scalar(k), normalized);
}

BasisFunction BasisFunction::sin_like(std::int64_t k, bool normalized) {
  return sin_like(RidgeIndex::scalar(k), normalized);
}

const RidgeIndex& BasisFunction::index() const {
  if (!index_) throw std::logic_error("BasisFunction: the constant function has no index");
  return *index_;
}

double BasisFunction::scale() const {
  static const double sqrt3 = std::sqrt(3.0);
  return (normalized_ && kind_ != BasisKind::Constant) ? sqrt3 : 1.0;
}

BasisFunction BasisFunction::with_normalization(bool normalized) const {
  BasisFunction copy = *this;
  copy.normalized_ = normalized;
  return copy;
}

std::string BasisFunction::str() const {
  const std::string prefix = normalized_ && kind_ != BasisKind::Constant ? "sqrt3*" : "";
  switch (kind_) {
    case BasisKind::Constant:
      return "const";
    case BasisKind::CosLike:
      return prefix + "C:" + index_->str();
    case BasisKind::SinLike:
      return prefix + "S:" + index_->str();
  }
  return {};
}

double eval_profile(BasisKind kind, double t) {
  switch (kind) {
    case BasisKind::Constant:
      return 1.0;
    case BasisKind::CosLike:
      return eval_c(t);
    case BasisKind::SinLike:
      return eval_s(t);
  }
  return 0.0;
}

double eval_ridge(const BasisFunction& f, const Eigen::Ref<const VectorXd>& x) {
  if (x.size() != f.dim()) {
    throw std::invalid_argument("eval_ridge: point has dimension " + std::to_string(x.size()) +
                                ", function expects " + std::to_string(f.dim()));
  }
  if (f.is_constant()) return 1.0;
  const IntVector& alpha = f.index().alpha();
  double t = 0.0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) t += static_cast<double>(alpha[i]) * x[i];
  return f.scale() * eval_profile(f.kind(), t);
}

std::vector<RidgeIndex> enumerate_indices(int d, std::int64_t max_inf_norm) {
  if (d < 1 || max_inf_norm < 1) {
    throw std::invalid_argument("enumerate_indices: dimension and bound must be positive");
  }
  std::vector<RidgeIndex> out;
  IntVector alpha = IntVector::Constant(d, -max_inf_norm);
  // Odometer over {−M..M}^d in lexicographic order.
  while (true) {
    if (is_positive_direction(alpha)) out.emplace_back(alpha);
    int pos = d - 1;
    while (pos >= 0 && alpha[pos] == max_inf_norm) {
      alpha[pos] = -max_inf_norm;
      --pos;
    }
    if (pos < 0) break;
    ++alpha[pos];
  }
  return out;
}

std::vector<double> breakpoints_c(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("breakpoints_c: k must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * k + 1));
  const double den = 2.0 * static_cast<double>(k);
  for (std::int64_t j = 0; j <= 2 * k; ++j) out.push_back(static_cast<double>(j) / den);
  return out;
}

std::vector<double> breakpoints_s(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("breakpoints_s: k must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * k + 2));
  const double den = 4.0 * static_cast<double>(k);
  out.push_back(0.0);
  for (std::int64_t j = 1; j < 4 * k; j += 2) out.push_back(static_cast<double>(j) / den);
  out.push_back(1.0);
  return out;
}

}  // namespace riesz
