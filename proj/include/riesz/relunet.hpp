#ifndef RIESZ_RELUNET_HPP
#define RIESZ_RELUNET_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "riesz/basis.hpp"

namespace riesz {

template <typename Scalar>
struct AffineLayer {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> bias;
};

/// x ↦ A_L ReLU(A_{L−1} ⋯ ReLU(A_0 x + b_0) ⋯ + b_{L−1}) + b_L with
/// A_0: W×d, A_1..A_{L−1}: W×W, A_L: 1×W.
template <typename Scalar = double>
class ReluNetwork {
 public:
  using Layer = AffineLayer<Scalar>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// Throws std::invalid_argument on shape violations or non-finite entries.
  ReluNetwork(Eigen::Index input_dim, std::vector<Layer> layers)
      : input_dim_(input_dim), layers_(std::move(layers)) {
    validate();
  }

  Eigen::Index input_dim() const { return input_dim_; }
  Eigen::Index width() const { return layers_.front().matrix.rows(); }
  int depth() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<Layer>& layers() const { return layers_; }

  Scalar evaluate(const Eigen::Ref<const Vector>& x) const {
    if (x.size() != input_dim_) {
      throw std::invalid_argument("ReluNetwork::evaluate: input has dimension " + std::to_string(x.size()) +
                                  ", network expects " + std::to_string(input_dim_));
    }
    Vector a = x;
    for (std::size_t l = 0; l + 1 < layers_.size(); ++l) {
      a = (layers_[l].matrix * a + layers_[l].bias).cwiseMax(Scalar(0));
    }
    return (layers_.back().matrix * a + layers_.back().bias)(0);
  }

  Scalar evaluate(Scalar x) const {
    Vector v(1);
    v << x;
    return evaluate(v);
  }

 private:
  void validate() const {
    if (input_dim_ < 1) throw std::invalid_argument("ReluNetwork: input dimension must be positive");
    if (layers_.size() < 2) throw std::invalid_argument("ReluNetwork: need at least one hidden layer");
    const Eigen::Index w = layers_.front().matrix.rows();
    if (w < 1) throw std::invalid_argument("ReluNetwork: width must be positive");
    for (std::size_t l = 0; l < layers_.size(); ++l) {
      const auto& layer = layers_[l];
      const Eigen::Index rows = l + 1 == layers_.size() ? 1 : w;
      const Eigen::Index cols = l == 0 ? input_dim_ : w;
      if (layer.matrix.rows() != rows || layer.matrix.cols() != cols || layer.bias.size() != rows) {
        throw std::invalid_argument("ReluNetwork: layer " + std::to_string(l) + " has shape " +
                                    std::to_string(layer.matrix.rows()) + "x" + std::to_string(layer.matrix.cols()) +
                                    ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
      }
      if (!layer.matrix.allFinite() || !layer.bias.allFinite()) {
        throw std::invalid_argument("ReluNetwork: layer " + std::to_string(l) + " has non-finite entries");
      }
    }
  }

  Eigen::Index input_dim_;
  std::vector<Layer> layers_;
};

using Network = ReluNetwork<double>;

struct BoundReport {
  Eigen::Index width = 0;
  int depth = 0;
  double max_abs_weight = 0.0;
  double max_abs_bias = 0.0;
};

template <typename Scalar>
BoundReport bound_report(const ReluNetwork<Scalar>& net) {
  BoundReport r;
  r.width = net.width();
  r.depth = net.depth();
  using std::abs;
  for (const auto& layer : net.layers()) {
    r.max_abs_weight = std::max(r.max_abs_weight, static_cast<double>(layer.matrix.cwiseAbs().maxCoeff()));
    r.max_abs_bias = std::max(r.max_abs_bias, static_cast<double>(layer.bias.cwiseAbs().maxCoeff()));
  }
  return r;
}

/// Tent map on [0,1]: 2x up to 1/2, 2 − 2x after.
Network hat_network();
/// x = ReLU(x) − ReLU(−x): width 2, depth 1, exact on all of ℝ.
Network identity_network();

/// nets.back() ∘ ⋯ ∘ nets.front(). Every net after the first must take a
/// scalar input, and all widths must agree (std::invalid_argument otherwise).
Network compose(const std::vector<Network>& nets);

/// Inserts identity layers after the last ReLU. Throws std::invalid_argument
/// when target_depth < net.depth().
Network pad_depth(const Network& net, int target_depth);

/// 𝒞_j on [0,1]: width 2, depth ⌈log₂ j⌉ + 1.
Network build_C_univariate(std::int64_t j);
/// 𝒮_j on [0,1]: width 2, depth ⌈log₂ j⌉ + 2.
Network build_S_univariate(std::int64_t j);
/// 𝒞(α·x) on [0,1]^d: width 2, depth ⌈log₂‖α‖₁⌉ + 2.
Network build_C_ridge(const RidgeIndex& alpha);
/// 𝒮(α·x) on [0,1]^d: width 2, depth ⌈log₂‖α‖₁⌉ + 3.
Network build_S_ridge(const RidgeIndex& alpha);

/// ⌈log₂ n⌉ for n ≥ 1.
int ceil_log2(std::int64_t n);

struct StackTerm {
  double coefficient;
  RidgeIndex index;
};

/// Σ aᵢ𝒞(αᵢ·x) + Σ bⱼ𝒮(βⱼ·x) as one network of width 2(k+l) and depth
/// max{⌈log₂‖αᵢ‖₁⌉+2, ⌈log₂‖βⱼ‖₁⌉+3}, for d = 1 as well (the univariate
/// builders are used there and padded up).
Network stack_combination(const std::vector<StackTerm>& c_terms, const std::vector<StackTerm>& s_terms);

/// Depth stack_combination will produce for these terms.
int stack_depth(const std::vector<StackTerm>& c_terms, const std::vector<StackTerm>& s_terms);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Text format:
///   relunet v1 input_dim=<d> width=<W> depth=<L>
///   <blank>
///   layer <i> rows=<r> cols=<c>
///   r lines of c numbers
///   bias: r numbers
/// with a blank line between layers; numbers use 17 significant digits.
std::string serialize(const Network& net);
/// Throws ParseError with the 1-based line and column of the problem.
Network deserialize(const std::string& text);

}  // namespace riesz

#endif  // RIESZ_RELUNET_HPP
