#include "riesz/relunet.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace riesz {

namespace {

using Layer = Network::Layer;

Layer make_layer(MatrixXd m, VectorXd b) { return Layer{std::move(m), std::move(b)}; }

// 1 − 2·H^{∘n}(first(x)), where `first` is the affine map (rows of `in`,
// offset `shift`) folded into the leading hat. Depth n, width 2.
Network sawtooth_cos(Eigen::Index d, const VectorXd& in, double shift, int n) {
  std::vector<Layer> layers;
  MatrixXd a0(2, d);
  a0.row(0) = in.transpose();
  a0.row(1) = in.transpose();
  layers.push_back(make_layer(a0, (VectorXd(2) << shift, shift - 0.5).finished()));
  for (int i = 1; i < n; ++i) {
    // Output row (2, −4) of one hat feeding the (1; 1) input of the next.
    layers.push_back(make_layer((MatrixXd(2, 2) << 2, -4, 2, -4).finished(), (VectorXd(2) << 0, -0.5).finished()));
  }
  // 𝒞 = 1 − 2H fused into the output row: −2·(2, −4) = (−4, 8).
  layers.push_back(make_layer((MatrixXd(1, 2) << -4, 8).finished(), VectorXd::Ones(1)));
  return Network(d, std::move(layers));
}

VectorXd scalar_vector(double v) { return VectorXd::Constant(1, v); }

void check_positive(std::int64_t j, const char* where) {
  if (j < 1) throw std::invalid_argument(std::string(where) + ": frequency must be ≥ 1");
}

}  // namespace

int ceil_log2(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ceil_log2: n must be positive");
  int m = 0;
  while ((std::int64_t{1} << m) < n) ++m;
  return m;
}

Network hat_network() {
  std::vector<Layer> layers;
  layers.push_back(make_layer((MatrixXd(2, 1) << 1, 1).finished(), (VectorXd(2) << 0, -0.5).finished()));
  layers.push_back(make_layer((MatrixXd(1, 2) << 2, -4).finished(), VectorXd::Zero(1)));
  return Network(1, std::move(layers));
}

Network identity_network() {
  std::vector<Layer> layers;
  layers.push_back(make_layer((MatrixXd(2, 1) << 1, -1).finished(), VectorXd::Zero(2)));
  layers.push_back(make_layer((MatrixXd(1, 2) << 1, -1).finished(), VectorXd::Zero(1)));
  return Network(1, std::move(layers));
}

Network compose(const std::vector<Network>& nets) {
  if (nets.empty()) throw std::invalid_argument("compose: empty list");
  const Eigen::Index w = nets.front().width();
  for (std::size_t i = 0; i < nets.size(); ++i) {
    if (nets[i].width() != w) {
      throw std::invalid_argument("compose: width mismatch (" + std::to_string(nets[i].width()) + " vs " +
                                  std::to_string(w) + ")");
    }
    if (i > 0 && nets[i].input_dim() != 1) {
      throw std::invalid_argument("compose: inner networks must take a scalar input");
    }
  }
  std::vector<Layer> layers(nets.front().layers());
  for (std::size_t i = 1; i < nets.size(); ++i) {
    const auto& next = nets[i].layers();
    const Layer out = layers.back();
    layers.pop_back();
    // A0 (A_L a + b_L) + b0 with A_L: 1×W and A0: W×1.
    layers.push_back(make_layer(next.front().matrix * out.matrix, next.front().matrix * out.bias + next.front().bias));
    layers.insert(layers.end(), next.begin() + 1, next.end());
  }
  return Network(nets.front().input_dim(), std::move(layers));
}

Network pad_depth(const Network& net, int target_depth) {
  if (target_depth < net.depth()) {
    throw std::invalid_argument("pad_depth: target depth " + std::to_string(target_depth) + " below current depth " +
                                std::to_string(net.depth()));
  }
  std::vector<Layer> layers(net.layers());
  const Layer out = layers.back();
  layers.pop_back();
  // Activations after a ReLU are nonnegative, so ReLU(I a) = a.
  const Eigen::Index w = net.width();
  for (int i = net.depth(); i < target_depth; ++i) {
    layers.push_back(make_layer(MatrixXd::Identity(w, w), VectorXd::Zero(w)));
  }
  layers.push_back(out);
  return Network(net.input_dim(), std::move(layers));
}

Network build_C_univariate(std::int64_t j) {
  check_positive(j, "build_C_univariate");
  const int m = ceil_log2(j);
  // 𝒞_j(x) = 𝒞_{2^m}(s x), s = j/2^m ∈ (1/2, 1].
  const double s = std::ldexp(static_cast<double>(j), -m);
  return sawtooth_cos(1, scalar_vector(s), 0.0, m + 1);
}

Network build_S_univariate(std::int64_t j) {
  check_positive(j, "build_S_univariate");
  const int m = ceil_log2(j);
  // 𝒮_j(x) = 𝒞(jx + 3/4) = 𝒞_{2^{m+1}}(s x + t), s = j/2^{m+1}, t = 3/2^{m+3}.
  const double s = std::ldexp(static_cast<double>(j), -(m + 1));
  const double t = std::ldexp(3.0, -(m + 3));
  return sawtooth_cos(1, scalar_vector(s), t, m + 2);
}

Network build_C_ridge(const RidgeIndex& alpha) {
  const int m = ceil_log2(alpha.l1_norm());
  // 𝒞(α·x) = 𝒞_{2^{m+1}}((2^{−m} α·x + 1)/2); the argument stays in [0, 1].
  const VectorXd in = alpha.alpha().cast<double>() * std::ldexp(1.0, -(m + 1));
  return sawtooth_cos(alpha.dim(), in, 0.5, m + 2);
}

Network build_S_ridge(const RidgeIndex& alpha) {
  const int m = ceil_log2(alpha.l1_norm());
  // 𝒮(α·x) = 𝒞(α·x + 3/4) = 𝒞_{2^{m+2}}((α·x + 2^m + 3/4)/2^{m+2}).
  const VectorXd in = alpha.alpha().cast<double>() * std::ldexp(1.0, -(m + 2));
  const double shift = (std::ldexp(1.0, m) + 0.75) * std::ldexp(1.0, -(m + 2));
  return sawtooth_cos(alpha.dim(), in, shift, m + 3);
}

int stack_depth(const std::vector<StackTerm>& c_terms, const std::vector<StackTerm>& s_terms) {
  int depth = 0;
  for (const auto& t : c_terms) depth = std::max(depth, ceil_log2(t.index.l1_norm()) + 2);
  for (const auto& t : s_terms) depth = std::max(depth, ceil_log2(t.index.l1_norm()) + 3);
  return depth;
}

Network stack_combination(const std::vector<StackTerm>& c_terms, const std::vector<StackTerm>& s_terms) {
  if (c_terms.empty() && s_terms.empty()) throw std::invalid_argument("stack_combination: no terms");
  const Eigen::Index d = c_terms.empty() ? s_terms.front().index.dim() : c_terms.front().index.dim();
  std::vector<std::pair<double, Network>> blocks;
  for (const auto& t : c_terms) {
    if (t.index.dim() != d) throw std::invalid_argument("stack_combination: mixed dimensions");
    blocks.emplace_back(t.coefficient, d == 1 ? build_C_univariate(t.index[0]) : build_C_ridge(t.index));
  }
  for (const auto& t : s_terms) {
    if (t.index.dim() != d) throw std::invalid_argument("stack_combination: mixed dimensions");
    blocks.emplace_back(t.coefficient, d == 1 ? build_S_univariate(t.index[0]) : build_S_ridge(t.index));
  }
  const int depth = stack_depth(c_terms, s_terms);
  for (auto& [coef, net] : blocks) net = pad_depth(net, depth);

  const Eigen::Index w = 2 * static_cast<Eigen::Index>(blocks.size());
  std::vector<Layer> layers;
  for (int l = 0; l <= depth; ++l) {
    const bool first = l == 0;
    const bool last = l == depth;
    MatrixXd a = MatrixXd::Zero(last ? 1 : w, first ? d : w);
    VectorXd b = VectorXd::Zero(last ? 1 : w);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      const auto& [coef, net] = blocks[k];
      const Layer& src = net.layers()[static_cast<std::size_t>(l)];
      const Eigen::Index off = 2 * static_cast<Eigen::Index>(k);
      if (last) {
        a.block(0, off, 1, 2) = coef * src.matrix;
        b[0] += coef * src.bias[0];
      } else if (first) {
        a.block(off, 0, 2, d) = src.matrix;
        b.segment(off, 2) = src.bias;
      } else {
        a.block(off, off, 2, 2) = src.matrix;
        b.segment(off, 2) = src.bias;
      }
    }
    layers.push_back(make_layer(std::move(a), std::move(b)));
  }
  return Network(d, std::move(layers));
}

namespace {

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = text.find('\n', start);
      if (end == std::string::npos) {
        if (start < text.size()) lines_.emplace_back(text.substr(start));
        break;
      }
      lines_.emplace_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  Network parse() {
    const auto header = next_nonblank("header");
    const auto tok = split(lines_[header]);
    if (tok.size() != 5 || tok[0].text != "relunet" || tok[1].text != "v1") {
      fail(header, 1, "expected header 'relunet v1 input_dim=<d> width=<W> depth=<L>'");
    }
    const long d = keyed(header, tok[2], "input_dim");
    const long w = keyed(header, tok[3], "width");
    const long depth = keyed(header, tok[4], "depth");
    if (d < 1 || w < 1 || depth < 1) fail(header, tok[2].column, "dimensions must be positive");

    std::vector<Layer> layers;
    for (long l = 0; l <= depth; ++l) {
      const std::string section = "layer " + std::to_string(l);
      const auto at = next_nonblank(section);
      const auto lt = split(lines_[at]);
      if (lt.size() != 4 || lt[0].text != "layer") fail(at, 1, "expected '" + section + " rows=<r> cols=<c>'");
      if (integer(at, lt[1]) != l) fail(at, lt[1].column, "expected layer index " + std::to_string(l));
      const long rows = keyed(at, lt[2], "rows");
      const long cols = keyed(at, lt[3], "cols");
      const long want_rows = l == depth ? 1 : w;
      const long want_cols = l == 0 ? d : w;
      if (rows != want_rows) fail(at, lt[2].column, "rows=" + std::to_string(rows) + ", expected " + std::to_string(want_rows));
      if (cols != want_cols) fail(at, lt[3].column, "cols=" + std::to_string(cols) + ", expected " + std::to_string(want_cols));

      MatrixXd a(rows, cols);
      for (long r = 0; r < rows; ++r) {
        const auto li = next_line(section + " row " + std::to_string(r));
        const auto nt = split(lines_[li]);
        if (static_cast<long>(nt.size()) != cols) {
          fail(li, 1, "expected " + std::to_string(cols) + " numbers, found " + std::to_string(nt.size()));
        }
        for (long c = 0; c < cols; ++c) a(r, c) = number(li, nt[c]);
      }
      const auto bi = next_line(section + " bias");
      const auto bt = split(lines_[bi]);
      if (bt.empty() || bt[0].text != "bias:") fail(bi, 1, "expected 'bias:' line");
      if (static_cast<long>(bt.size()) - 1 != rows) {
        fail(bi, 1, "expected " + std::to_string(rows) + " bias values, found " + std::to_string(bt.size() - 1));
      }
      VectorXd b(rows);
      for (long r = 0; r < rows; ++r) b[r] = number(bi, bt[r + 1]);
      layers.push_back(make_layer(std::move(a), std::move(b)));
    }
    for (std::size_t i = pos_; i < lines_.size(); ++i) {
      if (!split(lines_[i]).empty()) fail(i, 1, "unexpected content after the last layer");
    }
    try {
      return Network(d, std::move(layers));
    } catch (const std::invalid_argument& e) {
      fail(header, 1, e.what());
    }
  }

 private:
  [[noreturn]] void fail(std::size_t line, int column, const std::string& msg) const {
    throw ParseError(msg, static_cast<int>(line) + 1, column);
  }

  std::size_t next_line(const std::string& what) {
    if (pos_ >= lines_.size()) fail(lines_.size(), 1, "unexpected end of input: missing " + what);
    return pos_++;
  }

  std::size_t next_nonblank(const std::string& what) {
    while (pos_ < lines_.size() && split(lines_[pos_]).empty()) ++pos_;
    return next_line(what);
  }

  long integer(std::size_t line, const Token& t) const {
    long v = 0;
    const auto* end = t.text.data() + t.text.size();
    const auto res = std::from_chars(t.text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) fail(line, t.column, "invalid integer '" + std::string(t.text) + "'");
    return v;
  }

  long keyed(std::size_t line, const Token& t, std::string_view key) const {
    if (t.text.size() <= key.size() + 1 || t.text.substr(0, key.size()) != key || t.text[key.size()] != '=') {
      fail(line, t.column, "expected " + std::string(key) + "=<n>");
    }
    const Token value{t.text.substr(key.size() + 1), t.column + static_cast<int>(key.size()) + 1};
    return integer(line, value);
  }

  double number(std::size_t line, const Token& t) const {
    double v = 0;
    const auto* end = t.text.data() + t.text.size();
    const auto res = std::from_chars(t.text.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
      fail(line, t.column, "invalid number '" + std::string(t.text) + "'");
    }
    return v;
  }

  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const Network& net) {
  std::string out = "relunet v1 input_dim=" + std::to_string(net.input_dim()) + " width=" +
                    std::to_string(net.width()) + " depth=" + std::to_string(net.depth()) + "\n";
  const auto& layers = net.layers();
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const auto& layer = layers[l];
    out += "\nlayer " + std::to_string(l) + " rows=" + std::to_string(layer.matrix.rows()) +
           " cols=" + std::to_string(layer.matrix.cols()) + "\n";
    for (Eigen::Index r = 0; r < layer.matrix.rows(); ++r) {
      for (Eigen::Index c = 0; c < layer.matrix.cols(); ++c) {
        if (c > 0) out += ' ';
        append_number(out, layer.matrix(r, c));
      }
      out += '\n';
    }
    out += "bias:";
    for (Eigen::Index r = 0; r < layer.bias.size(); ++r) {
      out += ' ';
      append_number(out, layer.bias[r]);
    }
    out += '\n';
  }
  return out;
}

Network deserialize(const std::string& text) { return Parser(text).parse(); }

}  // namespace riesz
