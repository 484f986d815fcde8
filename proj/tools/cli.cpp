#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "riesz/fourier.hpp"
#include "riesz/gram.hpp"
#include "riesz/numtheory.hpp"
#include "riesz/oracle.hpp"
#include "riesz/relunet.hpp"
#include "riesz/terms.hpp"

namespace riesz::cli {

namespace {

constexpr std::int64_t kMaxSystemSize = 16385;  // 2·2¹⁴ + 1

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int dim = 1;
  std::int64_t n = 256;
  std::int64_t max_norm = 4;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

void add_common(CLI::App* cmd, Options& o, bool with_n, bool with_max_norm) {
  cmd->add_option("--dim", o.dim, "Dimension d")->check(CLI::Range(1, 16));
  if (with_n) cmd->add_option("--n", o.n, "Univariate truncation N")->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 40));
  if (with_max_norm) cmd->add_option("--max-norm", o.max_norm, "Index bound ‖α‖_∞ for d ≥ 2")->check(CLI::PositiveNumber);
  cmd->add_option("--tol", o.tol, "Tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Seed for randomized checks");
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  write(file);
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

std::string fmt(double v) { return format_double(v); }

std::vector<BasisFunction> system_for(const Options& o, std::int64_t size_param, bool normalized) {
  if (o.dim == 1) return univariate_system(size_param, normalized);
  return multivariate_system(o.dim, size_param, normalized);
}

std::int64_t system_size(int dim, std::int64_t param) {
  if (dim == 1) return 2 * param + 1;
  // ((2M+1)^d − 1)/2 indices, each giving 𝒞 and 𝒮, plus the constant.
  double count = 1.0;
  for (int i = 0; i < dim; ++i) count *= static_cast<double>(2 * param + 1);
  return static_cast<std::int64_t>(std::min(count, 1e18));
}

// ---------------------------------------------------------------- gram-spectrum

int cmd_gram_spectrum(const Options& o, const std::string& variant, const std::string& matrix_out,
                      std::ostream& out, std::ostream& err) {
  const bool raw = variant == "raw-cos";
  const double tol = o.tol > 0 ? o.tol : 1e-9;
  const std::int64_t top = o.dim == 1 ? o.n : o.max_norm;
  if (top < 1) throw UsageError("truncation must be at least 1");
  if (system_size(o.dim, top) > kMaxSystemSize) {
    throw UsageError("system too large for the dense path (at most " + std::to_string(kMaxSystemSize) + " functions)");
  }

  std::vector<std::int64_t> ladder;
  if (o.dim == 1) {
    for (std::int64_t n = 1; n < top; n *= 2) ladder.push_back(n);
  } else {
    for (std::int64_t m = 1; m < top; ++m) ladder.push_back(m);
  }
  ladder.push_back(top);

  const double lo = raw ? 1.0 / 6.0 : 0.5;
  const double hi = raw ? 0.5 : 1.5;
  std::vector<SpectrumRow> rows;
  bool ok = true;
  GramMatrix last;
  for (std::int64_t n : ladder) {
    std::vector<BasisFunction> system;
    if (raw) {
      system = o.dim == 1 ? cos_block_system(n, false) : [&] {
        std::vector<BasisFunction> c;
        for (const auto& a : enumerate_indices(o.dim, n)) c.push_back(BasisFunction::cos_like(a));
        return c;
      }();
    } else {
      system = system_for(o, n, true);
    }
    GramMatrix gram = assemble_gram(system, !raw);
    const SpectralSummary s = extreme_eigenvalues(gram, tol);
    rows.push_back({n, s.lambda_min, s.lambda_max});
    if (s.lambda_min < lo - tol || s.lambda_max > hi + tol) {
      ok = false;
      err << "N=" << n << ": spectrum [" << fmt(s.lambda_min) << ", " << fmt(s.lambda_max) << "] leaves ["
          << fmt(lo) << ", " << fmt(hi) << "]\n";
    }
    if (n == top) last = std::move(gram);
  }

  std::ostringstream config;
  config << "riesz gram-spectrum dim=" << o.dim << (o.dim == 1 ? " n=" : " max_norm=") << top
         << " variant=" << variant << " tol=" << fmt(tol);
  emit(o.out, out, [&](std::ostream& s) { write_spectrum_csv(s, config.str(), rows); });
  if (!matrix_out.empty()) {
    emit(matrix_out, out, [&](std::ostream& s) { write_matrix_csv(s, config.str(), last); });
  }
  return ok ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- inner-product

int cmd_inner_product(const Options& o, const std::string& fs, const std::string& gs, std::ostream& out,
                      std::ostream& err) {
  const BasisFunction f0 = parse_basis(fs);
  const Eigen::Index dim = f0.is_constant() ? 0 : f0.dim();
  const BasisFunction g = parse_basis(gs, dim);
  const BasisFunction f = f0.is_constant() ? parse_basis(fs, g.dim()) : f0;
  if (f.dim() != g.dim()) throw UsageError("dimension mismatch between '" + fs + "' and '" + gs + "'");

  const Rational exact = inner_product_analytic(f, g);
  out << "analytic: " << exact.str() << " (" << fmt(exact.to_double()) << ")\n";
  if (f.dim() > oracle::kMaxOracleDimension) {
    err << "oracle: unsupported for d > " << oracle::kMaxOracleDimension << '\n';
    return kUsageError;
  }
  double value = 0.0;
  double bound = 0.0;
  if (f.dim() == 1) {
    value = oracle::inner_product_oracle_1d(f, g);
    bound = 1e-12;
  } else {
    std::int64_t m = 1;
    for (const auto* h : {&f, &g}) {
      if (!h->is_constant()) m = std::max(m, h->index().l1_norm());
    }
    const auto spec = oracle::default_spec(static_cast<int>(f.dim()), m);
    value = oracle::inner_product_oracle_nd(f, g, spec);
    bound = std::max(spec.reported_error_bound, 1e-12);
  }
  const double delta = std::fabs(value - exact.to_double());
  const double tol = o.tol > 0 ? o.tol : bound;
  out << "oracle: " << fmt(value) << '\n';
  out << "delta: " << fmt(delta) << '\n';
  if (delta > tol) {
    err << "analytic and oracle values differ by " << fmt(delta) << " > " << fmt(tol) << '\n';
    return kVerificationFailure;
  }
  return kSuccess;
}

// ---------------------------------------------------------------- gershgorin

int cmd_gershgorin(const Options& o, std::ostream& out, std::ostream& err) {
  const double tol = o.tol > 0 ? o.tol : 1e-12;
  const std::int64_t param = o.dim == 1 ? o.n : o.max_norm;
  if (system_size(o.dim, param) > kMaxSystemSize) throw UsageError("system too large");
  const GramMatrix gram = assemble_gram(system_for(o, param, true), true);
  const GershgorinReport report = gershgorin_radii(gram);
  std::ostringstream config;
  config << "riesz gershgorin dim=" << o.dim << (o.dim == 1 ? " n=" : " max_norm=") << param << " tol=" << fmt(tol);

  if (!o.out.empty()) {
    emit(o.out, out, [&](std::ostream& s) {
      s << "# " << config.str() << '\n' << "row,function,center,radius\n";
      for (std::size_t i = 0; i < report.discs.size(); ++i) {
        s << i << ",\"" << gram.ordering[i].str() << "\"," << fmt(report.discs[i].center) << ','
          << fmt(report.discs[i].radius) << '\n';
      }
    });
  }
  out << "# " << config.str() << '\n';
  out << "rows: " << gram.size() << '\n';
  out << "max_radius: " << fmt(report.max_radius) << '\n';
  out << "hull: [" << fmt(report.hull_lower) << ", " << fmt(report.hull_upper) << "]\n";
  if (report.max_radius > 0.5 + tol) {
    err << "row radius " << fmt(report.max_radius) << " exceeds 1/2\n";
    return kVerificationFailure;
  }
  const RieszBounds b = certified_bounds(report);
  out << "certified: A=" << fmt(b.lower_A) << " B=" << fmt(b.upper_B) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- net

void split_terms(const std::vector<Term>& terms, std::vector<StackTerm>& c, std::vector<StackTerm>& s) {
  for (const auto& t : terms) {
    if (t.function.is_constant()) throw UsageError("network terms must be C or S functions, not 'const'");
    (t.function.kind() == BasisKind::CosLike ? c : s).push_back({t.coefficient, t.function.index()});
  }
}

int cmd_net_build(const Options& o, const std::string& terms_text, std::ostream& out) {
  std::vector<StackTerm> c;
  std::vector<StackTerm> s;
  split_terms(parse_terms(terms_text), c, s);
  const Network net = stack_combination(c, s);
  emit(o.out, out, [&](std::ostream& f) { f << serialize(net); });
  return kSuccess;
}

VectorXd parse_point(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("invalid point coordinate '" + item + "'");
    }
  }
  if (v.empty()) throw UsageError("empty point");
  return Eigen::Map<VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

int cmd_net_eval(const std::string& net_path, const std::vector<std::string>& points, std::ostream& out) {
  const Network net = deserialize(read_file(net_path));
  for (const auto& p : points) {
    const VectorXd x = parse_point(p);
    if (x.size() != net.input_dim()) throw UsageError("point '" + p + "' has the wrong dimension");
    out << p << ' ' << fmt(net.evaluate(x)) << '\n';
  }
  return kSuccess;
}

int cmd_net_check(const Options& o, const std::string& net_path, const std::string& terms_text, int grid,
                  std::ostream& out, std::ostream& err) {
  const double tol = o.tol > 0 ? o.tol : 1e-9;
  const Network net = deserialize(read_file(net_path));
  const auto terms = parse_terms(terms_text);
  std::vector<StackTerm> c;
  std::vector<StackTerm> s;
  split_terms(terms, c, s);
  bool ok = true;

  const Eigen::Index want_width = 2 * static_cast<Eigen::Index>(terms.size());
  const int want_depth = stack_depth(c, s);
  double weight_bound = 8.0;
  for (const auto& t : terms) weight_bound = std::max(weight_bound, 8.0 * std::fabs(t.coefficient));
  const BoundReport r = bound_report(net);
  out << "width: " << r.width << " (expected " << want_width << ")\n";
  out << "depth: " << r.depth << " (expected " << want_depth << ")\n";
  out << "max_abs_weight: " << fmt(r.max_abs_weight) << " (bound " << fmt(weight_bound) << ")\n";
  out << "max_abs_bias: " << fmt(r.max_abs_bias) << '\n';
  if (r.width != want_width) ok = false;
  if (r.depth != want_depth) ok = false;
  if (r.max_abs_weight > weight_bound + 1e-12) ok = false;

  const Eigen::Index d = terms.front().function.dim();
  if (net.input_dim() != d) {
    err << "network input dimension " << net.input_dim() << " does not match the terms (" << d << ")\n";
    return kVerificationFailure;
  }
  auto reference = [&](const VectorXd& x) {
    double v = 0.0;
    for (const auto& t : terms) v += t.coefficient * eval_ridge(t.function, x);
    return v;
  };
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  VectorXd worst_x = VectorXd::Zero(d);
  std::optional<VectorXd> first_bad;
  for (int i = 0; i < grid; ++i) {
    VectorXd x(d);
    if (d == 1) {
      x[0] = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
    } else {
      for (Eigen::Index k = 0; k < d; ++k) x[k] = unit(rng);
    }
    const double dev = std::fabs(net.evaluate(x) - reference(x));
    if (dev > worst) {
      worst = dev;
      worst_x = x;
    }
    if (dev > tol && !first_bad) first_bad = x;
  }
  auto point_str = [](const VectorXd& x) {
    std::string s;
    for (Eigen::Index k = 0; k < x.size(); ++k) s += (k ? "," : "") + format_double(x[k]);
    return s;
  };
  out << "grid_points: " << grid << '\n';
  out << "max_deviation: " << fmt(worst) << " at " << point_str(worst_x) << '\n';
  if (first_bad) {
    ok = false;
    err << "first point above tolerance " << fmt(tol) << ": " << point_str(*first_bad) << '\n';
  }
  out << (ok ? "check: PASS\n" : "check: FAIL\n");
  return ok ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------- decomp

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long x = std::stoll(item, &used);
      if (used != item.size() || x < 1) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw UsageError("invalid positive integer '" + item + "'");
    }
  }
  if (v.empty()) throw UsageError("empty list");
  return v;
}

int cmd_decomp(const Options& o, const std::string& target, const std::string& truncations, std::ostream& out) {
  const auto t = target == "cos" ? fourier::Target::Cos : fourier::Target::Sin;
  const auto list = parse_int_list(truncations);
  emit(o.out, out, [&](std::ostream& s) {
    s << "# riesz decomp target=" << target << " truncations=" << truncations << '\n';
    s << "L,nonzero_terms,l2_error\n";
    for (auto l : list) {
      const auto series = fourier::decomposition_coefficients(t, l);
      const auto nonzero = std::count_if(series.terms.begin(), series.terms.end(),
                                         [](const auto& term) { return term.coefficient != 0.0; });
      s << l << ',' << nonzero << ',' << fmt(fourier::decomposition_l2_error(series)) << '\n';
    }
  });
  return kSuccess;
}

// ---------------------------------------------------------------- euler

int cmd_euler(const Options& o, std::int64_t bound, std::ostream& out) {
  if (bound < 2) throw UsageError("prime bound must be at least 2");
  if (bound > 100'000'000) throw UsageError("prime bound above 10^8 is not supported");
  std::vector<std::int64_t> ladder;
  for (std::int64_t b = 10; b < bound; b *= 10) ladder.push_back(b);
  ladder.push_back(bound);
  emit(o.out, out, [&](std::ostream& s) {
    s << "# riesz euler bound=" << bound << '\n';
    s << "bound,all_primes,distance_to_5/2,odd_primes,distance_to_3/2\n";
    for (auto b : ladder) {
      const long double all = numtheory::euler_product_partial(b, true);
      const long double odd = numtheory::euler_product_partial(b, false);
      s << b << ',' << fmt(static_cast<double>(all)) << ',' << fmt(static_cast<double>(2.5L - all)) << ','
        << fmt(static_cast<double>(odd)) << ',' << fmt(static_cast<double>(1.5L - odd)) << '\n';
    }
  });
  return kSuccess;
}

// ---------------------------------------------------------------- project

struct Samples {
  std::vector<double> x;
  std::vector<double> y;
};

Samples read_samples(const std::string& path) {
  std::istringstream in(read_file(path));
  Samples s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument(line);
      const double x = std::stod(line.substr(0, comma));
      const double y = std::stod(line.substr(comma + 1));
      s.x.push_back(x);
      s.y.push_back(y);
    } catch (const std::exception&) {
      if (s.x.empty() && lineno == 1) continue;  // header row
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'x,y'");
    }
  }
  if (s.x.size() < 2) throw UsageError(path + ": need at least two samples");
  for (std::size_t i = 1; i < s.x.size(); ++i) {
    if (!(s.x[i] > s.x[i - 1])) throw UsageError(path + ": sample abscissae must increase");
  }
  return s;
}

int cmd_project(const Options& o, const std::string& target, std::int64_t k, const std::string& member,
                const std::string& file, int head, std::ostream& out) {
  const std::int64_t param = o.dim == 1 ? o.n : o.max_norm;
  if (o.dim > oracle::kMaxOracleDimension) throw UsageError("project supports d ≤ 3");
  if (system_size(o.dim, param) > 4097) throw UsageError("system too large for projection");
  const auto system = system_for(o, param, true);
  std::int64_t max_l1 = 1;
  for (const auto& f : system) {
    if (!f.is_constant()) max_l1 = std::max(max_l1, f.index().l1_norm());
  }
  oracle::QuadratureSpec spec = smooth_target_spec(o.dim, max_l1);
  oracle::Target fn;
  std::string label;
  if (target == "cos" || target == "sin") {
    const bool cos = target == "cos";
    fn = [cos, k](const Eigen::Ref<const VectorXd>& x) {
      const double t = 2.0 * std::numbers::pi * static_cast<double>(k) * x[0];
      return std::numbers::sqrt2 * (cos ? std::cos(t) : std::sin(t));
    };
    label = target + "_" + std::to_string(k);
  } else if (target == "member") {
    if (member.empty()) throw UsageError("--member is required for target=member");
    const BasisFunction f = parse_basis(member, o.dim).with_normalization(true);
    if (f.dim() != o.dim) throw UsageError("member dimension does not match --dim");
    if (o.dim == 1 && !f.is_constant()) {
      spec.target_breakpoints =
          f.kind() == BasisKind::CosLike ? breakpoints_c(f.index()[0]) : breakpoints_s(f.index()[0]);
    }
    fn = [f](const Eigen::Ref<const VectorXd>& x) { return eval_ridge(f, x); };
    label = f.str();
  } else {
    if (o.dim != 1) throw UsageError("sample-file targets are univariate");
    if (file.empty()) throw UsageError("--file is required for target=file");
    auto samples = std::make_shared<Samples>(read_samples(file));
    spec.target_breakpoints = samples->x;
    fn = [samples](const Eigen::Ref<const VectorXd>& x) {
      const auto& xs = samples->x;
      const auto& ys = samples->y;
      const double t = x[0];
      if (t <= xs.front()) return ys.front();
      if (t >= xs.back()) return ys.back();
      const auto it = std::upper_bound(xs.begin(), xs.end(), t);
      const auto i = static_cast<std::size_t>(it - xs.begin());
      const double w = (t - xs[i - 1]) / (xs[i] - xs[i - 1]);
      return (1.0 - w) * ys[i - 1] + w * ys[i];
    };
    label = "file:" + file;
  }

  const Projection p = project_l2(fn, system, spec);
  std::ostringstream config;
  config << "riesz project target=" << label << " dim=" << o.dim << (o.dim == 1 ? " n=" : " max_norm=") << param;
  std::vector<std::size_t> order(system.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(p.coefficients[static_cast<Eigen::Index>(a)]) >
           std::fabs(p.coefficients[static_cast<Eigen::Index>(b)]);
  });
  out << "# " << config.str() << '\n';
  out << "system_size: " << system.size() << '\n';
  out << "l2_error: " << fmt(p.l2_error) << '\n';
  out << "largest coefficients:\n";
  for (std::size_t i = 0; i < order.size() && static_cast<int>(i) < head; ++i) {
    out << "  " << system[order[i]].str() << ' ' << fmt(p.coefficients[static_cast<Eigen::Index>(order[i])]) << '\n';
  }
  if (!o.out.empty()) {
    emit(o.out, out, [&](std::ostream& s) {
      s << "# " << config.str() << '\n' << "function,coefficient\n";
      for (std::size_t i = 0; i < system.size(); ++i) {
        s << '"' << system[i].str() << "\"," << fmt(p.coefficients[static_cast<Eigen::Index>(i)]) << '\n';
      }
    });
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Piecewise-linear Riesz basis toolkit"};
  app.name("riesz");
  app.require_subcommand(1);

  Options o;

  auto* spectrum = app.add_subcommand("gram-spectrum", "Extreme Gram eigenvalues over a ladder of truncations (CSV)");
  add_common(spectrum, o, true, true);
  std::string variant = "normalized";
  std::string matrix_out;
  spectrum->add_option("--variant", variant, "normalized full system or raw cosine block")
      ->check(CLI::IsMember({"normalized", "raw-cos"}));
  spectrum->add_option("--matrix-out", matrix_out, "Also write the largest Gram matrix as CSV");

  auto* inner = app.add_subcommand("inner-product", "Exact inner product with an oracle cross-check");
  add_common(inner, o, false, false);
  std::string f_spec;
  std::string g_spec;
  inner->add_option("f", f_spec, "First function, e.g. C:1,2")->required();
  inner->add_option("g", g_spec, "Second function, e.g. S:3,6")->required();

  auto* gersh = app.add_subcommand("gershgorin", "Gershgorin row radii of the normalized Gram matrix");
  add_common(gersh, o, true, true);

  auto* net = app.add_subcommand("net", "Build, evaluate or check ReLU networks");
  net->require_subcommand(1);
  std::string terms;
  std::string net_path;
  std::vector<std::string> points;
  int grid = 10000;
  auto* build = net->add_subcommand("build", "Compile a term list into a network file");
  add_common(build, o, false, false);
  build->add_option("--terms", terms, "Terms like '2*C:3 | -1*S:5'")->required();
  auto* eval = net->add_subcommand("eval", "Evaluate a network file at points");
  eval->add_option("--net", net_path, "Network file")->required();
  eval->add_option("--x", points, "Point, comma-separated coordinates (repeatable)")->required();
  auto* check = net->add_subcommand("check", "Verify bounds and pointwise agreement of a network file");
  add_common(check, o, false, false);
  check->add_option("--net", net_path, "Network file")->required();
  check->add_option("--terms", terms, "Terms the network should realize")->required();
  check->add_option("--grid", grid, "Number of check points")->check(CLI::Range(1, 10'000'000));

  auto* decomp = app.add_subcommand("decomp", "L2 error of truncated Moebius decompositions (CSV)");
  add_common(decomp, o, false, false);
  std::string target = "cos";
  std::string truncations = "9,19,49,99";
  decomp->add_option("--target", target, "cos or sin")->check(CLI::IsMember({"cos", "sin"}));
  decomp->add_option("--truncations", truncations, "Comma-separated odd truncations");

  auto* euler = app.add_subcommand("euler", "Partial Euler products against 5/2 and 3/2 (CSV)");
  add_common(euler, o, false, false);
  std::int64_t bound = 100000;
  euler->add_option("--bound", bound, "Largest prime considered");

  auto* project = app.add_subcommand("project", "L2 projection onto a truncated system");
  add_common(project, o, true, true);
  std::string ptarget = "cos";
  std::int64_t k = 1;
  std::string member;
  std::string file;
  int head = 8;
  project->add_option("--target", ptarget, "cos, sin, member or file")
      ->check(CLI::IsMember({"cos", "sin", "member", "file"}));
  project->add_option("--k", k, "Frequency of the cos/sin target")->check(CLI::PositiveNumber);
  project->add_option("--member", member, "Basis function used as target, e.g. C:3");
  project->add_option("--file", file, "CSV of x,y samples on [0,1]");
  project->add_option("--head", head, "Number of coefficients to print")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*spectrum) return cmd_gram_spectrum(o, variant, matrix_out, out, err);
    if (*inner) return cmd_inner_product(o, f_spec, g_spec, out, err);
    if (*gersh) return cmd_gershgorin(o, out, err);
    if (*build) return cmd_net_build(o, terms, out);
    if (*eval) return cmd_net_eval(net_path, points, out);
    if (*check) return cmd_net_check(o, net_path, terms, grid, out, err);
    if (*decomp) return cmd_decomp(o, target, truncations, out);
    if (*euler) return cmd_euler(o, bound, out);
    if (*project) return cmd_project(o, ptarget, k, member, file, head, out);
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << " (iterations " << e.iterations() << ", residual " << fmt(e.residual())
        << ")\n";
    return kVerificationFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kUsageError;
}

}  // namespace riesz::cli
