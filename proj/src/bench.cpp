#include "frackansa/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "frackansa/config.hpp"
#include "frackansa/special.hpp"

namespace frackansa {

namespace {

namespace fs = std::filesystem;
using bench_clock = std::chrono::steady_clock;

double ms_since(bench_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(bench_clock::now() - t0)
      .count();
}

double pick(double override_value, double fallback) {
  return std::isnan(override_value) ? fallback : override_value;
}

// Fully resolved case: problem, nodes, basis and reference data.
struct CaseSetup {
  ProblemSpec spec;
  NodeSet nodes;
  RbfBasis basis;
  int inner_points = 20;
  std::vector<double> times;
  std::function<double(Point)> u0;
  std::function<double(Point, double)> exact;  // null for the applications
  double report_spacing = 0;
};

void center_basis_on_nodes(CaseSetup& s, double shape) {
  s.basis.centers.reserve(s.nodes.size());
  for (std::size_t k = 0; k < s.nodes.size(); ++k)
    s.basis.centers.push_back(s.nodes.node(k));
  s.basis.shape_c = shape;
}

NodeMode parse_node_mode(const std::string& text, const std::string& case_id) {
  if (text.empty() || text == "regular") return NodeMode::regular;
  if (text == "jiggled") return NodeMode::jiggled;
  if (text == "uniform_random") return NodeMode::uniform_random;
  if (text == "disk_random") return NodeMode::disk_random;
  if (text == "disk_rings") return NodeMode::disk_rings;
  throw std::runtime_error(case_id + ": unknown node_mode \"" + text + "\"");
}

long lattice_steps(double spacing, double extent, const std::string& case_id) {
  if (!(spacing > 0) || !(spacing <= extent / 2))
    throw std::runtime_error(case_id + ": spacing out of range");
  const long n = std::lround(extent / spacing);
  if (std::abs(n * spacing - extent) > 1e-9 * extent)
    throw std::runtime_error(case_id +
                             ": spacing must divide the domain extent");
  return n;
}

// One-dimensional advection-diffusion strip with the manufactured solution
// u = sqrt(x+1) E_alpha(-t^alpha); embedded as a single node row at y = 0.
CaseSetup build_example1(const RunConfig& cfg) {
  CaseSetup s;
  const double alpha = pick(cfg.alpha, 0.6);
  const double beta = pick(cfg.beta, 1.6);
  const double shape = pick(cfg.shape_c, 0.1);
  const double dx = pick(cfg.spacing, 0.1);
  const long n = lattice_steps(dx, 1.0, "example1_1d");

  s.spec.domain = Domain::rectangle(0, 1, -0.5, 0.5);
  s.spec.alpha = alpha;

  AxisOperator op;
  op.beta_x = beta;
  op.vel_x = [](double x, double) { return x + 1; };
  const double kpre = -gamma_fn(1.5 - beta) / (2 * gamma_fn(1.5));
  op.k_x = [kpre, beta](double x, double) { return kpre * std::pow(x + 1, beta); };
  s.spec.op = op;

  s.spec.boundary.g = [](double x, double) { return std::sqrt(x + 1); };
  s.spec.boundary.omega = pick(cfg.omega, 1.0);

  for (long i = 1; i < n; ++i)
    s.nodes.interior.push_back({static_cast<double>(i) * dx, 0.0});
  s.nodes.boundary = {{0.0, 0.0}, {1.0, 0.0}};
  s.nodes.mode = NodeMode::regular;
  s.nodes.spacing = dx;
  s.nodes.seed = cfg.seed;
  center_basis_on_nodes(s, shape);

  s.inner_points = cfg.quad_points > 0 ? cfg.quad_points : 160;
  s.times = cfg.times.empty() ? std::vector<double>{10.0} : cfg.times;
  s.u0 = [](Point p) { return std::sqrt(p.x + 1); };
  s.exact = [alpha](Point p, double t) {
    return std::sqrt(p.x + 1) * mittag_leffler(alpha, -std::pow(t, alpha));
  };
  s.report_spacing = dx;
  return s;
}

// Shared pieces of the two-dimensional manufactured problem
// u = sqrt((x+1)(y+1)) E_alpha(-t^alpha).
void attach_example2_problem(CaseSetup& s, const RunConfig& cfg,
                             bool directional_kernel) {
  const double alpha = pick(cfg.alpha, 0.7);
  const double bx = pick(cfg.beta_x, 1.6);
  const double by = pick(cfg.beta_y, 1.8);
  s.spec.alpha = alpha;

  AxisOperator op;
  op.beta_x = bx;
  op.beta_y = by;
  const double cx = -2 * gamma_fn(1.5 - bx) / (3 * gamma_fn(1.5));
  const double cy = -gamma_fn(1.5 - by) / (3 * gamma_fn(1.5));
  op.k_x = [cx, bx](double x, double) { return cx * std::pow(x + 1, bx); };
  op.k_y = [cy, by](double, double y) { return cy * std::pow(y + 1, by); };
  op.use_directional_kernel = directional_kernel;
  s.spec.op = op;

  s.spec.boundary.g = [](double x, double y) {
    return std::sqrt((x + 1) * (y + 1));
  };
  s.spec.boundary.omega = pick(cfg.omega, 1.0);

  s.times = cfg.times.empty() ? std::vector<double>{10.0} : cfg.times;
  s.u0 = [](Point p) { return std::sqrt((p.x + 1) * (p.y + 1)); };
  s.exact = [alpha](Point p, double t) {
    return std::sqrt((p.x + 1) * (p.y + 1)) *
           mittag_leffler(alpha, -std::pow(t, alpha));
  };
}

CaseSetup build_example2_rect(const RunConfig& cfg, bool directional_kernel) {
  const std::string id =
      directional_kernel ? "vector_vs_classical" : "example2_rect";
  CaseSetup s;
  s.spec.domain = Domain::rectangle(0, 1, 0, 1);
  attach_example2_problem(s, cfg, directional_kernel);

  const double dx = pick(cfg.spacing, 1.0 / 15);
  const long n = lattice_steps(dx, 1.0, id);
  const NodeMode mode = parse_node_mode(cfg.node_mode, id);
  if (mode == NodeMode::disk_random || mode == NodeMode::disk_rings)
    throw std::runtime_error(id + ": node_mode \"" + cfg.node_mode +
                             "\" needs a disk domain");
  NodeParams params;
  params.spacing = dx;
  params.count = cfg.node_count > 0 ? static_cast<std::size_t>(cfg.node_count)
                                    : static_cast<std::size_t>((n + 1) * (n + 1));
  params.seed = cfg.seed;
  s.nodes = generate_nodes(s.spec.domain, mode, params);
  center_basis_on_nodes(s, pick(cfg.shape_c, 0.01));

  s.inner_points = cfg.quad_points > 0 ? cfg.quad_points : 1280;
  s.report_spacing = dx;
  return s;
}

CaseSetup build_example2_disk(const RunConfig& cfg) {
  CaseSetup s;
  s.spec.domain = Domain::disk({1, 1}, 1);
  attach_example2_problem(s, cfg, false);

  const NodeMode mode = cfg.node_mode.empty()
                            ? NodeMode::disk_rings
                            : parse_node_mode(cfg.node_mode, "example2_disk");
  if (mode != NodeMode::disk_random && mode != NodeMode::disk_rings)
    throw std::runtime_error("example2_disk: node_mode must be disk_random or disk_rings");
  NodeParams params;
  params.count = cfg.node_count > 0 ? static_cast<std::size_t>(cfg.node_count) : 400;
  params.ring_dr = pick(cfg.spacing, 0.1);  // ring increment
  params.seed = cfg.seed;
  s.nodes = generate_nodes(s.spec.domain, mode, params);

  const double shape_default = mode == NodeMode::disk_random ? 0.10 : 0.15;
  center_basis_on_nodes(s, pick(cfg.shape_c, shape_default));

  s.inner_points = cfg.quad_points > 0 ? cfg.quad_points : 256;
  s.report_spacing = mode == NodeMode::disk_rings
                         ? params.ring_dr
                         : std::sqrt(s.spec.domain.area() /
                                     static_cast<double>(params.count));
  return s;
}

// Compactly supported plume spreading isotropically through the continuous
// angular measure; no analytic solution.
CaseSetup build_app_continuous(const RunConfig& cfg) {
  CaseSetup s;
  s.spec.domain = Domain::disk({1, 1}, 1);
  s.spec.alpha = pick(cfg.alpha, 0.9);

  const double beta = pick(cfg.beta, 1.1);
  const double vel = pick(cfg.velocity, 0.012);
  const double diff = pick(cfg.diffusion, 0.03 / (2 * std::numbers::pi));
  MeasureOperator op;
  op.vel_x = [vel](double, double) { return vel; };
  op.k = [diff](double, double) { return diff; };
  op.measure.discrete = false;
  op.measure.weight_fn = [](double) { return 1.0; };
  op.measure.order_fn = [beta](double) { return beta; };
  op.angular_count = cfg.angular_points > 0 ? cfg.angular_points : 64;
  s.spec.op = op;

  s.spec.boundary.omega = pick(cfg.omega, 1.0);  // profile is zero everywhere

  const NodeMode mode = cfg.node_mode.empty()
                            ? NodeMode::disk_rings
                            : parse_node_mode(cfg.node_mode, "app_continuous");
  NodeParams params;
  params.count = cfg.node_count > 0 ? static_cast<std::size_t>(cfg.node_count) : 800;
  params.ring_dr = pick(cfg.spacing, 0.1);
  params.seed = cfg.seed;
  s.nodes = generate_nodes(s.spec.domain, mode, params);
  center_basis_on_nodes(s, pick(cfg.shape_c, 0.2));

  s.inner_points = cfg.quad_points > 0 ? cfg.quad_points : 128;
  s.times = cfg.times.empty() ? std::vector<double>{0, 10, 20} : cfg.times;
  s.u0 = [](Point p) {
    const double q = ((p.x - 1) * (p.x - 1) + (p.y - 1) * (p.y - 1)) / 0.04;
    if (q >= 1.0 - 1e-14) return 0.0;
    return 1000.0 * std::pow(2.0, 1.0 - 1.0 / (1.0 - q));
  };
  s.report_spacing = params.ring_dr;
  return s;
}

// Two transport atoms at theta = pi/4 and 7pi/4 acting on a point-like plume;
// no analytic solution.
CaseSetup build_app_discrete(const RunConfig& cfg) {
  CaseSetup s;
  s.spec.domain = Domain::rectangle(0, 40, 0, 40);
  s.spec.alpha = pick(cfg.alpha, 0.5);

  const double beta = pick(cfg.beta, 1.55);
  const double k1 = pick(cfg.diffusion, 0.1);
  const double k2 = pick(cfg.diffusion2, k1);
  MeasureOperator op;
  op.k = [](double, double) { return 1.0; };
  op.measure.discrete = true;
  op.measure.thetas = {std::numbers::pi / 4, 7 * std::numbers::pi / 4};
  op.measure.weights = {k1, k2};
  op.measure.betas = {beta, beta};
  s.spec.op = op;

  s.spec.boundary.omega = pick(cfg.omega, 1.0);

  const double dx = pick(cfg.spacing, 2.0);
  const long n = lattice_steps(dx, 40.0, "app_discrete");
  const std::size_t total = static_cast<std::size_t>((n + 1) * (n + 1));
  if (total > 2601 && !cfg.large)
    throw std::runtime_error(
        "app_discrete: node count " + std::to_string(total) +
        " exceeds 2601; pass --large to run it");
  NodeParams params;
  params.spacing = dx;
  params.seed = cfg.seed;
  s.nodes = generate_nodes(s.spec.domain, parse_node_mode(cfg.node_mode, "app_discrete"),
                           params);
  center_basis_on_nodes(s, pick(cfg.shape_c, 0.3));

  s.inner_points = cfg.quad_points > 0 ? cfg.quad_points : 160;
  s.times = cfg.times.empty() ? std::vector<double>{0, 5} : cfg.times;
  s.u0 = [](Point p) {
    const double r = std::hypot(p.x - 12.0, p.y - 20.0);
    return r < 3.0 ? 10.0 / (r + 0.1) : 0.0;
  };
  s.report_spacing = dx;
  return s;
}

// Diagnostic case whose initial data lies in the basis span under a zero
// operator: the solve is exact to roundoff at every spacing, which exercises
// the undefined-rate path of refinement studies.
CaseSetup build_synthetic_exact(const RunConfig& cfg) {
  CaseSetup s;
  s.spec.domain = Domain::rectangle(0, 1, 0, 1);
  s.spec.alpha = pick(cfg.alpha, 0.6);
  s.spec.op = AxisOperator{};       // every term null
  s.spec.boundary.omega = 0;        // boundary data frozen in time

  const double dx = pick(cfg.spacing, 0.5);
  lattice_steps(dx, 1.0, "synthetic_exact");
  NodeParams params;
  params.spacing = dx;
  params.seed = cfg.seed;
  s.nodes = generate_nodes(s.spec.domain, NodeMode::regular, params);
  const double shape = pick(cfg.shape_c, 0.5);
  center_basis_on_nodes(s, shape);

  auto bump = [shape](Point p) { return mq(p, {0.5, 0.5}, shape); };
  s.spec.boundary.g = [bump](double x, double y) { return bump({x, y}); };
  s.u0 = bump;
  s.exact = [bump](Point p, double) { return bump(p); };
  s.times = cfg.times.empty() ? std::vector<double>{1.0} : cfg.times;
  s.inner_points = 20;
  s.report_spacing = dx;
  return s;
}

CaseSetup build_case(const RunConfig& cfg) {
  const std::string& id = cfg.case_id;
  if (id == "example1_1d") return build_example1(cfg);
  if (id == "example2_rect") return build_example2_rect(cfg, false);
  if (id == "example2_disk") return build_example2_disk(cfg);
  if (id == "app_continuous") return build_app_continuous(cfg);
  if (id == "app_discrete") return build_app_discrete(cfg);
  if (id == "vector_vs_classical") return build_example2_rect(cfg, true);
  if (id == "synthetic_exact") return build_synthetic_exact(cfg);
  throw std::runtime_error("unknown case \"" + id + "\"; see list-cases");
}

Eigen::VectorXd initial_values(const CaseSetup& s) {
  Eigen::VectorXd u0(static_cast<Eigen::Index>(s.nodes.size()));
  for (std::size_t k = 0; k < s.nodes.size(); ++k)
    u0[static_cast<Eigen::Index>(k)] = s.u0(s.nodes.node(k));
  return u0;
}

std::vector<Point> all_nodes(const NodeSet& nodes) {
  std::vector<Point> pts;
  pts.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) pts.push_back(nodes.node(k));
  return pts;
}

struct ErrorPair {
  double mae = NAN;
  double max_rel = NAN;
};

// Interior-node errors; relative denominators below 1e-12 are skipped.
ErrorPair interior_errors(const CaseSetup& s, const Eigen::VectorXd& values,
                          double t) {
  ErrorPair e;
  if (!s.exact) return e;
  e.mae = 0;
  e.max_rel = 0;
  for (std::size_t k = 0; k < s.nodes.interior.size(); ++k) {
    const double ue = s.exact(s.nodes.interior[k], t);
    const double diff = std::abs(values[static_cast<Eigen::Index>(k)] - ue);
    e.mae = std::max(e.mae, diff);
    if (std::abs(ue) > 1e-12) e.max_rel = std::max(e.max_rel, diff / std::abs(ue));
  }
  return e;
}

}  // namespace

RunConfig parse_config_file(const std::string& path) {
  static const std::vector<std::string> allowed = {
      "case",        "alpha",       "beta",          "beta_x",
      "beta_y",      "shape_c",     "spacing",       "omega",
      "velocity",    "diffusion",   "diffusion2",    "node_count",
      "quad_points", "angular_points", "node_mode",  "times",
      "seed",        "out_dir",     "large"};
  const auto kv = read_key_values(path, allowed);

  auto value_of = [&](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  auto number = [&](const char* key, double& slot) {
    if (const auto* v = value_of(key)) {
      try {
        std::size_t used = 0;
        slot = std::stod(*v, &used);
        if (used != v->size()) throw std::invalid_argument(*v);
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": key \"" + std::string(key) +
                                 "\" is not a number: \"" + *v + "\"");
      }
    }
  };

  RunConfig cfg;
  if (const auto* v = value_of("case"))
    cfg.case_id = *v;
  else
    throw std::runtime_error(path + ": missing required key \"case\"");
  if (!value_of("alpha"))
    throw std::runtime_error(path + ": missing required key \"alpha\"");

  number("alpha", cfg.alpha);
  number("beta", cfg.beta);
  number("beta_x", cfg.beta_x);
  number("beta_y", cfg.beta_y);
  number("shape_c", cfg.shape_c);
  number("spacing", cfg.spacing);
  number("omega", cfg.omega);
  number("velocity", cfg.velocity);
  number("diffusion", cfg.diffusion);
  number("diffusion2", cfg.diffusion2);

  double tmp = NAN;
  number("node_count", tmp);
  if (!std::isnan(tmp)) cfg.node_count = std::lround(tmp);
  tmp = NAN;
  number("quad_points", tmp);
  if (!std::isnan(tmp)) cfg.quad_points = static_cast<int>(std::lround(tmp));
  tmp = NAN;
  number("angular_points", tmp);
  if (!std::isnan(tmp)) cfg.angular_points = static_cast<int>(std::lround(tmp));

  if (const auto* v = value_of("node_mode")) cfg.node_mode = *v;
  if (const auto* v = value_of("out_dir")) cfg.out_dir = *v;
  if (const auto* v = value_of("seed")) {
    try {
      cfg.seed = std::stoull(*v);
      cfg.seed_set = true;
    } catch (const std::exception&) {
      throw std::runtime_error(path + ": key \"seed\" is not an integer: \"" +
                               *v + "\"");
    }
  }
  if (const auto* v = value_of("large")) {
    if (*v == "true")
      cfg.large = true;
    else if (*v == "false")
      cfg.large = false;
    else
      throw std::runtime_error(path + ": key \"large\" must be true or false");
  }
  if (const auto* v = value_of("times")) {
    std::string item;
    std::stringstream stream(*v);
    while (std::getline(stream, item, ',')) {
      try {
        cfg.times.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": key \"times\" has a bad entry: \"" +
                                 item + "\"");
      }
    }
    if (cfg.times.empty())
      throw std::runtime_error(path + ": key \"times\" is empty");
  }
  return cfg;
}

std::vector<CaseInfo> list_cases() {
  return {
      {"example1_1d",
       "one-dimensional fractional advection-diffusion strip with a manufactured solution"},
      {"example2_rect",
       "two-dimensional anisotropic-order fractional diffusion on the unit square"},
      {"example2_disk",
       "disk-domain variant of the unit-square problem with ring or random node layouts"},
      {"app_continuous",
       "isotropic continuous-measure transport of a compact plume in a disk"},
      {"app_discrete",
       "two-atom anisotropic fractional diffusion of a point-like plume on a large square"},
      {"vector_vs_classical",
       "directional-kernel vs axis-kernel assembly of the unit-square problem"},
  };
}

CaseResult run_case(const RunConfig& cfg) {
  CaseSetup s = build_case(cfg);
  const auto t0 = bench_clock::now();
  CaseResult res;
  res.nodes = s.nodes;
  res.basis = s.basis;
  res.has_exact = static_cast<bool>(s.exact);
  try {
    const CollocationSystem sys = assemble(s.spec, s.nodes, s.basis, s.inner_points);
    const Propagator prop = index_reduce(sys);
    const Eigen::VectorXd u0 = initial_values(s);
    const std::vector<Point> pts = all_nodes(s.nodes);

    ErrorPair last;
    for (double t : s.times) {
      Eigen::VectorXd lambda = propagate(prop, s.spec.alpha, u0, t);
      FieldSnapshot snap;
      snap.t = t;
      snap.points = pts;
      snap.values = evaluate(s.basis, lambda, pts);
      snap.coeffs = std::move(lambda);
      last = interior_errors(s, snap.values, t);
      res.snapshots.push_back(std::move(snap));
    }
    res.report.spacing = s.report_spacing;
    res.report.n_nodes = s.nodes.size();
    res.report.mae = last.mae;
    res.report.max_rel_err = last.max_rel;
    res.report.wall_ms = ms_since(t0);
  } catch (const std::exception& e) {
    throw std::runtime_error(cfg.case_id + ": " + e.what());
  }
  return res;
}

std::vector<ErrorReport> convergence_study(const std::string& case_id,
                                           const std::vector<double>& spacings,
                                           const RunConfig& base) {
  if (spacings.size() < 2)
    throw std::invalid_argument("convergence_study: need at least 2 spacings");
  for (std::size_t i = 1; i < spacings.size(); ++i)
    if (!(spacings[i] < spacings[i - 1]))
      throw std::invalid_argument(
          "convergence_study: spacings must be strictly decreasing");

  std::vector<ErrorReport> rows;
  rows.reserve(spacings.size());
  for (double dx : spacings) {
    RunConfig cfg = base;
    cfg.case_id = case_id;
    cfg.spacing = dx;
    rows.push_back(run_case(cfg).report);
  }
  for (std::size_t i = 1; i < rows.size(); ++i) {
    // rates below the roundoff floor carry no information
    if (rows[i - 1].mae > 1e-13 && rows[i].mae > 1e-13)
      rows[i].rate = rows[i - 1].mae / rows[i].mae;
  }
  return rows;
}

std::vector<LongTimeSample> long_time_study(const std::vector<double>& times,
                                            const RunConfig& base) {
  RunConfig cfg = base;
  cfg.case_id = "example1_1d";
  if (std::isnan(cfg.spacing)) cfg.spacing = 1.0 / 20;
  CaseSetup s = build_case(cfg);

  std::vector<LongTimeSample> samples;
  try {
    const CollocationSystem sys = assemble(s.spec, s.nodes, s.basis, s.inner_points);
    const Propagator prop = index_reduce(sys);
    const Eigen::VectorXd u0 = initial_values(s);
    const Point mid{0.5, 0.0};

    double sink = 0;  // keeps repeated propagations observable
    for (double t : times) {
      Eigen::VectorXd lambda = propagate(prop, s.spec.alpha, u0, t);
      // single propagations sit near the clock resolution, so average enough
      // repeats to make the per-decade cost comparison meaningful
      const auto t1 = bench_clock::now();
      int reps = 0;
      do {
        lambda = propagate(prop, s.spec.alpha, u0, t);
        sink += lambda[0];
        ++reps;
      } while (ms_since(t1) < 40.0);
      LongTimeSample sample;
      sample.t = t;
      sample.wall_ms = ms_since(t1) / reps;
      const double u = evaluate(s.basis, lambda, {mid})[0];
      const double ue = s.exact(mid, t);
      sample.rel_err_mid = std::abs(u - ue) / std::abs(ue);
      samples.push_back(sample);
    }
    if (!std::isfinite(sink)) throw std::runtime_error("propagation overflow");
  } catch (const std::exception& e) {
    throw std::runtime_error(cfg.case_id + ": " + e.what());
  }
  return samples;
}

std::vector<VectorClassicalRow> vector_vs_classical(
    const std::vector<double>& spacings, const RunConfig& base) {
  std::vector<VectorClassicalRow> rows;
  rows.reserve(spacings.size());
  for (double dx : spacings) {
    RunConfig cfg = base;
    cfg.case_id = "example2_rect";
    cfg.spacing = dx;
    CaseSetup s = build_example2_rect(cfg, true);
    try {
      auto& op = std::get<AxisOperator>(s.spec.op);
      const CollocationSystem sys_dir = assemble(s.spec, s.nodes, s.basis, s.inner_points);
      op.use_directional_kernel = false;
      const CollocationSystem sys_axis = assemble(s.spec, s.nodes, s.basis, s.inner_points);

      VectorClassicalRow row;
      row.spacing = dx;
      row.max_entry_diff =
          (sys_dir.b_interior - sys_axis.b_interior).cwiseAbs().maxCoeff();

      const Eigen::VectorXd u0 = initial_values(s);
      const double t_final = s.times.back();
      auto solve_mre = [&](const CollocationSystem& sys) {
        const Propagator prop = index_reduce(sys);
        const Eigen::VectorXd lambda = propagate(prop, s.spec.alpha, u0, t_final);
        const Eigen::VectorXd values =
            evaluate(s.basis, lambda, all_nodes(s.nodes));
        return interior_errors(s, values, t_final).max_rel;
      };
      row.mre_directional = solve_mre(sys_dir);
      row.mre_axis = solve_mre(sys_axis);
      rows.push_back(row);
    } catch (const std::exception& e) {
      throw std::runtime_error("vector_vs_classical: " + std::string(e.what()));
    }
  }
  return rows;
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_for_write(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

}  // namespace

void write_fields_csv(const std::vector<FieldSnapshot>& snapshots,
                      const std::string& path) {
  FilePtr f = open_for_write(path);
  std::fputs("x,y,t,u\n", f.get());
  for (const FieldSnapshot& snap : snapshots) {
    for (std::size_t i = 0; i < snap.points.size(); ++i)
      std::fprintf(f.get(), "%.14e,%.14e,%.14e,%.14e\n", snap.points[i].x,
                   snap.points[i].y, snap.t,
                   snap.values[static_cast<Eigen::Index>(i)]);
  }
}

void write_report_csv(const std::vector<ErrorReport>& rows,
                      const std::string& path) {
  FilePtr f = open_for_write(path);
  std::fputs("spacing,n_nodes,mae,max_rel_err,rate,wall_ms\n", f.get());
  for (const ErrorReport& r : rows)
    std::fprintf(f.get(), "%.14e,%zu,%.14e,%.14e,%.14e,%.14e\n", r.spacing,
                 r.n_nodes, r.mae, r.max_rel_err, r.rate, r.wall_ms);
}

namespace {

std::vector<double> parse_spacings(const std::string& csv) {
  std::vector<double> out;
  std::string item;
  std::stringstream stream(csv);
  while (std::getline(stream, item, ',')) {
    const auto slash = item.find('/');
    try {
      if (slash != std::string::npos) {
        const double num = std::stod(item.substr(0, slash));
        const double den = std::stod(item.substr(slash + 1));
        out.push_back(num / den);
      } else {
        out.push_back(std::stod(item));
      }
    } catch (const std::exception&) {
      throw std::runtime_error("bad spacing entry: \"" + item + "\"");
    }
  }
  if (out.empty()) throw std::runtime_error("empty spacings list");
  return out;
}

void write_case_summary(const RunConfig& cfg, const CaseResult& res,
                        const std::string& path) {
  FilePtr f = open_for_write(path);
  std::fprintf(f.get(), "case: %s\n", cfg.case_id.c_str());
  std::fprintf(f.get(), "nodes: %zu (%zu interior, %zu boundary)\n",
               res.nodes.size(), res.nodes.interior.size(),
               res.nodes.boundary.size());
  std::fprintf(f.get(), "seed: %llu\n",
               static_cast<unsigned long long>(cfg.seed));
  for (const FieldSnapshot& snap : res.snapshots) {
    double lo = 0, hi = 0, mass = 0, mx = 0;
    if (snap.values.size() > 0) {
      lo = snap.values.minCoeff();
      hi = snap.values.maxCoeff();
      for (std::size_t i = 0; i < res.nodes.interior.size(); ++i) {
        const double u = snap.values[static_cast<Eigen::Index>(i)];
        mass += u;
        mx += res.nodes.interior[i].x * u;
      }
    }
    std::fprintf(f.get(), "t = %.6g: min = %.6g, max = %.6g", snap.t, lo, hi);
    if (std::abs(mass) > 1e-300)
      std::fprintf(f.get(), ", interior_mass_center_x = %.9g", mx / mass);
    std::fputc('\n', f.get());
  }
  if (res.has_exact) {
    std::fprintf(f.get(), "mae (final time, interior nodes): %.9g\n",
                 res.report.mae);
    std::fprintf(f.get(), "max_rel_err: %.9g\n", res.report.max_rel_err);
  } else {
    std::fputs("no analytic solution for this case; see fields.csv\n", f.get());
  }
  std::fprintf(f.get(), "wall_ms: %.3f\n", res.report.wall_ms);
}

void write_study_summary(const std::vector<ErrorReport>& rows,
                         const std::string& case_id, const std::string& path) {
  FilePtr f = open_for_write(path);
  std::fprintf(f.get(), "convergence study: %s\n", case_id.c_str());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ErrorReport& r = rows[i];
    std::fprintf(f.get(), "spacing %.6g  nodes %zu  mae %.9g  max_rel %.9g",
                 r.spacing, r.n_nodes, r.mae, r.max_rel_err);
    if (i > 0) {
      const double node_ratio = static_cast<double>(r.n_nodes) /
                                static_cast<double>(rows[i - 1].n_nodes);
      if (std::isnan(r.rate))
        std::fprintf(f.get(), "  rate undefined (error at roundoff)");
      else
        std::fprintf(f.get(), "  rate %.4g vs node ratio %.4g%s", r.rate,
                     node_ratio, r.rate > node_ratio ? "  super-linear" : "");
    }
    std::fputc('\n', f.get());
  }
}

int cli_run(const std::string& config_path, const std::string& out_override,
            bool seed_given, std::uint64_t seed, bool large) {
  RunConfig cfg = parse_config_file(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  if (cfg.out_dir.empty()) cfg.out_dir = ".";
  if (seed_given) {
    cfg.seed = seed;
    cfg.seed_set = true;
  }
  if (large) cfg.large = true;
  fs::create_directories(cfg.out_dir);
  const fs::path out(cfg.out_dir);

  if (cfg.case_id == "vector_vs_classical") {
    const std::vector<double> spacings =
        std::isnan(cfg.spacing)
            ? std::vector<double>{1.0 / 10, 1.0 / 15, 1.0 / 20, 1.0 / 25}
            : std::vector<double>{cfg.spacing};
    const auto rows = vector_vs_classical(spacings, cfg);

    std::vector<ErrorReport> flat;
    for (int col = 0; col < 2; ++col)
      for (const VectorClassicalRow& r : rows) {
        ErrorReport e;
        e.spacing = r.spacing;
        const long n = std::lround(1.0 / r.spacing);
        e.n_nodes = static_cast<std::size_t>((n + 1) * (n + 1));
        e.max_rel_err = col == 0 ? r.mre_directional : r.mre_axis;
        flat.push_back(e);
      }
    write_report_csv(flat, (out / "report.csv").string());

    FilePtr f = open_for_write((out / "summary.txt").string());
    std::fputs("directional (C1) vs axis (C2) assembly\n", f.get());
    for (const VectorClassicalRow& r : rows)
      std::fprintf(f.get(),
                   "spacing %.6g  mre_directional %.9g  mre_axis %.9g  "
                   "max_entry_diff %.3e\n",
                   r.spacing, r.mre_directional, r.mre_axis, r.max_entry_diff);
    std::printf("wrote %s and %s\n", (out / "report.csv").c_str(),
                (out / "summary.txt").c_str());
    return 0;
  }

  const CaseResult res = run_case(cfg);
  write_nodes_csv(res.nodes, (out / "nodes.csv").string());
  write_fields_csv(res.snapshots, (out / "fields.csv").string());
  write_report_csv({res.report}, (out / "report.csv").string());
  write_case_summary(cfg, res, (out / "summary.txt").string());
  if (res.has_exact)
    std::printf("%s: %zu nodes, mae %.6e, max_rel_err %.6e (t = %g)\n",
                cfg.case_id.c_str(), res.nodes.size(), res.report.mae,
                res.report.max_rel_err, res.snapshots.back().t);
  else
    std::printf("%s: %zu nodes, %zu snapshots written\n", cfg.case_id.c_str(),
                res.nodes.size(), res.snapshots.size());
  std::printf("outputs in %s: nodes.csv fields.csv report.csv summary.txt\n",
              out.c_str());
  return 0;
}

int cli_convergence(const std::string& case_id, const std::string& spacings_csv,
                    const std::string& out_dir) {
  const std::vector<double> spacings = parse_spacings(spacings_csv);
  RunConfig base;
  base.case_id = case_id;
  const auto rows = convergence_study(case_id, spacings, base);

  const fs::path out(out_dir.empty() ? "." : out_dir);
  fs::create_directories(out);
  write_report_csv(rows, (out / "report.csv").string());
  write_study_summary(rows, case_id, (out / "summary.txt").string());

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ErrorReport& r = rows[i];
    std::printf("spacing %.6g  nodes %zu  mae %.9g  max_rel %.9g", r.spacing,
                r.n_nodes, r.mae, r.max_rel_err);
    if (i > 0) {
      const double node_ratio = static_cast<double>(r.n_nodes) /
                                static_cast<double>(rows[i - 1].n_nodes);
      if (std::isnan(r.rate))
        std::printf("  rate undefined (error at roundoff)");
      else
        std::printf("  rate %.4g vs node ratio %.4g%s", r.rate, node_ratio,
                    r.rate > node_ratio ? "  super-linear" : "");
    }
    std::putchar('\n');
  }
  std::printf("wrote %s and %s\n", (out / "report.csv").c_str(),
              (out / "summary.txt").c_str());
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"meshless fractional-diffusion benchmarks"};
  app.require_subcommand(1);

  std::string config_path, run_out, conv_case, conv_spacings, conv_out;
  std::uint64_t seed = 0;
  bool large = false;

  CLI::App* run = app.add_subcommand("run", "solve a case from a config file");
  run->add_option("--config", config_path, "flat key = value config file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", run_out, "output directory");
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "node-generation seed override");
  run->add_flag("--large", large, "allow node counts above the default cap");

  CLI::App* conv =
      app.add_subcommand("convergence", "refinement study over spacings");
  conv->add_option("--case", conv_case, "case id")->required();
  conv->add_option("--spacings", conv_spacings,
                   "comma list; decimals or fractions like 1/20")
      ->required();
  conv->add_option("--out", conv_out, "output directory");

  CLI::App* lc = app.add_subcommand("list-cases", "print available case ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (lc->parsed()) {
      for (const CaseInfo& info : list_cases())
        std::printf("%-20s %s\n", info.id.c_str(), info.description.c_str());
      return 0;
    }
    if (run->parsed())
      return cli_run(config_path, run_out, seed_opt->count() > 0, seed, large);
    if (conv->parsed()) return cli_convergence(conv_case, conv_spacings, conv_out);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace frackansa
