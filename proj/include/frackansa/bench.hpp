#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frackansa/solver.hpp"

namespace frackansa {

// Resolved run parameters. NaN / -1 / empty fields fall back to case defaults.
struct RunConfig {
  std::string case_id;
  double alpha = NAN;
  double beta = NAN;
  double beta_x = NAN;
  double beta_y = NAN;
  double shape_c = NAN;
  double spacing = NAN;
  double omega = NAN;
  double velocity = NAN;    // scalar V override (application cases)
  double diffusion = NAN;   // scalar K override (application cases)
  double diffusion2 = NAN;  // second atom coefficient (app_discrete)
  long node_count = -1;
  int quad_points = -1;    // inner Gauss-Jacobi size
  int angular_points = -1; // midpoint rule size
  std::string node_mode;
  std::vector<double> times;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string out_dir;
  bool large = false;
};

RunConfig parse_config_file(const std::string& path);

struct FieldSnapshot {
  double t = 0;
  std::vector<Point> points;
  Eigen::VectorXd values;
  Eigen::VectorXd coeffs;  // RBF weights; evaluate() them anywhere off-node
};

struct ErrorReport {
  double spacing = 0;
  std::size_t n_nodes = 0;
  double mae = NAN;          // vs the analytic solution when one exists
  double max_rel_err = NAN;  // denominators below 1e-12 excluded
  double rate = NAN;         // filled by convergence studies
  double wall_ms = 0;
};

struct CaseResult {
  NodeSet nodes;
  RbfBasis basis;                        // pairs with FieldSnapshot::coeffs
  std::vector<FieldSnapshot> snapshots;  // evaluated at the nodes
  ErrorReport report;                    // errors at the last output time
  bool has_exact = false;
};

struct CaseInfo {
  std::string id;
  std::string description;
};

std::vector<CaseInfo> list_cases();

CaseResult run_case(const RunConfig&);

// Refinement study at the given lattice spacings; rate column holds the plain
// ratio mae_prev / mae between consecutive rows (NaN on the first row or when
// either MAE sits at roundoff).
std::vector<ErrorReport> convergence_study(const std::string& case_id,
                                           const std::vector<double>& spacings,
                                           const RunConfig& base);

// Fixed spatial resolution, logarithmically spaced output times.
struct LongTimeSample {
  double t = 0;
  double rel_err_mid = 0;  // relative error at the domain midpoint
  double wall_ms = 0;      // propagation cost for this output time
};
std::vector<LongTimeSample> long_time_study(const std::vector<double>& times,
                                            const RunConfig& base);

// Same problem assembled through the directional kernel at theta in {0, pi/2}
// (C1) and through the axis kernel (C2).
struct VectorClassicalRow {
  double spacing = 0;
  double mre_directional = 0;
  double mre_axis = 0;
  double max_entry_diff = 0;  // operator matrices, entrywise
};
std::vector<VectorClassicalRow> vector_vs_classical(
    const std::vector<double>& spacings, const RunConfig& base);

// CSV / summary writers (12+ significant digits, deterministic layout).
void write_fields_csv(const std::vector<FieldSnapshot>&, const std::string& path);
void write_report_csv(const std::vector<ErrorReport>&, const std::string& path);

int cli_main(int argc, char** argv);

}  // namespace frackansa
