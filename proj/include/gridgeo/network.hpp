#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridgeo/lcr.hpp"
#include "gridgeo/lr.hpp"
#include "gridgeo/metric.hpp"

namespace gridgeo::net {

/// A transmission line in per-unit; absent C means LR analysis.
struct LineSpec {
  std::string id;
  std::string from_bus;
  std::string to_bus;
  double r = 0.0;
  double L = 0.0;
  std::optional<double> C;
};

struct BusSpec {
  std::string id;
  double v = 1.0;      ///< voltage magnitude
  double delta = 0.0;  ///< phase
};

struct NetworkSpec {
  double omega = 3.141592653589793;
  std::vector<BusSpec> buses;
  std::vector<LineSpec> lines;

  const BusSpec* find_bus(const std::string& id) const;
  std::vector<const LineSpec*> incident_lines(const std::string& bus_id) const;
};

/// Parses and validates a JSON case document; see the file grammar in the
/// README. Throws ParseError with the offending field path.
NetworkSpec load_network(const std::string& source);

/// Serializes a NetworkSpec back to its canonical JSON document. A
/// generated document re-parses to an identical spec.
std::string save_network(const NetworkSpec& spec);

struct BusPower {
  double P = 0.0;
  double Q = 0.0;
};

/// Bus power sums P_i = sum |V_i||V_j||Y_ij| cos(theta_ij + delta_j -
/// delta_i), Q_i with sin, over lines incident to the bus;
/// tan theta_ij = (X_L - X_C)/r, |Y| = 1/sqrt(r^2 + X^2).
BusPower bus_power(const NetworkSpec& spec, const std::string& bus_id);

/// Jacobian of (r, L, C) -> (r, X_L, X_C): diag(1, omega, -1/(omega C^2)),
/// det = -1/C^2. Throws SingularInputError at C = 0.
struct BasisJacobian {
  Eigen::MatrixXd matrix;
  double det = 0.0;
};
BasisJacobian impedance_basis_jacobian(double C, double omega);

/// Block-diagonal bus metric assembled from per-line oracle metrics.
struct BusBlockMetric {
  std::string bus_id;
  std::vector<MetricTensor> blocks;
  Eigen::MatrixXd assembled;
  std::vector<double> minors;
  bool stable = false;  ///< all leading minors > 0
};
BusBlockMetric bus_block_metric(const NetworkSpec& spec,
                                const std::string& bus_id);

/// Per-line verdict as produced by analyze_network.
struct LineReport {
  LineSpec line;
  std::optional<lr::LRVerdict> lr;
  std::optional<lcr::LCRVerdict> lcr;
  std::optional<double> boundary_L;  ///< Eq-16 boundary for unreliable LR lines
  std::string error;                 ///< nonempty when analysis failed
};

struct NetworkReport {
  double omega = 0.0;
  std::vector<LineReport> lines;
  std::vector<BusBlockMetric> buses;
};

NetworkReport analyze_network(const NetworkSpec& spec);

/// Machine-readable rendering (deterministic JSON).
std::string report_json(const NetworkReport& report);

/// Aligned plain-text table.
std::string report_text(const NetworkReport& report);

}  // namespace gridgeo::net
