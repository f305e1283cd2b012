#pragma once

#include <span>
#include <vector>

#include "gridgeo/field.hpp"
#include "gridgeo/metric.hpp"

namespace gridgeo {

/// Curvature invariants of a metric at a point.
struct CurvatureReport {
  double riemann_1212 = 0.0;  ///< lowered R_1212, 2-D only
  double ricci_scalar = 0.0;
  double det_g = 0.0;
  bool regular = false;  ///< |det g| above the degeneracy threshold
  std::vector<double> minors;
  /// Ricci scalar divided by the magnitude it would have if the curvature
  /// numerator's terms did not cancel; a dimensionless flatness residual.
  double ricci_scalar_scaled = 0.0;
};

/// Christoffel symbols of the first kind,
/// Gamma_{k,ij} = (d_i g_jk + d_j g_ik - d_k g_ij)/2,
/// indexed result[k](i,j); symmetric in (i,j).
std::vector<Eigen::MatrixXd> christoffel_first_kind(
    const MetricField& metric_field, std::span<const double> point);

/// Lowered R_1212 of the Hessian metric of a 2-D scalar field, from the
/// third-partial reconstruction
///   N = S22 (S112^2 - S111 S122) + S11 (S122^2 - S112 S222)
///     + S12 (S111 S222 - S112 S122),
///   D = 4 (S11 S22 - S12^2),   R_1212 = N / D.
/// Throws SingularConfigurationError at a degenerate Hessian.
double riemann_2d_hessian(const ScalarField& field,
                          std::span<const double> point);

/// Full 2-D report for a Hessian metric; ricci_scalar = 2 R_1212 / det g.
CurvatureReport ricci_scalar_2d(const ScalarField& field,
                                std::span<const double> point);

/// Curvature of a generic metric field (dim 2 or 3) through the standard
/// metric-derivative pipeline:
///   R_abcd = (dd_bc g_ad + dd_ad g_bc - dd_bd g_ac - dd_ac g_bd)/2
///          + g^{ef} (Gamma_{e,bc} Gamma_{f,ad} - Gamma_{e,bd} Gamma_{f,ac})
/// contracted to the Ricci scalar. Sign convention: unit 2-sphere has R = 2.
CurvatureReport curvature_of_metric_field(const MetricField& metric_field,
                                          std::span<const double> point);

/// 3-D Ricci scalar; precondition dim == 3.
CurvatureReport ricci_scalar_nd(const MetricField& metric_field,
                                std::span<const double> point, int dim);

}  // namespace gridgeo
