#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gridgeo/field.hpp"

namespace gridgeo {

/// Symmetric metric tensor on a 2- or 3-dimensional chart.
class MetricTensor {
 public:
  MetricTensor() = default;
  /// Symmetrizes on construction: entries <- (M + M^T)/2.
  MetricTensor(Eigen::MatrixXd entries, std::vector<std::string> coord_order);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }
  const std::vector<std::string>& coordinate_order() const { return names_; }

  double det() const;
  double frobenius_norm() const { return entries_.norm(); }

  /// Scale-aware degeneracy threshold: 1e-8 * ||g||_F^dim, sized above the
  /// determinant noise of finite-difference Hessians.
  double degeneracy_epsilon() const;
  bool regular() const;

 private:
  Eigen::MatrixXd entries_;
  std::vector<std::string> names_;
};

/// Leading principal minors in coordinate order; last entry equals det.
/// Computed by cofactor expansion (dim <= 3).
std::vector<double> principal_minors(const MetricTensor& metric);

/// Hessian metric of a scalar field: g_ij = d_i d_j field, mixed partials
/// averaged before symmetrization.
MetricTensor hessian_metric(const ScalarField& field,
                            std::span<const double> point,
                            std::vector<std::string> coord_order = {});

/// Tensorial basis change g' = J^T g J for a coordinate transform with
/// Jacobian J (new-basis differentials = J * old-basis differentials).
MetricTensor pushforward(const MetricTensor& g, const Eigen::MatrixXd& jacobian,
                         std::vector<std::string> coord_order = {});

/// A metric-valued field. `d` and `dd` give first and second coordinate
/// derivatives of the entries; defaults are central differences of `eval`.
/// Fields built from a Hessian override them with direct third/fourth
/// derivatives of the underlying potential, which is considerably more
/// accurate than differencing a differenced quantity.
struct MetricField {
  int dim = 0;
  std::function<MetricTensor(std::span<const double>)> eval;
  std::function<Eigen::MatrixXd(std::span<const double>, int)> d;
  std::function<Eigen::MatrixXd(std::span<const double>, int, int)> dd;
  std::vector<double> coord_scales;

  Eigen::MatrixXd d_default(std::span<const double> x, int k) const;
  Eigen::MatrixXd dd_default(std::span<const double> x, int k, int l) const;

  Eigen::MatrixXd deriv(std::span<const double> x, int k) const {
    return d ? d(x, k) : d_default(x, k);
  }
  Eigen::MatrixXd deriv2(std::span<const double> x, int k, int l) const {
    return dd ? dd(x, k, l) : dd_default(x, k, l);
  }
};

/// Wraps a scalar field's Hessian as a MetricField with direct
/// third/fourth-derivative entry providers.
MetricField hessian_metric_field(const ScalarField& field,
                                 std::vector<std::string> coord_order = {});

}  // namespace gridgeo
