#include "gridgeo/metric.hpp"

#include <cmath>
#include <stdexcept>

#include "gridgeo/finite_diff.hpp"
#include "gridgeo/types.hpp"

namespace gridgeo {

namespace {

std::vector<std::string> default_names(int dim) {
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace

MetricTensor::MetricTensor(Eigen::MatrixXd entries,
                           std::vector<std::string> coord_order)
    : entries_(0.5 * (entries + entries.transpose())),
      names_(std::move(coord_order)) {
  const int n = static_cast<int>(entries_.rows());
  if (entries_.cols() != n || (n != 2 && n != 3))
    throw std::invalid_argument("MetricTensor: dim must be 2 or 3");
  if (names_.empty()) names_ = default_names(n);
  if (static_cast<int>(names_.size()) != n)
    throw std::invalid_argument("MetricTensor: coordinate_order length != dim");
}

double MetricTensor::det() const {
  const auto& m = entries_;
  if (dim() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double MetricTensor::degeneracy_epsilon() const {
  return 1e-8 * std::pow(frobenius_norm(), dim());
}

bool MetricTensor::regular() const {
  return std::abs(det()) > degeneracy_epsilon();
}

std::vector<double> principal_minors(const MetricTensor& metric) {
  const auto& m = metric.entries();
  std::vector<double> minors;
  minors.push_back(m(0, 0));
  minors.push_back(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  if (metric.dim() == 3) minors.push_back(metric.det());
  return minors;
}

MetricTensor hessian_metric(const ScalarField& field,
                            std::span<const double> point,
                            std::vector<std::string> coord_order) {
  const int n = field.dim;
  Eigen::MatrixXd h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int idx[2] = {i, j};
      h(i, j) = h(j, i) = fd_partial(field, point, idx).value;
    }
  }
  return MetricTensor(std::move(h), std::move(coord_order));
}

MetricTensor pushforward(const MetricTensor& g, const Eigen::MatrixXd& jacobian,
                         std::vector<std::string> coord_order) {
  Eigen::MatrixXd out = jacobian.transpose() * g.entries() * jacobian;
  return MetricTensor(std::move(out), std::move(coord_order));
}

Eigen::MatrixXd MetricField::d_default(std::span<const double> x, int k) const {
  double scale = std::abs(x[k]);
  if (k < static_cast<int>(coord_scales.size()))
    scale = std::max(scale, coord_scales[k]);
  const double h = std::max(1e-3, 1e-3 * scale);
  std::vector<double> q(x.begin(), x.end());
  auto diff = [&](double step) {
    q[k] = x[k] + step;
    Eigen::MatrixXd gp = eval(q).entries();
    q[k] = x[k] - step;
    Eigen::MatrixXd gm = eval(q).entries();
    q[k] = x[k];
    return ((gp - gm) / (2.0 * step)).eval();
  };
  Eigen::MatrixXd coarse = diff(h);
  Eigen::MatrixXd fine = diff(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

Eigen::MatrixXd MetricField::dd_default(std::span<const double> x, int k,
                                        int l) const {
  double scale = std::max(std::abs(x[k]), std::abs(x[l]));
  if (k < static_cast<int>(coord_scales.size()))
    scale = std::max(scale, coord_scales[k]);
  if (l < static_cast<int>(coord_scales.size()))
    scale = std::max(scale, coord_scales[l]);
  const double h = std::max(1e-3, 1e-3 * scale);
  std::vector<double> q(x.begin(), x.end());
  auto second = [&](double step) -> Eigen::MatrixXd {
    if (k == l) {
      Eigen::MatrixXd g0 = eval(q).entries();
      q[k] = x[k] + step;
      Eigen::MatrixXd gp = eval(q).entries();
      q[k] = x[k] - step;
      Eigen::MatrixXd gm = eval(q).entries();
      q[k] = x[k];
      return (gp - 2.0 * g0 + gm) / (step * step);
    }
    auto at = [&](double dk, double dl) {
      q[k] = x[k] + dk;
      q[l] = x[l] + dl;
      Eigen::MatrixXd g = eval(q).entries();
      q[k] = x[k];
      q[l] = x[l];
      return g;
    };
    return (at(step, step) - at(step, -step) - at(-step, step) +
            at(-step, -step)) /
           (4.0 * step * step);
  };
  Eigen::MatrixXd coarse = second(h);
  Eigen::MatrixXd fine = second(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

MetricField hessian_metric_field(const ScalarField& field,
                                 std::vector<std::string> coord_order) {
  MetricField mf;
  mf.dim = field.dim;
  mf.coord_scales = field.coord_scales;
  mf.eval = [field, coord_order](std::span<const double> x) {
    return hessian_metric(field, x, coord_order);
  };
  // Entry derivatives are third/fourth partials of the potential, taken
  // directly; differencing the differenced Hessian loses too many digits.
  mf.d = [field](std::span<const double> x, int k) {
    const int n = field.dim;
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const int idx[3] = {i, j, k};
        out(i, j) = out(j, i) = fd_partial(field, x, idx).value;
      }
    return out;
  };
  mf.dd = [field](std::span<const double> x, int k, int l) {
    const int n = field.dim;
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const int idx[4] = {i, j, k, l};
        out(i, j) = out(j, i) = fd_partial(field, x, idx).value;
      }
    return out;
  };
  return mf;
}

}  // namespace gridgeo
