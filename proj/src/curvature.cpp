#include "gridgeo/curvature.hpp"

#include <cmath>

#include "gridgeo/finite_diff.hpp"
#include "gridgeo/types.hpp"

namespace gridgeo {

namespace {

struct Hessian2Partials {
  double S11, S12, S22;        // second partials
  double S111, S112, S122, S222;  // third partials
};

Hessian2Partials second_and_third_partials(const ScalarField& field,
                                           std::span<const double> x) {
  auto d = [&](std::initializer_list<int> idx) {
    return fd_partial(field, x, std::span<const int>(idx.begin(), idx.size()))
        .value;
  };
  Hessian2Partials p{};
  p.S11 = d({0, 0});
  p.S12 = d({0, 1});
  p.S22 = d({1, 1});
  p.S111 = d({0, 0, 0});
  p.S112 = d({0, 0, 1});
  p.S122 = d({0, 1, 1});
  p.S222 = d({1, 1, 1});
  return p;
}

// Curvature numerator of a 2-D Hessian metric, with the magnitude the
// terms would sum to without cancellation (for the flatness residual).
struct Numerator {
  double value;
  double magnitude;
};

Numerator hessian_2d_numerator(const Hessian2Partials& p) {
  const double terms[6] = {
      p.S22 * p.S112 * p.S112, -p.S22 * p.S111 * p.S122,
      p.S11 * p.S122 * p.S122, -p.S11 * p.S112 * p.S222,
      p.S12 * p.S111 * p.S222, -p.S12 * p.S112 * p.S122,
  };
  Numerator n{0.0, 0.0};
  for (double t : terms) {
    n.value += t;
    n.magnitude += std::abs(t);
  }
  return n;
}

}  // namespace

std::vector<Eigen::MatrixXd> christoffel_first_kind(
    const MetricField& metric_field, std::span<const double> point) {
  const int n = metric_field.dim;
  std::vector<Eigen::MatrixXd> dg;
  dg.reserve(n);
  for (int k = 0; k < n; ++k) dg.push_back(metric_field.deriv(point, k));

  std::vector<Eigen::MatrixXd> gamma(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gamma[k](i, j) = 0.5 * (dg[i](j, k) + dg[j](i, k) - dg[k](i, j));
  return gamma;
}

double riemann_2d_hessian(const ScalarField& field,
                          std::span<const double> point) {
  const auto p = second_and_third_partials(field, point);
  const double det = p.S11 * p.S22 - p.S12 * p.S12;
  MetricTensor g((Eigen::MatrixXd(2, 2) << p.S11, p.S12, p.S12, p.S22)
                     .finished(),
                 {});
  if (std::abs(det) <= g.degeneracy_epsilon())
    throw SingularConfigurationError("riemann_2d_hessian: degenerate metric",
                                     det);
  return hessian_2d_numerator(p).value / (4.0 * det);
}

CurvatureReport ricci_scalar_2d(const ScalarField& field,
                                std::span<const double> point) {
  const auto p = second_and_third_partials(field, point);
  MetricTensor g((Eigen::MatrixXd(2, 2) << p.S11, p.S12, p.S12, p.S22)
                     .finished(),
                 {});
  CurvatureReport rep;
  rep.det_g = g.det();
  rep.minors = principal_minors(g);
  rep.regular = g.regular();
  if (!rep.regular)
    throw SingularConfigurationError("ricci_scalar_2d: degenerate metric",
                                     rep.det_g);
  const Numerator n = hessian_2d_numerator(p);
  rep.riemann_1212 = n.value / (4.0 * rep.det_g);
  rep.ricci_scalar = 2.0 * rep.riemann_1212 / rep.det_g;
  const double floor = 1e-300;
  rep.ricci_scalar_scaled = std::abs(n.value) / std::max(n.magnitude, floor);
  return rep;
}

CurvatureReport curvature_of_metric_field(const MetricField& metric_field,
                                          std::span<const double> point) {
  const int n = metric_field.dim;
  const MetricTensor g = metric_field.eval(point);
  CurvatureReport rep;
  rep.det_g = g.det();
  rep.minors = principal_minors(g);
  rep.regular = g.regular();
  if (!rep.regular)
    throw SingularConfigurationError(
        "curvature_of_metric_field: singular metric", rep.det_g);

  const Eigen::MatrixXd ginv = g.entries().inverse();
  const auto gamma = christoffel_first_kind(metric_field, point);

  std::vector<std::vector<Eigen::MatrixXd>> ddg(n);
  for (int k = 0; k < n; ++k) {
    ddg[k].resize(n);
    for (int l = k; l < n; ++l) ddg[k][l] = metric_field.deriv2(point, k, l);
    for (int l = 0; l < k; ++l) ddg[k][l] = ddg[l][k];
  }

  auto riemann = [&](int a, int b, int c, int d) {
    double t = 0.5 * (ddg[b][c](a, d) + ddg[a][d](b, c) - ddg[b][d](a, c) -
                      ddg[a][c](b, d));
    for (int e = 0; e < n; ++e)
      for (int f = 0; f < n; ++f)
        t += ginv(e, f) * (gamma[e](b, c) * gamma[f](a, d) -
                           gamma[e](b, d) * gamma[f](a, c));
    return t;
  };

  if (n == 2) rep.riemann_1212 = riemann(0, 1, 0, 1);

  double scalar = 0.0;
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      double ricci_bd = 0.0;
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) ricci_bd += ginv(a, c) * riemann(a, b, c, d);
      scalar += ginv(b, d) * ricci_bd;
    }
  rep.ricci_scalar = scalar;
  return rep;
}

CurvatureReport ricci_scalar_nd(const MetricField& metric_field,
                                std::span<const double> point, int dim) {
  if (dim != 3 || metric_field.dim != 3)
    throw std::invalid_argument("ricci_scalar_nd: dim must be 3");
  return curvature_of_metric_field(metric_field, point);
}

}  // namespace gridgeo
