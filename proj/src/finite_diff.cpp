#include "gridgeo/finite_diff.hpp"

#include <cmath>
#include <vector>

#include "gridgeo/types.hpp"

namespace gridgeo {

namespace {

// Nested first-order central differences; 2^k stencil for order k.
double nested_central(const ScalarField& field, std::vector<double>& x,
                      std::span<const int> idx, std::span<const double> h) {
  if (idx.empty()) {
    if (!field.contains(x)) throw OutOfDomainError("fd stencil left the field domain");
    return field(x);
  }
  const int k = static_cast<int>(idx.size()) - 1;
  const int coord = idx[k];
  const double step = h[k];
  const auto rest_i = idx.first(k);
  const auto rest_h = h.first(k);
  x[coord] += step;
  const double fp = nested_central(field, x, rest_i, rest_h);
  x[coord] -= 2.0 * step;
  const double fm = nested_central(field, x, rest_i, rest_h);
  x[coord] += step;
  return (fp - fm) / (2.0 * step);
}

}  // namespace

double StepPolicy::base_step(const ScalarField& field,
                             std::span<const double> x, int coord, int order) {
  double scale = std::abs(x[coord]);
  if (coord < static_cast<int>(field.coord_scales.size())) {
    // A declared hint is authoritative (it encodes domain constraints such
    // as "stay within the positive-C half-space").
    scale = std::max(scale, field.coord_scales[coord]);
  } else {
    scale = std::max(scale, kScaleFloor);
  }
  double h = kRelStep * scale;
  if (order == 2) h *= kSecondOrderFactor;
  if (order == 3) h *= kThirdOrderFactor;
  if (order >= 4) h *= kFourthOrderFactor;
  return h;
}

FdResult fd_partial(const ScalarField& field, std::span<const double> point,
                    std::span<const int> multi_index,
                    std::span<const double> steps) {
  const int order = static_cast<int>(multi_index.size());
  if (order < 1 || order > 4)
    throw std::invalid_argument("fd_partial: derivative order must be 1..4");
  for (int k = 0; k < order; ++k) {
    const int c = multi_index[k];
    if (c < 0 || c >= static_cast<int>(point.size()))
      throw std::invalid_argument("fd_partial: coordinate index out of range");
    const double mag = std::max(std::abs(point[c]), 1.0);
    if (!(steps[k] > mag * 0x1p-20))
      throw DegenerateStepError("fd_partial: step underflow for coordinate " +
                                std::to_string(c));
  }

  std::vector<double> x(point.begin(), point.end());
  const double coarse = nested_central(field, x, multi_index, steps);
  std::vector<double> half(steps.begin(), steps.end());
  for (double& h : half) h *= 0.5;
  const double fine = nested_central(field, x, multi_index, half);

  // Central differences are O(h^2); one Richardson pass.
  FdResult out;
  out.value = (4.0 * fine - coarse) / 3.0;
  out.error = std::abs(fine - coarse) / 3.0;
  if (order >= 3) {
    // High orders use wide base steps, so truncation dominates; a second
    // Richardson level cancels the O(h^4) term as well.
    std::vector<double> quarter(half);
    for (double& h : quarter) h *= 0.5;
    const double finest = nested_central(field, x, multi_index, quarter);
    const double r1 = out.value;
    const double r1b = (4.0 * finest - fine) / 3.0;
    out.value = (16.0 * r1b - r1) / 15.0;
    out.error = std::abs(r1b - r1) / 15.0;
  }
  return out;
}

FdResult fd_partial(const ScalarField& field, std::span<const double> point,
                    std::span<const int> multi_index) {
  const int order = static_cast<int>(multi_index.size());
  std::vector<double> steps(multi_index.size());
  for (int k = 0; k < order; ++k)
    steps[k] = StepPolicy::base_step(field, point, multi_index[k], order);
  return fd_partial(field, point, multi_index, steps);
}

FdResult fd_partial(const ScalarField& field, std::span<const double> point,
                    std::span<const int> multi_index, double step) {
  std::vector<double> steps(multi_index.size(), step);
  return fd_partial(field, point, multi_index, steps);
}

}  // namespace gridgeo
