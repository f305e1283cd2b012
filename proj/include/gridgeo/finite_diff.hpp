#pragma once

#include <span>
#include <vector>

#include "gridgeo/field.hpp"

namespace gridgeo {

/// A finite-difference estimate together with its Richardson error estimate.
struct FdResult {
  double value = 0.0;
  double error = 0.0;
};

/// Step-size policy for central differences.
///
/// Base step is kRelStep times the coordinate scale: the declared
/// per-coordinate hint when the field has one, otherwise
/// max(|coord|, kScaleFloor). Derivatives of order three and four use
/// much larger steps, sized so that with two Richardson levels the
/// rounding noise of the deep nested stencils balances the O(h^6)
/// truncation.
struct StepPolicy {
  static constexpr double kRelStep = 1e-4;
  static constexpr double kScaleFloor = 0.05;
  static constexpr double kSecondOrderFactor = 10.0;
  static constexpr double kThirdOrderFactor = 256.0;
  static constexpr double kFourthOrderFactor = 512.0;

  static double base_step(const ScalarField& field, std::span<const double> x,
                          int coord, int order);
};

/// Central-difference partial derivative with Richardson extrapolation.
///
/// `multi_index` lists the coordinates to differentiate against, one entry
/// per derivative order (repeats allowed), order <= 4. The estimate is
/// formed at steps h and h/2 and extrapolated; the returned error is the
/// extrapolation residual.
///
/// Throws DegenerateStepError when a step underflows 2^-20 of the
/// coordinate magnitude, OutOfDomainError when the stencil would leave the
/// field's declared domain.
FdResult fd_partial(const ScalarField& field, std::span<const double> point,
                    std::span<const int> multi_index,
                    std::span<const double> steps);

/// Same, with steps from StepPolicy.
FdResult fd_partial(const ScalarField& field, std::span<const double> point,
                    std::span<const int> multi_index);

/// Convenience: single uniform step for every index.
FdResult fd_partial(const ScalarField& field, std::span<const double> point,
                    std::span<const int> multi_index, double step);

}  // namespace gridgeo
