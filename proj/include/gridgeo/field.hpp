#pragma once

#include <functional>
#include <span>
#include <vector>

namespace gridgeo {

/// A smooth scalar field over a small coordinate chart (dim 2 or 3).
///
/// `eval` must be deterministic. `in_domain`, when set, declares the open
/// set on which the field is smooth; finite-difference stencils refuse to
/// leave it. `coord_scales` are optional characteristic lengths per
/// coordinate used to size difference steps; they matter for fields whose
/// natural scale is much larger than the coordinate magnitude (e.g. a
/// reactance-dominated denominator probed near r = 0).
struct ScalarField {
  int dim = 0;
  std::function<double(std::span<const double>)> eval;
  std::function<bool(std::span<const double>)> in_domain;
  std::vector<double> coord_scales;

  double operator()(std::span<const double> x) const { return eval(x); }

  bool contains(std::span<const double> x) const {
    return !in_domain || in_domain(x);
  }
};

}  // namespace gridgeo
