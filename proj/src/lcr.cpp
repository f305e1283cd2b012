#include "gridgeo/lcr.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "gridgeo/finite_diff.hpp"
#include "gridgeo/types.hpp"

namespace gridgeo::lcr {

void LCRState::validate() const {
  if (r < 0.0 || L < 0.0)
    throw SingularInputError("LCRState: r and L must be nonnegative");
  if (!(C > 0.0))
    throw SingularInputError("LCRState: C must be > 0 (basis transform is "
                             "singular at C = 0)");
  if (!(omega > 0.0)) throw SingularInputError("LCRState: omega must be > 0");
  const double x = reactance();
  if (r * r + x * x == 0.0)
    throw SingularInputError("LCRState: on the power singularity locus");
}

double lcr_effective_power(const LCRState& state) {
  state.validate();
  const double x = state.reactance();
  return (state.r + x) / (state.r * state.r + x * x);
}

double lcr_effective_power_impedance(double r, double X_L, double X_C) {
  const double x = X_L - X_C;
  const double den = r * r + x * x;
  if (den == 0.0)
    throw SingularInputError("lcr_effective_power_impedance: singular locus");
  return (r + x) / den;
}

namespace {

std::vector<double> lcr_scales(double L, double C, double r, double omega) {
  const double x = omega * L - 1.0 / (omega * C);
  const double span = std::hypot(r, x);  // distance scale of the denominator
  const double scale_L = std::max(span / omega, std::abs(L));
  const double scale_r = std::max(span, std::abs(r));
  // A step dC moves the reactance by dC/(omega C^2); keep that within the
  // denominator scale without leaving C > 0.
  const double scale_C = std::min(0.5 * C, span * omega * C * C);
  return {scale_L, scale_C, scale_r};
}

}  // namespace

ScalarField lcr_power_field(double omega) {
  ScalarField f;
  f.dim = 3;
  f.eval = [omega](std::span<const double> q) {
    const double L = q[0], C = q[1], r = q[2];
    const double x = omega * L - 1.0 / (omega * C);
    return (r + x) / (r * r + x * x);
  };
  f.in_domain = [omega](std::span<const double> q) {
    const double C = q[1];
    if (!(C > 0.0)) return false;
    const double x = omega * q[0] - 1.0 / (omega * C);
    return q[2] * q[2] + x * x > 0.0;
  };
  return f;
}

MetricTensor lcr_metric_oracle(const LCRState& state) {
  state.validate();
  ScalarField f = lcr_power_field(state.omega);
  f.coord_scales = lcr_scales(state.L, state.C, state.r, state.omega);
  const double q[3] = {state.L, state.C, state.r};
  return hessian_metric(f, q, {"L", "C", "r"});
}

MetricField lcr_oracle_metric_field(double omega) {
  ScalarField f = lcr_power_field(omega);
  MetricField mf = hessian_metric_field(f, {"L", "C", "r"});
  // Rebuild with per-point scale hints: the hints depend on the state, so
  // they are injected when the field is evaluated.
  MetricField scaled;
  scaled.dim = 3;
  scaled.eval = [omega](std::span<const double> q) {
    ScalarField g = lcr_power_field(omega);
    g.coord_scales = lcr_scales(q[0], q[1], q[2], omega);
    return hessian_metric(g, q, {"L", "C", "r"});
  };
  scaled.d = [omega](std::span<const double> q, int k) {
    ScalarField g = lcr_power_field(omega);
    g.coord_scales = lcr_scales(q[0], q[1], q[2], omega);
    Eigen::MatrixXd out(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const int idx[3] = {i, j, k};
        out(i, j) = out(j, i) = fd_partial(g, q, idx).value;
      }
    return out;
  };
  scaled.dd = [omega](std::span<const double> q, int k, int l) {
    ScalarField g = lcr_power_field(omega);
    g.coord_scales = lcr_scales(q[0], q[1], q[2], omega);
    Eigen::MatrixXd out(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        const int idx[4] = {i, j, k, l};
        out(i, j) = out(j, i) = fd_partial(g, q, idx).value;
      }
    return out;
  };
  return scaled;
}

namespace {

// Raw evaluation of the published matrix; rational in (r, L, C), so it
// extends smoothly to the stencil neighborhood of the physical quadrant.
MetricTensor closed_form_raw(double r, double L, double C, double w) {
  const double den =
      std::pow(r * r * w * w * C * C + std::pow(w, 4) * L * L * C * C -
                   2.0 * w * w * L * C + 1.0,
               3);
  const double a =
      std::pow(r, 3) * std::pow(w, 3) * std::pow(C, 3) -
      3.0 * r * std::pow(w, 5) * std::pow(C, 3) * L * L +
      6.0 * r * std::pow(w, 3) * C * C * L - 3.0 * r * w * C +
      3.0 * r * r * std::pow(w, 4) * std::pow(C, 3) * L -
      3.0 * r * r * w * w * C * C - std::pow(w, 6) * std::pow(L, 3) * std::pow(C, 3) +
      3.0 * std::pow(w, 4) * L * L * C * C - 3.0 * w * w * L * C + 1.0;
  const double b =
      std::pow(r, 3) * std::pow(w, 3) * std::pow(C, 3) -
      3.0 * r * std::pow(w, 5) * std::pow(C, 3) * L * L +
      6.0 * r * std::pow(w, 3) * C * C * L - 3.0 * r * w * C -
      3.0 * r * r * std::pow(w, 4) * std::pow(C, 3) * L +
      3.0 * r * r * w * w * C * C + std::pow(w, 6) * std::pow(L, 3) * std::pow(C, 3) -
      3.0 * std::pow(w, 4) * L * L * C * C + 3.0 * w * w * L * C - 1.0;
  const double c =
      w * L - r - 3.0 * r * r * w * C + 3.0 * std::pow(w, 5) * C * C * std::pow(L, 3) +
      3.0 * std::pow(r, 3) * w * w * C * C +
      3.0 * r * r * std::pow(w, 3) * C * C * L +
      3.0 * r * std::pow(w, 4) * C * C * L * L -
      2.0 * r * std::pow(w, 6) * std::pow(L, 3) * std::pow(C, 3) -
      2.0 * std::pow(r, 3) * std::pow(w, 4) * std::pow(C, 3) * L -
      3.0 * std::pow(w, 3) * L * L * C - std::pow(w, 7) * std::pow(C, 3) * std::pow(L, 4) +
      std::pow(r, 4) * std::pow(w, 3) * std::pow(C, 3);

  const double g_rr = 2.0 * std::pow(w, 3) * std::pow(C, 3) * a / den;
  const double g_rL = -2.0 * std::pow(w, 4) * std::pow(C, 3) * b / den;
  const double g_rC = -2.0 * w * w * C * b / den;
  // As published, the L-L component repeats the L-C expression.
  const double g_LL = -2.0 * std::pow(w, 3) * C * a / den;
  const double g_LC = -2.0 * std::pow(w, 3) * C * a / den;
  const double g_CC = -2.0 * w * w * c / den;

  Eigen::MatrixXd g(3, 3);
  g << g_LL, g_LC, g_rL, g_LC, g_CC, g_rC, g_rL, g_rC, g_rr;
  return MetricTensor(std::move(g), {"L", "C", "r"});
}

}  // namespace

MetricTensor lcr_metric_closed(const LCRState& state) {
  state.validate();
  return closed_form_raw(state.r, state.L, state.C, state.omega);
}

MetricField lcr_closed_metric_field(double omega) {
  MetricField mf;
  mf.dim = 3;
  mf.eval = [omega](std::span<const double> q) {
    return closed_form_raw(q[2], q[0], q[1], omega);
  };
  return mf;
}

double lc_surface_minor(const LCRState& state) {
  return principal_minors(lcr_metric_oracle(state))[1];
}

double lcr_det(const LCRState& state) {
  return lcr_metric_oracle(state).det();
}

double published_limit_det(double omega, double C) {
  return 8.0 * (1.0 - 3.0 * omega * omega * C * C) * std::pow(omega, 7) *
         std::pow(C, 3);
}

double published_limit_ricci(double omega, double C) {
  const double w2c2 = omega * omega * C * C;
  const double pole = 1.0 - 3.0 * w2c2;
  return 0.5 * (-6.0 + 25.0 * w2c2 - 51.0 * w2c2 * w2c2) /
         (pole * pole * omega * C);
}

CurvatureReport lcr_scalar_curvature(const LCRState& state) {
  state.validate();
  const MetricField mf = lcr_oracle_metric_field(state.omega);
  const double q[3] = {state.L, state.C, state.r};
  return ricci_scalar_nd(mf, q, 3);
}

LCRVerdict classify_lcr(const LCRState& state) {
  state.validate();
  LCRVerdict v;
  v.metric = lcr_metric_oracle(state);
  const auto minors = principal_minors(v.metric);
  v.p2_surface = minors[1];
  v.det_g = minors[2];
  v.surface_stable = v.p2_surface > 0.0;
  v.volume_stable = v.det_g > 0.0;
  if (!v.metric.regular()) {
    v.singular = true;
    v.globally_stable = false;
    v.ricci_scalar = std::numeric_limits<double>::quiet_NaN();
    return v;
  }
  try {
    const CurvatureReport curv = lcr_scalar_curvature(state);
    v.ricci_scalar = curv.ricci_scalar;
    v.globally_stable = std::isfinite(curv.ricci_scalar) &&
                        std::abs(curv.ricci_scalar) < kBlowupThreshold;
  } catch (const SingularConfigurationError&) {
    v.singular = true;
    v.globally_stable = false;
    v.ricci_scalar = std::numeric_limits<double>::quiet_NaN();
  }
  return v;
}

ReconciliationReport reconcile_closed_form(const LCRState& state,
                                           double tolerance) {
  const MetricTensor closed = lcr_metric_closed(state);
  const MetricTensor oracle = lcr_metric_oracle(state);
  static const char* names[3] = {"L", "C", "r"};
  ReconciliationReport rep;
  rep.state = state;
  rep.all_agree = true;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      ReconciliationEntry e;
      e.component = std::string("g_") + names[i] + names[j];
      e.closed = closed(i, j);
      e.oracle = oracle(i, j);
      const double scale =
          std::max({std::abs(e.closed), std::abs(e.oracle), 1e-300});
      e.relative_error = std::abs(e.closed - e.oracle) / scale;
      e.agrees = e.relative_error <= tolerance;
      rep.all_agree = rep.all_agree && e.agrees;
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

double GridSpec::at(int i) const {
  if (count <= 1) return start;
  return start + (stop - start) * static_cast<double>(i) /
                     static_cast<double>(count - 1);
}

std::vector<GridCell> sweep_grid(double r, const GridSpec& L_range,
                                 const GridSpec& C_range, double omega) {
  std::vector<GridCell> out;
  out.reserve(static_cast<size_t>(L_range.count) * C_range.count);
  for (int i = 0; i < L_range.count; ++i) {
    for (int j = 0; j < C_range.count; ++j) {
      GridCell cell;
      cell.L = L_range.at(i);
      cell.C = C_range.at(j);
      try {
        const LCRVerdict v = classify_lcr({r, cell.L, cell.C, omega});
        cell.p2 = v.p2_surface;
        cell.det_g = v.det_g;
        cell.ricci = v.ricci_scalar;
        cell.surface_stable = v.surface_stable;
        cell.volume_stable = v.volume_stable;
        cell.globally_stable = v.globally_stable;
        cell.singular = v.singular;
        if (!std::isfinite(cell.p2) || !std::isfinite(cell.det_g))
          cell.singular = true;
      } catch (const std::exception&) {
        cell.singular = true;
      }
      out.push_back(cell);
    }
  }
  return out;
}

std::string grid_csv(const std::vector<GridCell>& grid) {
  std::string out =
      "L,C,P2,det_g,R,surface_stable,volume_stable,globally_stable,"
      "singular_flag\n";
  char buf[256];
  for (const auto& c : grid) {
    if (c.singular) {
      std::snprintf(buf, sizeof(buf), "%.17e,%.17e,nan,nan,nan,0,0,0,1\n", c.L,
                    c.C);
    } else {
      std::snprintf(buf, sizeof(buf),
                    "%.17e,%.17e,%.17e,%.17e,%.17e,%d,%d,%d,0\n", c.L, c.C,
                    c.p2, c.det_g, c.ricci, c.surface_stable ? 1 : 0,
                    c.volume_stable ? 1 : 0, c.globally_stable ? 1 : 0);
    }
    out += buf;
  }
  return out;
}

std::optional<CInterval> recommend_capacitor_range(double r, double L,
                                                   double omega) {
  constexpr double kResolution = 1e-3;
  constexpr int kSteps = 1000;
  int best_lo = -1, best_hi = -1, run_lo = -1;
  for (int i = 1; i <= kSteps + 1; ++i) {
    bool ok = false;
    if (i <= kSteps) {
      const double C = i * kResolution;
      try {
        const LCRVerdict v = classify_lcr({r, L, C, omega});
        ok = v.surface_stable && v.volume_stable && v.globally_stable;
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (ok && run_lo < 0) run_lo = i;
    if (!ok && run_lo >= 0) {
      if (best_lo < 0 || (i - run_lo) > (best_hi - best_lo)) {
        best_lo = run_lo;
        best_hi = i - 1;
      }
      run_lo = -1;
    }
  }
  if (best_lo < 0) return std::nullopt;
  return CInterval{best_lo * kResolution, best_hi * kResolution};
}

}  // namespace gridgeo::lcr
