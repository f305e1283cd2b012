#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "gridgeo/finite_diff.hpp"
#include "gridgeo/types.hpp"

using namespace gridgeo;

namespace {

ScalarField poly_field() {
  // f(x, y) = x^3 y^2 + 2 x y + y^4
  ScalarField f;
  f.dim = 2;
  f.eval = [](std::span<const double> q) {
    const double x = q[0], y = q[1];
    return x * x * x * y * y + 2.0 * x * y + y * y * y * y;
  };
  return f;
}

}  // namespace

TEST_CASE("first partials of a polynomial") {
  const ScalarField f = poly_field();
  const double p[2] = {1.3, 0.7};
  const int dx[1] = {0};
  const int dy[1] = {1};
  // fx = 3 x^2 y^2 + 2 y, fy = 2 x^3 y + 2 x + 4 y^3
  CHECK(fd_partial(f, p, dx).value ==
        doctest::Approx(3 * 1.3 * 1.3 * 0.49 + 1.4).epsilon(1e-9));
  CHECK(fd_partial(f, p, dy).value ==
        doctest::Approx(2 * std::pow(1.3, 3) * 0.7 + 2.6 + 4 * std::pow(0.7, 3))
            .epsilon(1e-9));
}

TEST_CASE("second and mixed partials") {
  const ScalarField f = poly_field();
  const double p[2] = {1.3, 0.7};
  const int dxx[2] = {0, 0};
  const int dxy[2] = {0, 1};
  const int dyy[2] = {1, 1};
  CHECK(fd_partial(f, p, dxx).value ==
        doctest::Approx(6 * 1.3 * 0.49).epsilon(1e-7));
  CHECK(fd_partial(f, p, dxy).value ==
        doctest::Approx(6 * 1.3 * 1.3 * 0.7 + 2.0).epsilon(1e-7));
  CHECK(fd_partial(f, p, dyy).value ==
        doctest::Approx(2 * std::pow(1.3, 3) + 12 * 0.49).epsilon(1e-7));
}

TEST_CASE("third and fourth partials") {
  const ScalarField f = poly_field();
  const double p[2] = {1.3, 0.7};
  const int dxxx[3] = {0, 0, 0};
  const int dxxy[3] = {0, 0, 1};
  const int dyyyy[4] = {1, 1, 1, 1};
  CHECK(fd_partial(f, p, dxxx).value ==
        doctest::Approx(6 * 0.49).epsilon(1e-7));
  CHECK(fd_partial(f, p, dxxy).value ==
        doctest::Approx(12 * 1.3 * 0.7).epsilon(1e-7));
  CHECK(fd_partial(f, p, dyyyy).value == doctest::Approx(24.0).epsilon(1e-6));
}

TEST_CASE("richardson error estimate tracks the real error") {
  ScalarField f;
  f.dim = 1;
  f.eval = [](std::span<const double> q) { return std::sin(q[0]); };
  const double p[1] = {0.9};
  const int dx[1] = {0};
  const FdResult r = fd_partial(f, p, dx);
  CHECK(std::abs(r.value - std::cos(0.9)) <= 10 * r.error + 1e-12);
}

TEST_CASE("domain refusal and step validation") {
  ScalarField f;
  f.dim = 1;
  f.eval = [](std::span<const double> q) { return std::sqrt(q[0]); };
  f.in_domain = [](std::span<const double> q) { return q[0] > 0.0; };
  const int dx[1] = {0};

  const double near_edge[1] = {1e-6};
  CHECK_THROWS_AS((void)fd_partial(f, near_edge, dx, 1e-3), OutOfDomainError);

  const double inside[1] = {0.5};
  CHECK_THROWS_AS((void)fd_partial(f, inside, dx, 1e-9), DegenerateStepError);

  const int too_many[5] = {0, 0, 0, 0, 0};
  CHECK_THROWS_AS((void)fd_partial(f, inside, too_many),
                  std::invalid_argument);
  const int bad_coord[1] = {3};
  CHECK_THROWS_AS((void)fd_partial(f, inside, bad_coord),
                  std::invalid_argument);
}

TEST_CASE("coordinate scale hints widen steps") {
  // A field varying on scale ~100 in x: tiny relative steps near x = 0
  // would be noise-dominated without the hint.
  ScalarField f;
  f.dim = 1;
  f.eval = [](std::span<const double> q) { return std::sin(q[0] / 100.0); };
  f.coord_scales = {100.0};
  const double p[1] = {0.01};
  const int dxxx[3] = {0, 0, 0};
  const double expect = -std::cos(0.01 / 100.0) / 1e6;
  CHECK(fd_partial(f, p, dxxx).value == doctest::Approx(expect).epsilon(1e-6));
}
