#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gridgeo/network.hpp"
#include "gridgeo/types.hpp"

using namespace gridgeo;

namespace {

constexpr double kPi = 3.141592653589793;

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is);
  std::stringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

net::NetworkSpec single_line(double r, double L, std::optional<double> C,
                             double omega) {
  net::NetworkSpec spec;
  spec.omega = omega;
  spec.buses = {{"A"}, {"B"}};
  spec.lines = {{"ln", "A", "B", r, L, C}};
  return spec;
}

}  // namespace

TEST_CASE("bundled sample case loads with seven lines") {
  const auto spec =
      net::load_network(slurp(std::string(GRIDGEO_DATA_DIR) + "/five_bus_lr.json"));
  CHECK(spec.buses.size() == 5);
  REQUIRE(spec.lines.size() == 7);
  CHECK(spec.omega == doctest::Approx(kPi));
  CHECK(spec.lines[1].r == doctest::Approx(0.08));
  CHECK(spec.lines[1].L == doctest::Approx(0.24));
  CHECK_FALSE(spec.lines[1].C.has_value());
}

TEST_CASE("save/load round trip is the identity") {
  const std::string source =
      slurp(std::string(GRIDGEO_DATA_DIR) + "/five_bus_rlc.json");
  const auto spec = net::load_network(source);
  const std::string saved = net::save_network(spec);
  const auto reloaded = net::load_network(saved);
  CHECK(net::save_network(reloaded) == saved);
  REQUIRE(reloaded.lines.size() == 7);
  CHECK(*reloaded.lines[0].C == doctest::Approx(0.30));
}

TEST_CASE("validation failures carry field paths") {
  CHECK_THROWS_WITH_AS(
      (void)net::load_network(R"({"buses":[{"id":"A"}],
        "lines":[{"id":"l","from":"A","to":"Z","r":0.1,"l":0.1}]})"),
      doctest::Contains("lines[l].to"), ParseError);
  CHECK_THROWS_WITH_AS(
      (void)net::load_network(R"({"buses":[{"id":"A"},{"id":"A"}],"lines":[]})"),
      doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(
      (void)net::load_network(R"({"buses":[{"id":"A"},{"id":"B"}],
        "lines":[{"id":"l","from":"A","to":"B","r":0.1,"l":0.1,"c":0.0}]})"),
      doctest::Contains("singular"), ParseError);
  CHECK_THROWS_AS((void)net::load_network("{not json"), ParseError);
  // Empty lines list is a valid (trivial) network.
  const auto spec = net::load_network(R"({"buses":[{"id":"A"}],"lines":[]})");
  CHECK(spec.lines.empty());
  CHECK(net::analyze_network(spec).lines.empty());
}

TEST_CASE("bus power reduces to the effective-power formulas") {
  // Pure resistance: P = 1/r = |Y|, Q = 0.
  const auto resistive = single_line(0.08, 0.0, std::nullopt, kPi);
  const auto p0 = net::bus_power(resistive, "A");
  CHECK(p0.P == doctest::Approx(1.0 / 0.08).epsilon(1e-12));
  CHECK(p0.Q == doctest::Approx(0.0).epsilon(1e-12));

  // LR line: P equals Eq-13 effective power.
  const auto lr_case = single_line(0.08, 0.24, std::nullopt, kPi);
  const auto p1 = net::bus_power(lr_case, "A");
  const double lr_expect = lr::lr_power({0.08, 0.24, kPi});
  CHECK(std::abs(p1.P - lr_expect) / std::abs(lr_expect) < 1e-10);
  CHECK(p1.P == doctest::Approx(0.13916).epsilon(1e-3));

  // RLC line: P + Q equals Eq-19/20 effective power.
  const auto rlc_case = single_line(0.08, 0.24, 0.025, kPi);
  const auto p2 = net::bus_power(rlc_case, "A");
  const double rlc_expect = lcr::lcr_effective_power({0.08, 0.24, 0.025, kPi});
  CHECK(std::abs(p2.P + p2.Q - rlc_expect) / std::abs(rlc_expect) < 1e-10);
  CHECK(p2.P + p2.Q == doctest::Approx(-0.082922).epsilon(1e-3));

  CHECK_THROWS_AS((void)net::bus_power(rlc_case, "nope"),
                  std::invalid_argument);
}

TEST_CASE("impedance-basis jacobian") {
  const auto j = net::impedance_basis_jacobian(0.5, 2.0);
  CHECK(j.det == doctest::Approx(-4.0));
  CHECK(j.matrix.determinant() == doctest::Approx(-4.0).epsilon(1e-12));
  // Determinant is omega-independent.
  CHECK(net::impedance_basis_jacobian(0.5, 1.0).det ==
        doctest::Approx(net::impedance_basis_jacobian(0.5, 2 * kPi * 50).det));
  // LR sub-case: the (r, L) block has determinant omega.
  CHECK(j.matrix.topLeftCorner(2, 2).determinant() == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)net::impedance_basis_jacobian(0.0, 1.0),
                  SingularInputError);
}

TEST_CASE("tensorial basis change of the oracle metric") {
  // det(J^T g J) = det(g) det(J)^2 across the C range.
  for (double C : {0.05, 0.2, 0.5, 1.0}) {
    const lcr::LCRState s{0.3, 0.4, C, 1.1};
    const MetricTensor g = lcr::lcr_metric_oracle(s);
    const auto j = net::impedance_basis_jacobian(C, s.omega);
    const MetricTensor pushed = pushforward(g, j.matrix);
    const double expect = g.det() * j.det * j.det;
    CHECK(std::abs(pushed.det() - expect) / std::abs(expect) < 1e-6);
  }
}

TEST_CASE("bus block metrics") {
  // One LR line: the assembled matrix is that line's 2x2 metric.
  const auto one = single_line(0.08, 0.24, std::nullopt, kPi);
  const auto block1 = net::bus_block_metric(one, "A");
  REQUIRE(block1.blocks.size() == 1);
  CHECK(block1.assembled.rows() == 2);
  CHECK(block1.minors.back() ==
        doctest::Approx(lr::lr_det({0.08, 0.24, kPi})).epsilon(1e-6));
  CHECK_FALSE(block1.stable);

  // Two identical RLC lines: det(assembled) = det(block)^2.
  net::NetworkSpec twin;
  twin.omega = kPi;
  twin.buses = {{"A"}, {"B"}, {"C"}};
  twin.lines = {{"l1", "A", "B", 0.06, 0.18, 0.02},
                {"l2", "A", "C", 0.06, 0.18, 0.02}};
  const auto block2 = net::bus_block_metric(twin, "A");
  REQUIRE(block2.blocks.size() == 2);
  CHECK(block2.assembled.rows() == 6);
  const double d = block2.blocks[0].det();
  CHECK(std::abs(block2.minors.back() - d * d) / (d * d) < 1e-10);

  // Mixed bus: minors multiply across blocks.
  const auto spec =
      net::load_network(slurp(std::string(GRIDGEO_DATA_DIR) + "/five_bus_rlc.json"));
  const auto block3 = net::bus_block_metric(spec, "B2");
  double product = 1.0;
  for (const auto& b : block3.blocks) product *= b.det();
  CHECK(std::abs(block3.minors.back() - product) /
            std::abs(product) < 1e-10);

  CHECK_THROWS_AS((void)net::bus_block_metric(spec, "nope"),
                  std::invalid_argument);
}

TEST_CASE("full analysis of the LR sample mirrors the published signs") {
  const auto spec =
      net::load_network(slurp(std::string(GRIDGEO_DATA_DIR) + "/five_bus_lr.json"));
  const auto report = net::analyze_network(spec);
  REQUIRE(report.lines.size() == 7);
  for (const auto& line : report.lines) {
    REQUIRE(line.error.empty());
    REQUIRE(line.lr.has_value());
    CHECK(line.lr->det_g < 0.0);  // the table's all-negative column
    if (!line.lr->resistive_reliable) CHECK(line.boundary_L.has_value());
  }
  CHECK(report.buses.size() == 5);
}

TEST_CASE("report rendering is deterministic") {
  const std::string source =
      slurp(std::string(GRIDGEO_DATA_DIR) + "/five_bus_rlc.json");
  const auto a = net::report_json(net::analyze_network(net::load_network(source)));
  const auto b = net::report_json(net::analyze_network(net::load_network(source)));
  CHECK(a == b);
  CHECK(a.find("\"kind\": \"lcr\"") != std::string::npos);
  const auto text =
      net::report_text(net::analyze_network(net::load_network(source)));
  CHECK(text.find("T1") != std::string::npos);
}
