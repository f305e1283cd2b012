#include "gridgeo/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "gridgeo/types.hpp"
#include "json.hpp"

namespace gridgeo::net {

using json = nlohmann::ordered_json;

const BusSpec* NetworkSpec::find_bus(const std::string& id) const {
  for (const auto& b : buses)
    if (b.id == id) return &b;
  return nullptr;
}

std::vector<const LineSpec*> NetworkSpec::incident_lines(
    const std::string& bus_id) const {
  std::vector<const LineSpec*> out;
  for (const auto& l : lines)
    if (l.from_bus == bus_id || l.to_bus == bus_id) out.push_back(&l);
  return out;
}

namespace {

void validate_network(const NetworkSpec& spec) {
  if (!(spec.omega > 0.0)) throw ParseError("omega: must be > 0");
  std::set<std::string> ids;
  for (const auto& b : spec.buses)
    if (!ids.insert(b.id).second)
      throw ParseError("buses: duplicate id '" + b.id + "'");
  std::set<std::string> line_ids;
  for (const auto& l : spec.lines) {
    const std::string path = "lines[" + l.id + "]";
    if (!line_ids.insert(l.id).second)
      throw ParseError(path + ": duplicate id");
    if (!spec.find_bus(l.from_bus))
      throw ParseError(path + ".from: unknown bus '" + l.from_bus + "'");
    if (!spec.find_bus(l.to_bus))
      throw ParseError(path + ".to: unknown bus '" + l.to_bus + "'");
    if (l.r < 0.0) throw ParseError(path + ".r: must be >= 0");
    if (l.L < 0.0) throw ParseError(path + ".l: must be >= 0");
    if (l.r == 0.0 && l.L == 0.0)
      throw ParseError(path + ": (r, l) = (0, 0) is singular");
    if (l.C && !(*l.C > 0.0))
      throw ParseError(path + ".c: must be > 0 (the impedance-basis "
                              "transform is singular at C = 0)");
  }
}

}  // namespace

NetworkSpec load_network(const std::string& source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("case file: ") + e.what());
  }
  NetworkSpec spec;
  try {
    spec.omega = doc.value("omega", 3.141592653589793);
    for (const auto& b : doc.value("buses", json::array())) {
      BusSpec bus;
      bus.id = b.at("id").get<std::string>();
      bus.v = b.value("v", 1.0);
      bus.delta = b.value("delta", 0.0);
      spec.buses.push_back(std::move(bus));
    }
    for (const auto& l : doc.value("lines", json::array())) {
      LineSpec line;
      line.id = l.at("id").get<std::string>();
      line.from_bus = l.at("from").get<std::string>();
      line.to_bus = l.at("to").get<std::string>();
      line.r = l.at("r").get<double>();
      line.L = l.at("l").get<double>();
      if (l.contains("c")) line.C = l.at("c").get<double>();
      spec.lines.push_back(std::move(line));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("case file: ") + e.what());
  }
  validate_network(spec);
  return spec;
}

std::string save_network(const NetworkSpec& spec) {
  json doc;
  doc["omega"] = spec.omega;
  doc["buses"] = json::array();
  for (const auto& b : spec.buses)
    doc["buses"].push_back({{"id", b.id}, {"v", b.v}, {"delta", b.delta}});
  doc["lines"] = json::array();
  for (const auto& l : spec.lines) {
    json line = {{"id", l.id}, {"from", l.from_bus}, {"to", l.to_bus},
                 {"r", l.r},   {"l", l.L}};
    if (l.C) line["c"] = *l.C;
    doc["lines"].push_back(std::move(line));
  }
  return doc.dump(2) + "\n";
}

BusPower bus_power(const NetworkSpec& spec, const std::string& bus_id) {
  const BusSpec* bus = spec.find_bus(bus_id);
  if (!bus) throw std::invalid_argument("bus_power: unknown bus " + bus_id);
  BusPower out;
  for (const LineSpec* line : spec.incident_lines(bus_id)) {
    const std::string& other_id =
        line->from_bus == bus_id ? line->to_bus : line->from_bus;
    const BusSpec* other = spec.find_bus(other_id);
    const double X_L = spec.omega * line->L;
    const double X_C = line->C ? 1.0 / (spec.omega * *line->C) : 0.0;
    const double x = X_L - X_C;
    const double z2 = line->r * line->r + x * x;
    if (z2 == 0.0)
      throw SingularInputError("bus_power: line " + line->id +
                               " on the singularity locus");
    const double y = 1.0 / std::sqrt(z2);
    const double theta = std::atan2(x, line->r);
    const double arg = theta + other->delta - bus->delta;
    out.P += bus->v * other->v * y * std::cos(arg);
    out.Q += bus->v * other->v * y * std::sin(arg);
  }
  return out;
}

BasisJacobian impedance_basis_jacobian(double C, double omega) {
  if (C == 0.0)
    throw SingularInputError("impedance_basis_jacobian: C = 0 is singular");
  if (!(omega > 0.0))
    throw SingularInputError("impedance_basis_jacobian: omega must be > 0");
  BasisJacobian j;
  j.matrix = Eigen::MatrixXd::Zero(3, 3);
  j.matrix(0, 0) = 1.0;
  j.matrix(1, 1) = omega;
  j.matrix(2, 2) = -1.0 / (omega * C * C);
  j.det = -1.0 / (C * C);
  return j;
}

BusBlockMetric bus_block_metric(const NetworkSpec& spec,
                                const std::string& bus_id) {
  if (!spec.find_bus(bus_id))
    throw std::invalid_argument("bus_block_metric: unknown bus " + bus_id);
  const auto incident = spec.incident_lines(bus_id);
  if (incident.empty())
    throw std::invalid_argument("bus_block_metric: bus " + bus_id +
                                " has no incident lines");
  BusBlockMetric out;
  out.bus_id = bus_id;
  int total = 0;
  for (const LineSpec* line : incident) {
    MetricTensor block =
        line->C ? lcr::lcr_metric_oracle({line->r, line->L, *line->C,
                                          spec.omega})
                : lr::lr_metric_closed({line->r, line->L, spec.omega});
    total += block.dim();
    out.blocks.push_back(std::move(block));
  }
  out.assembled = Eigen::MatrixXd::Zero(total, total);
  int offset = 0;
  for (const auto& block : out.blocks) {
    out.assembled.block(offset, offset, block.dim(), block.dim()) =
        block.entries();
    offset += block.dim();
  }
  for (int k = 1; k <= total; ++k)
    out.minors.push_back(out.assembled.topLeftCorner(k, k).determinant());
  out.stable = std::all_of(out.minors.begin(), out.minors.end(),
                           [](double m) { return m > 0.0; });
  return out;
}

NetworkReport analyze_network(const NetworkSpec& spec) {
  NetworkReport report;
  report.omega = spec.omega;
  for (const auto& line : spec.lines) {
    LineReport lr_rep;
    lr_rep.line = line;
    try {
      if (line.C) {
        lr_rep.lcr = lcr::classify_lcr({line.r, line.L, *line.C, spec.omega});
      } else {
        lr_rep.lr = lr::classify_lr({line.r, line.L, spec.omega});
        if (!lr_rep.lr->resistive_reliable && line.r > 0.0)
          lr_rep.boundary_L = lr::lr_reliability_boundary(line.r, spec.omega);
      }
    } catch (const std::exception& e) {
      lr_rep.error = e.what();
    }
    report.lines.push_back(std::move(lr_rep));
  }
  for (const auto& bus : spec.buses) {
    if (spec.incident_lines(bus.id).empty()) continue;
    report.buses.push_back(bus_block_metric(spec, bus.id));
  }
  return report;
}

std::string report_json(const NetworkReport& report) {
  json doc;
  doc["omega"] = report.omega;
  doc["lines"] = json::array();
  for (const auto& lr_rep : report.lines) {
    json entry;
    entry["id"] = lr_rep.line.id;
    entry["r"] = lr_rep.line.r;
    entry["l"] = lr_rep.line.L;
    if (lr_rep.line.C) entry["c"] = *lr_rep.line.C;
    if (!lr_rep.error.empty()) {
      entry["error"] = lr_rep.error;
    } else if (lr_rep.lr) {
      const auto& v = *lr_rep.lr;
      entry["kind"] = "lr";
      entry["g_rr"] = v.g_rr;
      entry["g_rL"] = v.g_rL;
      entry["g_LL"] = v.g_LL;
      entry["det_g"] = v.det_g;
      entry["boundary_residual"] = v.boundary_residual;
      entry["ricci_scalar"] = v.ricci_scalar;
      entry["resistive_reliable"] = v.resistive_reliable;
      entry["joint_reliable"] = v.joint_reliable;
      entry["globally_reliable"] = v.globally_reliable;
      if (lr_rep.boundary_L) entry["boundary_L"] = *lr_rep.boundary_L;
    } else if (lr_rep.lcr) {
      const auto& v = *lr_rep.lcr;
      entry["kind"] = "lcr";
      entry["p2_surface"] = v.p2_surface;
      entry["det_g"] = v.det_g;
      entry["ricci_scalar"] =
          std::isfinite(v.ricci_scalar) ? json(v.ricci_scalar) : json("nan");
      entry["surface_stable"] = v.surface_stable;
      entry["volume_stable"] = v.volume_stable;
      entry["globally_stable"] = v.globally_stable;
      entry["singular"] = v.singular;
    }
    doc["lines"].push_back(std::move(entry));
  }
  doc["buses"] = json::array();
  for (const auto& bus : report.buses) {
    json entry;
    entry["id"] = bus.bus_id;
    entry["minors"] = bus.minors;
    entry["stable"] = bus.stable;
    doc["buses"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string report_text(const NetworkReport& report) {
  std::ostringstream os;
  char buf[256];
  os << "omega = " << report.omega << "\n\n";
  os << "line       r        L        C        det(g)        verdict\n";
  for (const auto& lr_rep : report.lines) {
    const auto& line = lr_rep.line;
    std::string verdict;
    double det = 0.0;
    if (!lr_rep.error.empty()) {
      verdict = "error: " + lr_rep.error;
    } else if (lr_rep.lr) {
      det = lr_rep.lr->det_g;
      verdict = lr_rep.lr->resistive_reliable ? "resistive-reliable"
                                              : "resistive-unreliable";
      verdict += lr_rep.lr->joint_reliable ? ", joint-reliable"
                                           : ", joint-unreliable";
      if (lr_rep.boundary_L) {
        std::snprintf(buf, sizeof(buf), " (boundary L=%.6g)",
                      *lr_rep.boundary_L);
        verdict += buf;
      }
    } else if (lr_rep.lcr) {
      det = lr_rep.lcr->det_g;
      verdict = lr_rep.lcr->surface_stable ? "surface-stable"
                                           : "surface-unstable";
      verdict += lr_rep.lcr->volume_stable ? ", volume-stable"
                                           : ", volume-unstable";
      verdict += lr_rep.lcr->globally_stable ? ", globally-stable"
                                             : ", globally-unstable";
    }
    std::snprintf(buf, sizeof(buf), "%-10s %-8.4g %-8.4g %-8.4g %-13.6g %s\n",
                  line.id.c_str(), line.r, line.L, line.C ? *line.C : 0.0, det,
                  verdict.c_str());
    os << buf;
  }
  os << "\nbus        minors-positive\n";
  for (const auto& bus : report.buses) {
    std::snprintf(buf, sizeof(buf), "%-10s %s\n", bus.bus_id.c_str(),
                  bus.stable ? "yes" : "no");
    os << buf;
  }
  return os.str();
}

}  // namespace gridgeo::net
