#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridgeo {

/// Coordinate basis for a component state.
enum class Basis {
  Component,  ///< (r, L, C)
  Impedance,  ///< (r, X_L, X_C)
  Lr,         ///< (r, L)
};

inline int basis_arity(Basis b) { return b == Basis::Lr ? 2 : 3; }

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Component: return "component(r,L,C)";
    case Basis::Impedance: return "impedance(r,X_L,X_C)";
    case Basis::Lr: return "lr(r,L)";
  }
  return "?";
}

struct SingularInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfDomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateStepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a metric is too close to singular for the requested
/// operation; carries the offending determinant.
struct SingularConfigurationError : std::runtime_error {
  double det;
  SingularConfigurationError(const std::string& msg, double det_value)
      : std::runtime_error(msg), det(det_value) {}
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A component state in one of the admissible coordinate bases, together
/// with the angular frequency of the AC base.
struct ParameterPoint {
  std::vector<double> coords;
  Basis basis = Basis::Component;
  double omega = 1.0;

  ParameterPoint() = default;
  ParameterPoint(std::vector<double> c, Basis b, double w)
      : coords(std::move(c)), basis(b), omega(w) {
    validate();
  }

  int dim() const { return static_cast<int>(coords.size()); }

  void validate() const {
    if (static_cast<int>(coords.size()) != basis_arity(basis))
      throw std::invalid_argument("ParameterPoint: coords length " +
                                  std::to_string(coords.size()) +
                                  " does not match basis " + basis_name(basis));
    if (!(omega > 0.0))
      throw std::invalid_argument("ParameterPoint: omega must be > 0");
    if (basis == Basis::Component && coords[2] == 0.0)
      throw std::invalid_argument(
          "ParameterPoint: C = 0 is a singular point of the impedance-basis "
          "transform");
  }
};

}  // namespace gridgeo
