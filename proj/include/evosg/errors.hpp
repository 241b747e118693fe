#pragma once

#include <stdexcept>
#include <string>

namespace evosg {

// Base for all typed failures. kind() is a stable machine-readable tag used
// by the CLI to map failures onto exit codes and report fields.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

// Grid or weight mismatch between two signals.
struct CompatibilityError : Error {
  explicit CompatibilityError(const std::string& what)
      : Error("compatibility", what) {}
};

// A time (shift, delay, cut point) is not a grid node.
struct AlignmentError : Error {
  explicit AlignmentError(const std::string& what)
      : Error("alignment", what) {}
};

// One-sided limit estimator did not converge.
struct NoLimitError : Error {
  explicit NoLimitError(const std::string& what) : Error("no-limit", what) {}
};

// rho = 0 (or wrong sign) where an invertible time derivative is required.
struct InvalidWeightError : Error {
  explicit InvalidWeightError(const std::string& what)
      : Error("invalid-weight", what) {}
};

// Evaluation weight does not exceed the abscissa rho0 of a material law.
struct AbscissaError : Error {
  explicit AbscissaError(const std::string& what) : Error("abscissa", what) {}
};

// Element outside the (discrete surrogate of the) operator domain.
struct NotInDomainError : Error {
  explicit NotInDomainError(const std::string& what)
      : Error("not-in-domain", what) {}
};

// Singular or numerically unusable frequency-bin system; carries xi.
class IllPosedError : public Error {
public:
  IllPosedError(const std::string& what, double xi)
      : Error("ill-posed", what), xi_(xi) {}
  double xi() const noexcept { return xi_; }

private:
  double xi_;
};

// lambda M(lambda) + A singular at a requested real lambda.
struct ResolventError : Error {
  explicit ResolventError(const std::string& what)
      : Error("resolvent", what) {}
};

struct InadmissibleHistoryError : Error {
  explicit InadmissibleHistoryError(const std::string& what)
      : Error("inadmissible-history", what) {}
};

// Trajectory oracle unavailable (non-regular pencil, unstable march).
struct OracleError : Error {
  explicit OracleError(const std::string& what) : Error("oracle", what) {}
};

// Problem configuration violates the schema; carries a location hint.
class ConfigError : public Error {
public:
  ConfigError(const std::string& what, std::string where = "")
      : Error("config", what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

private:
  std::string where_;
};

}  // namespace evosg
