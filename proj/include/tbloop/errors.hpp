#pragma once

#include <stdexcept>
#include <string>

namespace tbloop {

struct NonzeroConstantTerm : std::domain_error {
  explicit NonzeroConstantTerm(const std::string& m) : std::domain_error("NonzeroConstantTerm: " + m) {}
};
struct ZeroExponent : std::domain_error {
  explicit ZeroExponent(const std::string& m) : std::domain_error("ZeroExponent: " + m) {}
};
struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& m) : std::out_of_range("IndexOutOfRange: " + m) {}
};
struct PoleAtParameter : std::domain_error {
  explicit PoleAtParameter(const std::string& m) : std::domain_error("PoleAtParameter: " + m) {}
};
struct SingularBoundaryWeight : std::domain_error {
  explicit SingularBoundaryWeight(const std::string& m) : std::domain_error("SingularBoundaryWeight: " + m) {}
};
struct DegenerateEigenspace : std::runtime_error {
  explicit DegenerateEigenspace(const std::string& m) : std::runtime_error("DegenerateEigenspace: " + m) {}
};
struct InexactDivision : std::logic_error {
  explicit InexactDivision(const std::string& m) : std::logic_error("InexactDivision: " + m) {}
};
struct CoefficientSumNotOne : std::domain_error {
  explicit CoefficientSumNotOne(const std::string& m) : std::domain_error("CoefficientSumNotOne: " + m) {}
};
struct SingularCharacter : std::domain_error {
  explicit SingularCharacter(const std::string& m) : std::domain_error("SingularCharacter: " + m) {}
};
struct LimitNotFinite : std::logic_error {
  explicit LimitNotFinite(const std::string& m) : std::logic_error("LimitNotFinite: " + m) {}
};
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& m) : std::invalid_argument("ConfigError: " + m) {}
};

}  // namespace tbloop
