#pragma once

#include <stdexcept>
#include <string>

namespace fedcell {

// Configuration document problems (bad value, unknown key, missing field).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A decision or instance violates a named constraint.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(std::string constraint, const std::string& what)
      : std::runtime_error(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

// KL divergence undefined: q lacks support where p has mass.
class SupportError : public std::runtime_error {
 public:
  explicit SupportError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical solver failed to meet its convergence contract.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fedcell
