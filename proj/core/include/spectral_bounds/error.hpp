#pragma once

#include <stdexcept>
#include <string>

namespace spectral_bounds {

/// Invalid user input: malformed shape parameters, bad descriptors, out of range arguments.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A point fails the strict star-shapedness test h_xi > eps on some boundary node.
class NotStarShapedError : public InputError {
 public:
  explicit NotStarShapedError(const std::string& what) : InputError(what) {}
};

/// Argument outside the domain of a special function.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative solver (minimizer, eigensolver, linear solver, LP) failed.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spectral_bounds
