#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgpm {

// Base of every error thrown by the library. Subclasses carry the failure
// class; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A prescribed spectrum or parameter lies outside the region where the
// requested construction is valid. `condition()` names the violated inequality.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

class UnsupportedSign : public Error {
 public:
  using Error::Error;
};

class NonCommuting : public Error {
 public:
  using Error::Error;
};

// Densification polynomial leaves zero entries. `missing_shifts()` lists the
// residues (col - row) mod n that no included term reaches.
class CoverageError : public Error {
 public:
  CoverageError(std::vector<long> missing, const std::string& what)
      : Error(what), missing_(std::move(missing)) {}
  const std::vector<long>& missing_shifts() const noexcept { return missing_; }

 private:
  std::vector<long> missing_;
};

// Simultaneous iteration did not reach the residual target. The best iterate
// is kept so callers can inspect it.
class NonConvergence : public Error {
 public:
  NonConvergence(std::vector<std::complex<double>> best, const std::string& what)
      : Error(what), best_(std::move(best)) {}
  const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }

 private:
  std::vector<std::complex<double>> best_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bgpm
