#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratroot {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: unparseable literal, ragged matrix, dimension mismatch.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates an operation's precondition
// (reducible characteristic polynomial, constant p, derogatory matrix, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public PreconditionError {
 public:
  SingularMatrixError(std::size_t dim, std::size_t rank)
      : PreconditionError("singular matrix: dimension " + std::to_string(dim) +
                          ", rank " + std::to_string(rank)),
        dim_(dim),
        rank_(rank) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t dim_;
  std::size_t rank_;
};

// The Zassenhaus recombination would exceed the configured subset budget.
class FactorBudgetError : public PreconditionError {
 public:
  FactorBudgetError(std::size_t local_factors, std::size_t budget)
      : PreconditionError("recombination budget exceeded: " +
                          std::to_string(local_factors) +
                          " modular factors, limit " + std::to_string(budget)),
        local_factors_(local_factors) {}

  std::size_t local_factors() const noexcept { return local_factors_; }

 private:
  std::size_t local_factors_;
};

#define RATROOT_ASSERT(cond, msg)                                          \
  do {                                                                     \
    if (!(cond))                                                           \
      throw ::ratroot::InternalError(std::string("assertion failed: ") +   \
                                     (msg) + " [" #cond "]");              \
  } while (0)

}  // namespace ratroot
