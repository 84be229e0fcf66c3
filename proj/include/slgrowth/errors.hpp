#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slgrowth {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension/field mismatch, out-of-range index, malformed input.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// A matrix with det != 1 was used where an SL_n element is required.
class NotInGroup : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}

  // Number of elements stored when the budget tripped.
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

// Generation could not be decided within the closure budget.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

// A torus witness (or the element t of the trace machinery) is not regular
// semisimple.
class InvalidWitness : public Error {
 public:
  using Error::Error;
};

// Character coordinates need eigenvalues in F_p; nonsplit tori are refused.
class UnsupportedTorus : public Error {
 public:
  using Error::Error;
};

class NoBins : public Error {
 public:
  using Error::Error;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace slgrowth
