#pragma once

#include <stdexcept>
#include <string>

namespace finspace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// poset
class CycleError : public Error { using Error::Error; };
class DuplicateElement : public Error { using Error::Error; };
class UnknownElement : public Error { using Error::Error; };

/// An enumeration (homotopy fence search, selectors, chains) ran past its
/// configured budget. Never reported as a silent negative answer.
class BudgetExceeded : public Error { using Error::Error; };

// complex / maps
class NotContinuous : public Error { using Error::Error; };
class EmptyValue : public Error { using Error::Error; };
class NotSurjective : public Error { using Error::Error; };
class NoMaximum : public Error { using Error::Error; };
class NoMinimum : public Error { using Error::Error; };
class NotUsc : public Error { using Error::Error; };
class NotLsc : public Error { using Error::Error; };
class ProjectionNotIso : public Error { using Error::Error; };
class NoSelector : public Error { using Error::Error; };
class NotComposable : public Error { using Error::Error; };

// homology
class EmptySubspace : public Error { using Error::Error; };
class NotAChainMap : public Error { using Error::Error; };
class BasisSolveFailure : public Error { using Error::Error; };
class ProfileMismatch : public Error { using Error::Error; };

class NotInvertible : public Error {
 public:
  NotInvertible(std::string what, int dimension)
      : Error(std::move(what)), dimension_(dimension) {}
  int dimension() const { return dimension_; }

 private:
  int dimension_;
};

// dynamics
class IndexRange : public Error { using Error::Error; };
class SizeBudgetExceeded : public Error { using Error::Error; };

class LevelError : public Error {
 public:
  LevelError(std::string what, int level) : Error(std::move(what)), level_(level) {}
  int level() const { return level_; }

 private:
  int level_;
};
class LevelNotContinuous : public LevelError { using LevelError::LevelError; };
class CertificationFailed : public LevelError { using LevelError::LevelError; };

// text formats
class ParseError : public Error { using Error::Error; };

}  // namespace finspace
