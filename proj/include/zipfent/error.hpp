#pragma once

#include <stdexcept>
#include <string>

namespace zipfent {

/// An argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested quantity is an infinite sum or integral that does not converge.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Too few usable data points for a statistical fit.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request would exceed a hard size limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zipfent
