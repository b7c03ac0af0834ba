#pragma once

#include <stdexcept>
#include <string>

namespace fdrel {

enum class ErrorKind { Domain, Convergence, Usage, Io };

// Base of every exception thrown by the library. The kind drives the CLI
// exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, double offending = 0.0)
      : Error(ErrorKind::Domain, what), offending_(offending) {}
  double offending() const noexcept { return offending_; }

 private:
  double offending_;
};

// Carries the best estimate reached before giving up.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double achieved_error)
      : Error(ErrorKind::Convergence, what),
        best_(best_estimate),
        achieved_(achieved_error) {}
  double best_estimate() const noexcept { return best_; }
  double achieved_error() const noexcept { return achieved_; }

 private:
  double best_;
  double achieved_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what)
      : Error(ErrorKind::Usage, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace fdrel
