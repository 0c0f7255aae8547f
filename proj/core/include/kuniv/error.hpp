#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kuniv {

/// Base class for every failure raised by the library.  All of these are
/// "domain" failures: the input was understood but the operation cannot
/// produce a result for it.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph data or an argument outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::size_t requested, std::size_t limit)
      : Error(what + ": requested " + std::to_string(requested) +
              " exceeds budget " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// A sparse/dense comparison hit exact equality with 1/alpha.
class TieError : public Error {
 public:
  using Error::Error;
};

}  // namespace kuniv
