#pragma once

#include <stdexcept>
#include <string>

namespace kstab {

// Base of every mathematical failure raised by the library. Usage errors
// (malformed numbers, bad enum values) use the std:: exception types.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A linear factor did not divide a polynomial; carries the remainder.
class NotDivisible : public Error {
 public:
  NotDivisible(const std::string& factor, std::string remainder)
      : Error("not divisible by " + factor + ", remainder " + remainder),
        remainder_(std::move(remainder)) {}
  const std::string& remainder() const noexcept { return remainder_; }

 private:
  std::string remainder_;
};

// A computed quantity disagrees with the closed form it must reproduce.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

class UnknownRoot : public Error {
 public:
  using Error::Error;
};

class DegenerateScaling : public Error {
 public:
  using Error::Error;
};

class EmptyPolytope : public Error {
 public:
  using Error::Error;
};

class NotAmple : public Error {
 public:
  using Error::Error;
};

class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

class DegenerateRegion : public Error {
 public:
  using Error::Error;
};

}  // namespace kstab
