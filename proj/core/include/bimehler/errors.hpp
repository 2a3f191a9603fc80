#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bimehler {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the 0-based offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class BoundMismatchError : public Error {
 public:
  using Error::Error;
};

/// Raised by exp / geometric / logarithmic series when the argument has a
/// nonzero constant term.
class ConstantTermError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class IntegralityError : public Error {
 public:
  using Error::Error;
};

class LimitExceededError : public Error {
 public:
  using Error::Error;
};

class UnknownCaseError : public Error {
 public:
  using Error::Error;
};

/// A profile breaks the at-most-one-spouse / at-most-one-lover rule or uses
/// a label outside its population.
class InvalidProfileError : public Error {
 public:
  enum class Sex { kMan, kWoman };

  InvalidProfileError(const std::string& message, Sex sex, int label)
      : Error(message), sex_(sex), label_(label) {}

  Sex sex() const noexcept { return sex_; }
  int label() const noexcept { return label_; }

 private:
  Sex sex_;
  int label_;
};

}  // namespace bimehler
