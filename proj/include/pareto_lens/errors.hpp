#ifndef PARETO_LENS_ERRORS_HPP
#define PARETO_LENS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pareto_lens {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors or specs of inconsistent length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Too few solutions (or instances) for the requested statistic.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// A parameter outside its documented domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// The printable Gray layout exists only for 3, 4 and 5 objectives.
class UnsupportedArityError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace pareto_lens

#endif  // PARETO_LENS_ERRORS_HPP
