#ifndef SRGB_ERROR_HPP
#define SRGB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace srgb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

class OverflowError : public Error {
public:
  using Error::Error;
};

class FormatError : public Error {
public:
  FormatError(const std::string &what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace srgb

#endif // SRGB_ERROR_HPP
