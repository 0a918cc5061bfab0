#pragma once

#include <stdexcept>
#include <string>

namespace hartree {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

// Solver detected concentration of the profile (supercritical mass).
class Collapse : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class ResampleOutOfRange : public Error {
 public:
  using Error::Error;
};

class AmbiguousCount : public Error {
 public:
  using Error::Error;
};

class Inconclusive : public Error {
 public:
  using Error::Error;
};

class EigensolverFailure : public Error {
 public:
  using Error::Error;
};

// Receives non-fatal diagnostics. The default handler writes to stderr.
using WarningHandler = void (*)(const std::string&);
void set_warning_handler(WarningHandler handler) noexcept;
void warn(const std::string& message);

}  // namespace hartree
