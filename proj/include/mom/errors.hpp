#pragma once

#include <stdexcept>
#include <string>

namespace mom {

// Every failure the library reports derives from Error so the CLI can map
// categories onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configured cap (DP states, enumeration size, brute-force nodes) was hit.
// Results are never silently truncated.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A determinant or denominator fell below the genericity tolerance.
class NearSingularError : public Error {
 public:
  using Error::Error;
};

// Certification of an exact result failed; this signals a bug upstream.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mom
