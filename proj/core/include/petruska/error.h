#ifndef PETRUSKA_ERROR_H_
#define PETRUSKA_ERROR_H_

#include <stdexcept>
#include <string>

namespace petruska {

// Raised on precondition violations and malformed input across the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant fails. Never expected on valid input.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(what) {}
};

}  // namespace petruska

#endif  // PETRUSKA_ERROR_H_
