#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fbpc {

// Error categories; values double as CLI exit codes and C-API status codes.
enum class ErrorKind : int {
  validation = 1,  // bad config, shape mismatch, unsupported request
  divergence = 2,  // non-finite state, non-convergence
  io = 3,          // filesystem / format problems
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error validation_error(const std::string& msg) { return Error(ErrorKind::validation, msg); }
inline Error divergence_error(const std::string& msg) { return Error(ErrorKind::divergence, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorKind::io, msg); }

}  // namespace fbpc
