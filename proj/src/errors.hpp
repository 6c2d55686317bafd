#ifndef HEISCOUNT_ERRORS_HPP
#define HEISCOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace heiscount {

// Error categories shared by the whole library; the C API maps them to
// status codes one-to-one.
enum class ErrorCode {
  InvalidInput = 1,
  Verification = 2,
  Unsupported = 3,
  LimitExceeded = 4,
  Degenerate = 5,
  NotAChain = 6,
  InfiniteChain = 7,
  Internal = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) throw Error(code, msg);
}

}  // namespace heiscount

#endif
