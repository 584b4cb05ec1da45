#pragma once

#include <stdexcept>
#include <string>

namespace groupscope {

// Problem attributable to user-supplied data or files. Mapped to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command line, flag combination, or config key. Mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace groupscope
