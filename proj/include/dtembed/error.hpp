#pragma once

#include <stdexcept>
#include <string>

namespace dtembed {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dtembed
