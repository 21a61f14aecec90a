// errors.hpp --- exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace coxsort {

// An element was required to occur as a subword of the sorting word.
struct NotInOmegaError : std::runtime_error {
  explicit NotInOmegaError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or table would exceed a configured size cap.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coxsort
