#pragma once

#include <stdexcept>
#include <string>

namespace cpboot {

struct EmptyDataError : std::invalid_argument {
  explicit EmptyDataError(const std::string& what) : std::invalid_argument(what) {}
};

struct DegenerateIntervalError : std::invalid_argument {
  explicit DegenerateIntervalError(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroSpreadError : std::invalid_argument {
  explicit ZeroSpreadError(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptySamplesError : std::invalid_argument {
  explicit EmptySamplesError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidLevelError : std::invalid_argument {
  explicit InvalidLevelError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a jump-process simulation exceeds its hard cap before the
// stopping rule fires; signals an ill-conditioned parameter choice.
struct TruncationOverflowError : std::runtime_error {
  explicit TruncationOverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpboot
