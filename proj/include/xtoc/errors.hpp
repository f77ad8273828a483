// Error taxonomy shared by all modules. Exit-code mapping for the CLI:
// ValidationError -> 1, SingularityError / DivergenceError /
// DegenerateFeatureError -> 2, BoundViolationError -> 3.
#pragma once

#include <stdexcept>
#include <string>

namespace xtoc {

/// Invalid arguments, malformed configs, dimension mismatches.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Rank-deficient or numerically singular linear systems.
class SingularityError : public std::runtime_error {
 public:
  explicit SingularityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Training loss increased for too many consecutive epochs.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Zero-norm feature vector where a direction is required.
class DegenerateFeatureError : public std::runtime_error {
 public:
  explicit DegenerateFeatureError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An acceptance property failed during a check-bounds run.
class BoundViolationError : public std::runtime_error {
 public:
  explicit BoundViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace xtoc
