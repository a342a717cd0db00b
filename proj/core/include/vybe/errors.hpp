#pragma once

#include <stdexcept>
#include <string>

namespace vybe {

/// Raised when an exact result would live above the truncation degree.
/// Checkers catch this (or pre-filter) and record a coverage gap; it never
/// stands in for a silently truncated value.
class OutOfWindowError : public std::runtime_error {
 public:
  OutOfWindowError(int needed_level, int max_degree)
      : std::runtime_error("result lives at level " + std::to_string(needed_level) +
                           ", above the truncation degree " + std::to_string(max_degree)),
        needed_level(needed_level), max_degree(max_degree) {}
  int needed_level;
  int max_degree;
};

}  // namespace vybe
