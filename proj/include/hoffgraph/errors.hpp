#pragma once

#include <stdexcept>
#include <string>

namespace hoffgraph {

// Input exceeds a configured search or enumeration cap.
class unsupported_size : public std::runtime_error {
 public:
  explicit unsupported_size(const std::string& what) : std::runtime_error(what) {}
};

// A result that the theory guarantees turned out inconsistent.
class internal_consistency_error : public std::logic_error {
 public:
  explicit internal_consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hoffgraph
