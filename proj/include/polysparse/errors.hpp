#pragma once

#include <stdexcept>
#include <string>

namespace polysparse {

// Ill-formed or invalid mesh input (schema violation, dangling reference, failed validation).
class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Neighbor signatures changed between two probe tilings.
class UnstableClassification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polysparse
