#pragma once

#include <stdexcept>
#include <string>

namespace recnodes {

// Thrown when an iterative or dense-linear-algebra computation fails to
// reach its required accuracy (root finding, SPD checks, unisolvency).
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when file contents fail schema or consistency checks.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace recnodes
