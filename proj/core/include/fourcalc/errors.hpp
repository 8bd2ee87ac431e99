#pragma once

#include <stdexcept>
#include <string>

namespace fourcalc {

// Malformed input or a violated precondition. Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured search or memory bound was hit. Maps to CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// The operation is outside the modeled domain (e.g. free products of
// nontrivial fundamental groups, unclassifiable profiles).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fourcalc
