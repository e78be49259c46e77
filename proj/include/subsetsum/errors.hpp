#pragma once

#include <stdexcept>
#include <string>

namespace subsetsum {

// Malformed or out-of-contract input (bad elements, bad file, bad arguments).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A fixed resource limit was exceeded (transform size, brute-force guard).
struct LimitError : std::runtime_error {
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subsetsum
