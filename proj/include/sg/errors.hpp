#pragma once

#include <stdexcept>
#include <string>

namespace sg {

/// Malformed or inconsistent input (files, coalition syntax, game JSON).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A request that is well-formed but cannot be answered for this game
/// (non-total game, violated precondition, undefined quantity).
class analysis_error : public std::runtime_error {
 public:
  explicit analysis_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sg
