#ifndef HHNET_ERRORS_HPP
#define HHNET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hhnet {

// malformed or inconsistent user input (files, CLI values, parameter ranges)
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string &msg) : std::runtime_error(msg) {}
};

// request exceeds a configured budget (state counts, table sizes)
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace hhnet

#endif
