// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lapmult {

/// Bad input or violated precondition. CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A search hit its cap without finding a witness. CLI exit code 2.
class search_exhausted : public std::runtime_error {
 public:
  explicit search_exhausted(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lapmult
