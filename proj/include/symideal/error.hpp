#pragma once

#include <stdexcept>
#include <string>

namespace symideal {

/// Malformed textual input (polynomials, permutations, matrices, field selectors).
class parse_error : public std::invalid_argument {
 public:
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A truncation bound (N, D) is violated by an input.
class bound_error : public std::invalid_argument {
 public:
  explicit bound_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An internal consistency check failed; indicates an arithmetic bug.
class consistency_error : public std::logic_error {
 public:
  explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace symideal
