#pragma once

#include <stdexcept>
#include <string>

namespace blf {

/// Operands live in different ambient dimensions, or a tuple has the wrong length.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A bivector failed the Poisson condition, or a Casimir is not closed.
class StructureError : public std::runtime_error {
public:
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad request: unknown model string, out-of-range k, kind/model mismatch.
class UsageError : public std::invalid_argument {
public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed polynomial or rational text.
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace blf
