#pragma once

#include <stdexcept>
#include <string>

namespace skm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constant or operator is not interpreted by a structure (e.g. `j` over ℚ₀).
class UnsupportedSymbol : public Error {
 public:
  UnsupportedSymbol(std::string structure, std::string symbol)
      : Error("structure '" + structure + "' does not interpret '" + symbol + "'"),
        structure_(std::move(structure)),
        symbol_(std::move(symbol)) {}

  const std::string& structure() const { return structure_; }
  const std::string& symbol() const { return symbol_; }

 private:
  std::string structure_;
  std::string symbol_;
};

/// A request that cannot be carried out as stated (e.g. exhaustive mode on an infinite carrier).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace skm
