#pragma once

#include "skm/matrix.hpp"
#include "skm/prime_field.hpp"
#include "skm/quaternion.hpp"
#include "skm/rational.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace skm {

struct Value;

/// Element of a finite table structure: an index into its carrier.
struct TableIndex {
  std::uint32_t index = 0;
  friend bool operator==(const TableIndex&, const TableIndex&) = default;
};

/// Element of a product structure, one component per factor.
struct ProductValue {
  std::vector<Value> parts;
  friend bool operator==(const ProductValue& a, const ProductValue& b);
};

/// Any element of any structure in the library. Structures only ever see the
/// alternative they produced themselves.
struct Value {
  using Variant = std::variant<Rational, PrimeFieldElement, ComplexRational, QuaternionRational, Matrix2, TableIndex,
                               ProductValue>;
  Variant v;

  Value() = default;
  template <typename T>
    requires std::is_constructible_v<Variant, T&&>
  Value(T&& t) : v(std::forward<T>(t)) {}  // NOLINT(google-explicit-constructor)

  template <typename T>
  const T& as() const {
    return std::get<T>(v);
  }

  friend bool operator==(const Value& a, const Value& b) { return a.v == b.v; }
};

inline bool operator==(const ProductValue& a, const ProductValue& b) { return a.parts == b.parts; }

}  // namespace skm
