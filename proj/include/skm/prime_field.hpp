#pragma once

#include <cstdint>
#include <string>

namespace skm {

/// Residue modulo a prime. Invariant: residue < modulus.
struct PrimeFieldElement {
  std::uint64_t residue = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const PrimeFieldElement&, const PrimeFieldElement&) = default;
  std::string to_string() const { return std::to_string(residue); }
};

/// Trial division.
bool is_prime(std::uint64_t n);

/// 0 ↦ 0; otherwise the unique b with a·b ≡ 1 (mod p).
PrimeFieldElement inv_prime_field(const PrimeFieldElement& a);

}  // namespace skm
