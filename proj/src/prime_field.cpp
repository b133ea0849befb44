#include "skm/prime_field.hpp"

namespace skm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeFieldElement inv_prime_field(const PrimeFieldElement& a) {
  if (a.residue == 0) return {0, a.modulus};
  // extended Euclid on (residue, modulus)
  std::int64_t old_r = static_cast<std::int64_t>(a.residue), r = static_cast<std::int64_t>(a.modulus);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  const auto m = static_cast<std::int64_t>(a.modulus);
  return {static_cast<std::uint64_t>(((old_s % m) + m) % m), a.modulus};
}

}  // namespace skm
