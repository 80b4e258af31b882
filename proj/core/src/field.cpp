#include "indpro/field.hpp"

#include <stdexcept>
#include <string>

namespace indpro {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus < 2 || modulus >= (1u << 31) || !is_prime(modulus)) {
    throw std::invalid_argument("PrimeField: modulus " + std::to_string(modulus) +
                                " is not a prime in [2, 2^31)");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField::inv: zero has no inverse");
  return pow(a, p_ - 2);
}

}  // namespace indpro
