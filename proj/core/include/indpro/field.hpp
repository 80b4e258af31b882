#pragma once

#include <cstdint>

namespace indpro {

bool is_prime(std::uint32_t n);

// Prime modulus shared by all matrices in a diagram. 2 <= p < 2^31, verified
// prime at construction so inverses always exist.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p_) - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t(std::uint64_t(a) * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  // Reduces an arbitrary signed value into [0, p).
  std::uint32_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return std::uint32_t(r);
  }

  friend bool operator==(PrimeField a, PrimeField b) { return a.p_ == b.p_; }
  friend bool operator!=(PrimeField a, PrimeField b) { return a.p_ != b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace indpro
