#pragma once

#include <cstdint>
#include <string>

#include "mbm/errors.hpp"

namespace mbm {

using Scalar = std::uint32_t;

/// The prime field GF(p). Scalars are canonical representatives 0..p-1.
class FieldSpec {
 public:
  /// Largest supported modulus; keeps products and short sums inside 64 bits.
  static constexpr std::uint32_t kMaxPrime = 65521;

  explicit FieldSpec(std::uint32_t p) : p_(p) {
    if (p < 2 || p > kMaxPrime || !is_prime(p)) {
      throw PreconditionError("modulus " + std::to_string(p) + " is not a supported prime");
    }
  }

  std::uint32_t p() const noexcept { return p_; }

  Scalar reduce(long long v) const noexcept {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((a + b) % p_); }
  Scalar sub(Scalar a, Scalar b) const noexcept { return static_cast<Scalar>((a + p_ - b) % p_); }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const {
    if (a == 0) throw PreconditionError("inverse of zero in GF(" + std::to_string(p_) + ")");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<Scalar>(result);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  static bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace mbm
