#pragma once

#include <cstdint>
#include <stdexcept>

namespace ginwb {

/// Arithmetic in Z/p for a word-sized prime p (default 32003).
/// Residues are stored in [0, p); the modulus is a runtime parameter so the
/// same computation can be replayed over a second prime.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  }

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(long long a) const {
    long long r = a % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);  // p prime
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
  }

  /// Signed representative in (-p/2, p/2], handy for printing.
  long long lift(std::uint32_t a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : a;
  }

private:
  std::uint32_t p_;
};

}  // namespace ginwb
