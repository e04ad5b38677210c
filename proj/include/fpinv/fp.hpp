#ifndef FPINV_FP_HPP
#define FPINV_FP_HPP

#include <cstdint>
#include <string>

#include "fpinv/common.hpp"

namespace fpinv {

// A validated prime modulus p with 2 <= p < 2^31.  Primality is established
// deterministically at construction (trial division; sqrt(2^31) < 46341 steps).
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw PreconditionError("modulus must be a prime in [2, 2^31): got " +
                              std::to_string(p));
  }

  std::uint32_t value() const { return p_; }
  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const PrimeModulus& a, const PrimeModulus& b) {
    return a.p_ != b.p_;
  }

 private:
  static bool is_prime(std::uint32_t n) {
    if (n < 4) return n >= 2;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6)
      if (n % d == 0 || n % (d + 2) == 0) return false;
    return true;
  }

  std::uint32_t p_;
};

// Element of F_p in canonical form: value in [0, p).
// Carries its modulus so that mixed-modulus arithmetic is detected, not UB.
struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t p = 2;

  FpScalar() = default;
  FpScalar(std::int64_t v, const PrimeModulus& m) : p(m.value()) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    value = static_cast<std::uint32_t>(r);
  }

  bool is_zero() const { return value == 0; }

  friend bool operator==(const FpScalar& a, const FpScalar& b) {
    return a.value == b.value && a.p == b.p;
  }
  friend bool operator!=(const FpScalar& a, const FpScalar& b) {
    return !(a == b);
  }
};

namespace detail {
inline void require_same_modulus(const FpScalar& a, const FpScalar& b) {
  if (a.p != b.p)
    throw PreconditionError("mixed moduli in F_p arithmetic: " +
                            std::to_string(a.p) + " vs " + std::to_string(b.p));
}
}  // namespace detail

inline FpScalar fp_add(const FpScalar& a, const FpScalar& b) {
  detail::require_same_modulus(a, b);
  FpScalar r;
  r.p = a.p;
  std::uint64_t s = static_cast<std::uint64_t>(a.value) + b.value;
  r.value = static_cast<std::uint32_t>(s >= a.p ? s - a.p : s);
  return r;
}

inline FpScalar fp_neg(const FpScalar& a) {
  FpScalar r;
  r.p = a.p;
  r.value = a.value == 0 ? 0 : a.p - a.value;
  return r;
}

inline FpScalar fp_sub(const FpScalar& a, const FpScalar& b) {
  return fp_add(a, fp_neg(b));
}

inline FpScalar fp_mul(const FpScalar& a, const FpScalar& b) {
  detail::require_same_modulus(a, b);
  FpScalar r;
  r.p = a.p;
  // a.value, b.value < 2^31, so the product fits in 62 bits.
  r.value = static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(a.value) * b.value % a.p);
  return r;
}

// a^n mod p for n >= 0 (binary exponentiation).
inline FpScalar fp_pow(FpScalar a, std::uint64_t n) {
  FpScalar r;
  r.p = a.p;
  r.value = 1 % a.p;
  while (n > 0) {
    if (n & 1) r = fp_mul(r, a);
    a = fp_mul(a, a);
    n >>= 1;
  }
  return r;
}

// Multiplicative inverse via Fermat: a^(p-2).  Zero has no inverse.
inline FpScalar fp_inv(const FpScalar& a) {
  if (a.is_zero()) throw PreconditionError("division by zero in F_p");
  return fp_pow(a, a.p - 2);
}

inline FpScalar fp_div(const FpScalar& a, const FpScalar& b) {
  return fp_mul(a, fp_inv(b));
}

}  // namespace fpinv

#endif  // FPINV_FP_HPP
