#ifndef FPINV_DIGITS_HPP
#define FPINV_DIGITS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/fp.hpp"

namespace fpinv {

// Base-p digit string, least significant digit first.
struct DigitVector {
  std::vector<std::uint32_t> digits;
  std::uint32_t p = 2;

  friend bool operator==(const DigitVector& a, const DigitVector& b) {
    return a.p == b.p && a.digits == b.digits;
  }
  friend bool operator!=(const DigitVector& a, const DigitVector& b) {
    return !(a == b);
  }
};

// The `len` low base-p digits of n, least significant first, zero-padded.
// n must fit: anything left over after `len` digits is a caller error.
inline DigitVector base_p_digits(std::uint64_t n, const PrimeModulus& p,
                                 std::size_t len) {
  DigitVector out;
  out.p = p.value();
  out.digits.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.digits.push_back(static_cast<std::uint32_t>(n % p.value()));
    n /= p.value();
  }
  if (n != 0)
    throw PreconditionError("value does not fit in " + std::to_string(len) +
                            " base-" + std::to_string(p.value()) + " digits");
  return out;
}

namespace detail {

// Pascal triangle of C(i,j) mod p for 0 <= j <= i < p, memoized per modulus.
// Row i starts at offset i*(i+1)/2.  Only built for moduli small enough that
// the triangle stays a few megabytes; larger moduli use the direct product.
class BinomialTriangle {
 public:
  static constexpr std::uint32_t kMaxTabulatedModulus = 2048;

  static std::shared_ptr<const std::vector<std::uint32_t>> get(
      std::uint32_t p) {
    static std::mutex mu;
    static std::map<std::uint32_t,
                    std::shared_ptr<const std::vector<std::uint32_t>>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    auto table = std::make_shared<std::vector<std::uint32_t>>();
    table->resize(static_cast<std::size_t>(p) * (p + 1) / 2);
    for (std::uint32_t i = 0; i < p; ++i) {
      std::size_t row = static_cast<std::size_t>(i) * (i + 1) / 2;
      (*table)[row] = 1 % p;
      for (std::uint32_t j = 1; j < i; ++j) {
        std::size_t prev = static_cast<std::size_t>(i - 1) * i / 2;
        std::uint64_t s =
            static_cast<std::uint64_t>((*table)[prev + j - 1]) +
            (*table)[prev + j];
        (*table)[row + j] = static_cast<std::uint32_t>(s >= p ? s - p : s);
      }
      if (i > 0) (*table)[row + i] = 1 % p;
    }
    cache.emplace(p, table);
    return table;
  }
};

// C(a, b) mod p for single digits a, b < p.
inline std::uint32_t digit_binomial(std::uint32_t a, std::uint32_t b,
                                    const PrimeModulus& pm) {
  const std::uint32_t p = pm.value();
  if (b > a) return 0;
  if (b == 0 || b == a) return 1 % p;
  if (p <= BinomialTriangle::kMaxTabulatedModulus) {
    auto table = BinomialTriangle::get(p);
    return (*table)[static_cast<std::size_t>(a) * (a + 1) / 2 + b];
  }
  // Direct product C(a,b) = prod_{k=1..b} (a-b+k)/k, all factors invertible
  // because a < p.
  std::uint32_t m = std::min(b, a - b);
  FpScalar num(1, pm), den(1, pm);
  for (std::uint32_t k = 1; k <= m; ++k) {
    num = fp_mul(num, FpScalar(static_cast<std::int64_t>(a - m + k), pm));
    den = fp_mul(den, FpScalar(static_cast<std::int64_t>(k), pm));
  }
  return fp_div(num, den).value;
}

}  // namespace detail

// C(m, n) mod p by the digit-wise product over base-p expansions.
inline FpScalar lucas_binomial(std::uint64_t m, std::uint64_t n,
                               const PrimeModulus& p) {
  FpScalar r(1, p);
  while (m > 0 || n > 0) {
    std::uint32_t md = static_cast<std::uint32_t>(m % p.value());
    std::uint32_t nd = static_cast<std::uint32_t>(n % p.value());
    if (nd > md) return FpScalar(0, p);
    r = fp_mul(r, FpScalar(detail::digit_binomial(md, nd, p), p));
    m /= p.value();
    n /= p.value();
  }
  return r;
}

// Eigenvalue of the differential operator s_m on the graded piece indexed by
// the exponent vector a, in an ambient family of r generators:
//   (-1)^m * C(|a| + r + m - 1, m)  mod p.
inline FpScalar s_m_eigenvalue(std::uint64_t m,
                               const std::vector<std::uint64_t>& a,
                               std::uint32_t r, const PrimeModulus& p) {
  std::int64_t total = static_cast<std::int64_t>(r);
  for (std::uint64_t ai : a)
    total = checked_add(total, static_cast<std::int64_t>(ai));
  total = checked_add(total, checked_sub(static_cast<std::int64_t>(m), 1));
  FpScalar c = lucas_binomial(static_cast<std::uint64_t>(total), m, p);
  return (m % 2 == 0) ? c : fp_neg(c);
}

// Eigenvalue of s_{p^i} read off at level e: the i-th base-p digit of |a|.
// Only digits below the level are defined.
inline FpScalar s_pi_digit_eigenvalue(std::uint32_t i, std::uint32_t e,
                                      const std::vector<std::uint64_t>& a,
                                      std::uint32_t r, const PrimeModulus& p) {
  (void)r;  // part of the operator family's indexing; value depends on |a|
  if (i >= e) throw PreconditionError("digit index out of level range");
  std::int64_t total = 0;
  for (std::uint64_t ai : a)
    total = checked_add(total, static_cast<std::int64_t>(ai));
  std::uint64_t t = static_cast<std::uint64_t>(total);
  for (std::uint32_t k = 0; k < i; ++k) t /= p.value();
  return FpScalar(static_cast<std::int64_t>(t % p.value()), p);
}

}  // namespace fpinv

#endif  // FPINV_DIGITS_HPP
