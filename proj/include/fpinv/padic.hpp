#ifndef FPINV_PADIC_HPP
#define FPINV_PADIC_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/fp.hpp"
#include "fpinv/rational.hpp"

namespace fpinv {

// A rational number that is a p-adic integer: reduced fraction whose
// denominator is coprime to p (the ring Z_(p)).
struct PadicRational {
  Rational value;
  std::uint32_t p;

  PadicRational(const Rational& v, const PrimeModulus& pm)
      : value(v), p(pm.value()) {
    if (std::gcd(v.denominator(), static_cast<std::int64_t>(p)) != 1)
      throw PreconditionError(
          "denominator not coprime to p: not a p-adic integer");
  }
};

// Eventually periodic base-p digit expansion, least significant digit first:
// the stream is preperiod followed by period repeated forever.  Canonical
// form: the period is primitive and the preperiod minimal (its last digit
// differs from the period digit it would otherwise merge with); terminating
// expansions carry period (0).
struct DigitStream {
  std::vector<std::uint32_t> preperiod;
  std::vector<std::uint32_t> period;
  std::uint32_t p = 2;

  // The digit at position i of the infinite stream.
  std::uint32_t digit(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return period[(i - preperiod.size()) % period.size()];
  }

  friend bool operator==(const DigitStream& a, const DigitStream& b) {
    return a.p == b.p && a.preperiod == b.preperiod && a.period == b.period;
  }
  friend bool operator!=(const DigitStream& a, const DigitStream& b) {
    return !(a == b);
  }

  // "d0 d1 ... | dk ... (repeat)" with the bar before the periodic part.
  std::string str() const {
    std::string out;
    for (std::uint32_t d : preperiod) out += std::to_string(d) + " ";
    out += "|";
    for (std::uint32_t d : period) out += " " + std::to_string(d);
    out += " (repeat)";
    return out;
  }
};

// Digit expansion of a p-adic rational via repeated digit extraction:
//   d = alpha * den^{-1} mod p,  alpha <- (alpha - d)/p.
// With the (fixed) denominator b, the state is the integer numerator, which
// is strictly bounded after a burn-in, so the walk enters a cycle; the first
// revisited state yields the minimal preperiod and the primitive period
// (distinct states have distinct digit tails because the expansion map is
// injective on Z_(p)).
inline DigitStream digits_of_rational(const PadicRational& alpha) {
  const std::int64_t b = alpha.value.denominator();
  const std::uint32_t p = alpha.p;
  PrimeModulus pm(p);
  FpScalar inv_b = fp_inv(FpScalar(b, pm));

  DigitStream out;
  out.p = p;
  std::vector<std::uint32_t> digits;
  std::map<std::int64_t, std::size_t> seen;
  std::int64_t num = alpha.value.numerator();
  for (;;) {
    auto it = seen.find(num);
    if (it != seen.end()) {
      std::size_t start = it->second;
      out.preperiod.assign(digits.begin(), digits.begin() + start);
      out.period.assign(digits.begin() + start, digits.end());
      return out;
    }
    seen.emplace(num, digits.size());
    std::uint32_t d = fp_mul(FpScalar(num, pm), inv_b).value;
    digits.push_back(d);
    num = (num - checked_mul(static_cast<std::int64_t>(d), b)) / p;
  }
}

// Exact inverse of digits_of_rational on any eventually periodic stream:
//   value = N_pre + p^k * N_per / (1 - p^m).
inline Rational rational_from_digits(
    const std::vector<std::uint32_t>& preperiod,
    const std::vector<std::uint32_t>& period, const PrimeModulus& pm) {
  if (period.empty())
    throw PreconditionError("digit stream needs a nonempty period");
  const std::int64_t p = pm.value();
  for (std::uint32_t d : preperiod)
    if (d >= pm.value()) throw PreconditionError("digit out of range");
  for (std::uint32_t d : period)
    if (d >= pm.value()) throw PreconditionError("digit out of range");

  std::int64_t npre = 0, pk = 1;
  for (std::uint32_t d : preperiod) {
    npre = checked_add(npre, checked_mul(pk, d));
    pk = checked_mul(pk, p);
  }
  std::int64_t nper = 0, pm_pow = 1;
  for (std::uint32_t d : period) {
    nper = checked_add(nper, checked_mul(pm_pow, d));
    pm_pow = checked_mul(pm_pow, p);
  }
  return Rational(npre) +
         Rational(pk) * Rational(nper, checked_sub(1, pm_pow));
}

namespace detail {

// Inverse of a mod m (gcd(a, m) = 1) by extended Euclid, result in [0, m).
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) throw PreconditionError("element not invertible modulo p^e");
  return t0 < 0 ? t0 + m : t0;
}

}  // namespace detail

// |alpha_{<e}|: the integer in [0, p^e) built from the first e digits, i.e.
// num * den^{-1} mod p^e.
inline std::int64_t truncation_value(const PadicRational& alpha,
                                     std::uint32_t e) {
  std::int64_t q = checked_pow(alpha.p, e);
  std::int64_t n = alpha.value.numerator() % q;
  if (n < 0) n += q;
  std::int64_t inv = detail::inverse_mod(alpha.value.denominator(), q);
  return static_cast<std::int64_t>(
      static_cast<__int128>(n) * inv % q);
}

// alpha = n + gamma with gamma in [-1, 0] purely periodic: gamma = 0 for
// nonnegative integers, -1 for negative integers, alpha - ceil(alpha)
// (in (-1,0)) otherwise.
struct SplitNegative {
  std::int64_t integer_part;
  Rational gamma;
};

inline SplitNegative split_negative(const Rational& alpha) {
  if (alpha.is_integer()) {
    if (alpha.numerator() >= 0) return {alpha.numerator(), Rational(0)};
    return {alpha.numerator() + 1, Rational(-1)};
  }
  std::int64_t n = alpha.ceil();
  return {n, alpha - Rational(n)};
}

// Digit-sum identity: for lambda in [0,1] with (p^d - 1)*lambda integral,
// the first e*d digits of -lambda sum (with base-p weights) to
// lambda*(p^{ed} - 1).
inline bool digit_sum_identity_check(const Rational& lambda, std::uint32_t d,
                                     std::uint32_t e, const PrimeModulus& pm) {
  if (lambda < Rational(0) || lambda > Rational(1))
    throw PreconditionError("lambda outside [0, 1]");
  std::int64_t pd = checked_pow(pm.value(), d);
  Rational scaled = lambda * Rational(checked_sub(pd, 1));
  if (!scaled.is_integer())
    throw PreconditionError("(p^d - 1)*lambda is not an integer");
  PadicRational neg(-lambda, pm);
  std::int64_t lhs = truncation_value(neg, e * d);
  Rational rhs = lambda * Rational(checked_sub(checked_pow(pm.value(), e * d), 1));
  return rhs.is_integer() && lhs == rhs.numerator();
}

}  // namespace fpinv

#endif  // FPINV_PADIC_HPP
