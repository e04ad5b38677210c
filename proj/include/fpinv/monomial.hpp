#ifndef FPINV_MONOMIAL_HPP
#define FPINV_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "fpinv/common.hpp"

namespace fpinv {

// Monomials keep their exponents inline; the hot chain computations create
// millions of them and must not touch the heap.  kMaxVariables bounds the
// ambient polynomial ring (constructing a wider context is rejected).
constexpr std::size_t kMaxVariables = 8;

// Exponents are capped well below 2^31 so sums and p^e-scalings stay checked.
constexpr std::uint64_t kMaxExponent = (1ull << 31);

enum class MonomialOrder { lex, grevlex };

struct Monomial {
  std::array<std::uint32_t, kMaxVariables> e{};
  std::uint8_t n = 0;  // number of variables in the ambient ring

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : n(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables)
      throw PreconditionError("too many variables for monomial storage");
  }
  Monomial(std::initializer_list<std::uint32_t> exps)
      : Monomial(std::vector<std::uint32_t>(exps)) {}
  explicit Monomial(const std::vector<std::uint32_t>& exps)
      : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) e[i] = exps[i];
  }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n; ++i) d += e[i];
    return d;
  }

  bool is_one() const {
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    if (a.n != b.n) return false;
    for (std::size_t i = 0; i < a.n; ++i)
      if (a.e[i] != b.e[i]) return false;
    return true;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }
  // Container ordering (plain lexicographic on exponents); monomial-order
  // comparisons go through monomial_compare instead.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.n && i < b.n; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return a.n < b.n;
  }
};

inline bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.n; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(a.e[i]) + b.e[i];
    if (s >= kMaxExponent)
      throw ResourceCapError("monomial exponent range exceeded");
    r.e[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

// b / a; requires a | b.
inline Monomial monomial_div(const Monomial& b, const Monomial& a) {
  Monomial r(b.n);
  for (std::size_t i = 0; i < b.n; ++i) {
    if (a.e[i] > b.e[i])
      throw PreconditionError("monomial division without divisibility");
    r.e[i] = b.e[i] - a.e[i];
  }
  return r;
}

inline Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n);
  for (std::size_t i = 0; i < a.n; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

inline Monomial monomial_pow_scale(const Monomial& a, std::uint64_t k) {
  Monomial r(a.n);
  for (std::size_t i = 0; i < a.n; ++i) {
    std::uint64_t s = static_cast<std::uint64_t>(a.e[i]) * k;
    if (s >= kMaxExponent)
      throw ResourceCapError("monomial exponent range exceeded");
    r.e[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

// Returns <0, 0, >0 as a is below, equal to, or above b in the given order.
// Variables are ranked x1 > x2 > ... (earlier context variables are larger).
inline int monomial_compare(const Monomial& a, const Monomial& b,
                            MonomialOrder order) {
  if (order == MonomialOrder::lex) {
    for (std::size_t i = 0; i < a.n; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
  }
  // grevlex: compare total degree, then reversed-last-difference.
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.n; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::size_t i = 0; i < m.n; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace fpinv

#endif  // FPINV_MONOMIAL_HPP
