#ifndef FPINV_INVARIANTS_HPP
#define FPINV_INVARIANTS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/frobroot.hpp"
#include "fpinv/ideal.hpp"
#include "fpinv/rational.hpp"

namespace fpinv {

// Level-e nu-invariants of an ideal a with r given generators: the jump
// positions of the Frobenius-root chain n -> C^e(a^n), recorded on the
// window [0, r*p^e).  The periodicity law (n in the full set with
// n >= r*p^e implies n - p^e in it) extends the window losslessly.
struct NuSet {
  std::uint32_t level = 1;  // e
  std::uint32_t r = 1;      // number of given generators
  std::int64_t pe = 0;      // p^e
  std::vector<std::int64_t> members;  // ascending, inside [0, r*p^e)

  std::int64_t window_top() const { return pe * static_cast<std::int64_t>(r); }

  bool contains_window(std::int64_t n) const {
    return std::binary_search(members.begin(), members.end(), n);
  }

  // Membership in the full (periodically extended) nu-set.
  bool contains_extended(std::int64_t n) const {
    if (n < 0) return false;
    while (n >= window_top()) n -= pe;
    // Values folded from the tail must land in the last period of the
    // window, where the periodic law applies.
    return contains_window(n);
  }

  // Distinct residues {n mod p^e} of the members, ascending.
  std::vector<std::int64_t> residues() const {
    std::vector<std::int64_t> out;
    out.reserve(members.size());
    for (std::int64_t n : members) out.push_back(n % pe);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

namespace detail {

inline void require_nontrivial(const Ideal& a) {
  if (a.is_trivial())
    throw PreconditionError("invariants undefined for trivial ideal");
}

// I^k routed through the principal fast path when I has one generator.
inline Ideal power_of(const Ideal& I, std::uint64_t k, IdealPowerCache& cache,
                      const Deadline* dl = nullptr) {
  check_deadline(dl, "ideal power");
  if (I.generators().size() == 1)
    return Ideal(I.context(), {I.generators()[0].pow(k)});
  return ideal_power(I, k, cache);
}

constexpr std::int64_t kMaxNuWindow = 1ll << 22;

}  // namespace detail

inline NuSet nu_invariants(const Ideal& a, std::uint32_t e,
                           const Deadline* dl = nullptr) {
  detail::require_nontrivial(a);
  if (e < 1) throw PreconditionError("level must be at least 1");
  NuSet out;
  out.level = e;
  out.r = static_cast<std::uint32_t>(a.generators().size());
  out.pe = checked_pow(a.context()->p(), e);
  std::int64_t top = checked_mul(out.pe, out.r);
  if (top > detail::kMaxNuWindow)
    throw ResourceCapError("nu-invariant window r*p^e too large");

  std::vector<Ideal> chain = frobenius_root_chain(
      a, e, static_cast<std::uint64_t>(top), dl);
  for (std::int64_t n = 0; n < top; ++n) {
    check_deadline(dl, "nu scan");
    if (!ideal_equals(chain[static_cast<std::size_t>(n)],
                      chain[static_cast<std::size_t>(n) + 1]))
      out.members.push_back(n);
  }
  return out;
}

// nu^J_a(p^e) = max{n >= 0 : a^n not inside J^[p^e]}, by ascending scan of
// the equivalent condition C^e(a^n) inside J (the Frobenius-root adjunction),
// with the Skoda step C^e(a^n) = a*C^e(a^{n-p^e}) reused past n >= r*p^e.
// Precondition a inside rad(J) is checked by searching a power of each
// generator in J up to power_bound (0 picks the default desk-scale bound).
inline std::int64_t nu_J(const Ideal& a, const Ideal& J, std::uint32_t e,
                         std::uint64_t power_bound = 0,
                         const Deadline* dl = nullptr) {
  detail::require_nontrivial(a);
  if (J.is_unit()) throw PreconditionError("J must be a proper ideal");
  const ContextPtr& ctx = a.context();
  std::int64_t pe = checked_pow(ctx->p(), e);

  std::uint64_t bound = power_bound;
  if (bound == 0) {
    std::int64_t maxdeg = 0;
    for (const Polynomial& f : a.generators())
      maxdeg = std::max(maxdeg, f.degree());
    bound = std::max<std::uint64_t>(
        4, 2 * static_cast<std::uint64_t>(maxdeg) * ctx->nvars());
  }

  // Radical precheck, also yielding a finite termination bound for the scan.
  std::uint64_t radical_sum = 1;
  for (const Polynomial& f : a.generators()) {
    Polynomial fm = Polynomial::constant(ctx, 1);
    bool found = false;
    for (std::uint64_t m = 1; m <= bound; ++m) {
      check_deadline(dl, "radical precheck");
      fm = fm * f;
      if (ideal_contains(J, fm)) {
        radical_sum += m - 1;
        found = true;
        break;
      }
    }
    if (!found)
      throw PreconditionError(
          "radical containment check failed: a generator of a has no power "
          "in J within the search bound");
  }
  std::uint64_t jgens = std::max<std::uint64_t>(1, J.generators().size());
  std::uint64_t hard_stop =
      radical_sum * (jgens * static_cast<std::uint64_t>(pe - 1) + 1) + 1;

  std::int64_t r = static_cast<std::int64_t>(a.generators().size());
  IdealPowerCache cache;
  std::vector<Ideal> roots;
  for (std::uint64_t n = 0;; ++n) {
    check_deadline(dl, "nu_J scan");
    Ideal root =
        (static_cast<std::int64_t>(n) >= checked_mul(r, pe))
            ? ideal_mul(a, roots[n - static_cast<std::uint64_t>(pe)])
            : frobenius_root(detail::power_of(a, n, cache, dl), e, dl);
    if (ideal_subset(root, J)) return static_cast<std::int64_t>(n) - 1;
    roots.push_back(std::move(root));
    if (n > hard_stop)
      throw FpinvError("nu_J scan exceeded its theoretical bound");
  }
}

// Finite-level lower approximant nu^J_a(p^e)/p^e of the F-threshold c^J(a).
inline Rational f_threshold_estimate(const Ideal& a, const Ideal& J,
                                     std::uint32_t e,
                                     std::uint64_t power_bound = 0,
                                     const Deadline* dl = nullptr) {
  std::int64_t nu = nu_J(a, J, e, power_bound, dl);
  return Rational(nu, checked_pow(a.context()->p(), e));
}

// Report of the stable-exponent search: the least e0 whose Frobenius-root
// values C^{e0}(a^{n*p^{e0}}) agree with every deeper level up to the checked
// depth, for n = 0..r; witnesses are those r+1 ideals (the test ideals
// tau(a^n)).
struct StableExponentReport {
  std::uint32_t e0 = 0;
  std::uint32_t checked_depth = 0;
  std::vector<Ideal> witnesses;
};

inline StableExponentReport stable_exponent(const Ideal& a,
                                            std::uint32_t d_check = 2,
                                            std::uint32_t cap = 8,
                                            const Deadline* dl = nullptr) {
  detail::require_nontrivial(a);
  if (d_check < 1) throw PreconditionError("depth must be at least 1");
  const std::uint64_t r = a.generators().size();
  IdealPowerCache cache;
  for (std::uint32_t e0 = 1; e0 <= cap; ++e0) {
    bool ok = true;
    std::vector<Ideal> witnesses;
    for (std::uint64_t n = 0; n <= r && ok; ++n) {
      std::int64_t k = checked_mul(static_cast<std::int64_t>(n),
                                   checked_pow(a.context()->p(), e0));
      Ideal base = frobenius_root(
          detail::power_of(a, static_cast<std::uint64_t>(k), cache, dl), e0,
          dl);
      for (std::uint32_t d = 1; d <= d_check && ok; ++d) {
        check_deadline(dl, "stable exponent search");
        std::int64_t kd = checked_mul(static_cast<std::int64_t>(n),
                                      checked_pow(a.context()->p(), e0 + d));
        Ideal deeper = frobenius_root(
            detail::power_of(a, static_cast<std::uint64_t>(kd), cache, dl),
            e0 + d, dl);
        if (!ideal_equals(base, deeper)) ok = false;
      }
      if (ok) witnesses.push_back(std::move(base));
    }
    if (ok) return {e0, d_check, std::move(witnesses)};
  }
  throw ResourceCapError(
      "no stable exponent found below cap",
      "searched e0 in [1, " + std::to_string(cap) + "] at depth " +
          std::to_string(d_check));
}

// Test ideal tau(a^lambda).  For lambda = n/p^e the stable-exponent formula
// applies exactly: tau = C^{e+e0}(a^{n*p^{e0}}).  Other positive lambda go
// through the increasing-union definition tau = U_e C^e(a^{ceil(lambda*p^e)})
// with a stabilization detector (the chain is ascending, so it may stop as
// soon as it reaches the unit ideal or repeats d_check times).
inline Ideal test_ideal(const Ideal& a, const Rational& lambda,
                        std::uint32_t e0 = 0, std::uint32_t d_check = 2,
                        const Deadline* dl = nullptr) {
  detail::require_nontrivial(a);
  if (!(lambda > Rational(0)))
    throw PreconditionError("lambda must be positive");
  if (e0 == 0) e0 = stable_exponent(a, d_check, 8, dl).e0;
  const std::uint32_t p = a.context()->p();
  IdealPowerCache cache;

  if (is_power_of(lambda.denominator(), p)) {
    std::uint32_t e = 0;
    for (std::int64_t d = lambda.denominator(); d > 1; d /= p) ++e;
    std::int64_t k = checked_mul(lambda.numerator(), checked_pow(p, e0));
    return frobenius_root(
        detail::power_of(a, static_cast<std::uint64_t>(k), cache, dl), e + e0,
        dl);
  }

  constexpr std::uint32_t kUnionCap = 16;
  std::optional<Ideal> prev;
  std::uint32_t agreement = 0;
  for (std::uint32_t ee = e0 + 1; ee <= e0 + kUnionCap; ++ee) {
    check_deadline(dl, "test ideal union chain");
    Rational scaled = lambda * Rational(checked_pow(p, ee));
    Ideal cur = frobenius_root(
        detail::power_of(a, static_cast<std::uint64_t>(scaled.ceil()), cache,
                         dl),
        ee, dl);
    if (cur.is_unit()) return cur;  // ascending chain has topped out
    if (prev && ideal_equals(cur, *prev)) {
      if (++agreement >= d_check) return cur;
    } else {
      agreement = 0;
    }
    prev = std::move(cur);
  }
  throw ResourceCapError("test ideal union chain did not stabilize below cap");
}

// Roots of the level-e approximating polynomial: the fractional parts
// (n mod p^e)/p^e over the level-e nu-invariants; all simple, in [0,1).
struct ApproxPolyRoots {
  std::uint32_t level = 1;
  std::vector<Rational> roots;  // ascending
};

inline ApproxPolyRoots approx_poly_roots(const Ideal& a, std::uint32_t e,
                                         const Deadline* dl = nullptr) {
  NuSet nu = nu_invariants(a, e, dl);
  ApproxPolyRoots out;
  out.level = e;
  for (std::int64_t res : nu.residues())
    out.roots.push_back(Rational(res, nu.pe));
  return out;
}

// True iff some root of the level-(e0+e) approximating polynomial lies in
// [k/p^e, (k+1)/p^e); by the refinement theorem this detects an F-jumping
// number in (k/p^e, (k+1)/p^e] + N.
inline bool f_jumping_in_interval(const Ideal& a, std::uint32_t e0,
                                  std::uint32_t e, std::int64_t k,
                                  const Deadline* dl = nullptr) {
  if (e < 1) throw PreconditionError("level must be at least 1");
  std::int64_t pe = checked_pow(a.context()->p(), e);
  if (k < 0 || k >= pe)
    throw PreconditionError("interval index k outside [0, p^e)");
  NuSet nu = nu_invariants(a, e0 + e, dl);
  std::int64_t pe0 = checked_pow(a.context()->p(), e0);
  std::vector<std::int64_t> res = nu.residues();
  auto it = std::lower_bound(res.begin(), res.end(), checked_mul(k, pe0));
  return it != res.end() && *it < checked_mul(k + 1, pe0);
}

// One output row of f_jumping_numbers: a certified interval (lo, hi] known
// to contain an F-jumping number, the smallest-denominator representable
// candidate inside it, and whether the candidate is certified exact
// (integer right endpoints only; see README).
struct FJEntry {
  Rational lo;
  Rational hi;
  Rational candidate;
  bool exact = false;
};

namespace detail {

// Smallest fraction (by denominator q = p^d*(p^m - 1), then by d) inside
// (lo, hi].  Always exists with d <= E, m = 1 because hi - lo = p^{-E}.
inline Rational smallest_candidate(const Rational& lo, const Rational& hi,
                                   std::uint32_t p, std::uint32_t E) {
  struct Q {
    std::int64_t q;
    std::uint32_t d, m;
  };
  std::vector<Q> qs;
  for (std::uint32_t d = 0; d <= E + 1; ++d)
    for (std::uint32_t m = 1; m <= 6; ++m) {
      std::int64_t q = checked_mul(checked_pow(p, d),
                                   checked_sub(checked_pow(p, m), 1));
      qs.push_back({q, d, m});
    }
  std::sort(qs.begin(), qs.end(), [](const Q& a, const Q& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.d != b.d) return a.d < b.d;
    return a.m < b.m;
  });
  for (const Q& q : qs) {
    Rational scaled_hi = hi * Rational(q.q);
    std::int64_t c = scaled_hi.floor();
    if (Rational(c, q.q) > lo) return Rational(c, q.q);
  }
  throw FpinvError("candidate search failed");  // unreachable: d=E, m=1 hits
}

}  // namespace detail

// Certified F-jumping-number intervals in (0, range_top], at dyadic-style
// precision p^{-E}.  Flagged interval chains are refined level by level from
// the nu-residue data, then certified per integer shift by a test-ideal
// difference across the interval ends.
inline std::vector<FJEntry> f_jumping_numbers(const Ideal& a,
                                              std::uint32_t range_top,
                                              std::uint32_t E,
                                              std::uint32_t e0 = 0,
                                              std::uint32_t d_check = 2,
                                              const Deadline* dl = nullptr) {
  detail::require_nontrivial(a);
  if (E < 1) throw PreconditionError("precision E must be at least 1");
  if (range_top < 1) throw PreconditionError("range_top must be at least 1");
  const std::uint32_t p = a.context()->p();
  if (e0 == 0) e0 = stable_exponent(a, d_check, 8, dl).e0;
  std::int64_t pe0 = checked_pow(p, e0);

  // Refine flagged intervals level by level; residue sets at level e0+e
  // flag (k/p^e, (k+1)/p^e].
  std::vector<std::int64_t> flagged;  // interval indices k at current level
  for (std::uint32_t e = 1; e <= E; ++e) {
    NuSet nu = nu_invariants(a, e0 + e, dl);
    std::vector<std::int64_t> res = nu.residues();
    auto is_flagged = [&](std::int64_t k) {
      auto it = std::lower_bound(res.begin(), res.end(), checked_mul(k, pe0));
      return it != res.end() && *it < checked_mul(k + 1, pe0);
    };
    std::vector<std::int64_t> next;
    if (e == 1) {
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(p); ++k)
        if (is_flagged(k)) next.push_back(k);
    } else {
      for (std::int64_t parent : flagged)
        for (std::int64_t j = 0; j < static_cast<std::int64_t>(p); ++j) {
          std::int64_t k = checked_add(checked_mul(parent, p), j);
          if (is_flagged(k)) next.push_back(k);
        }
    }
    flagged = std::move(next);
  }

  std::int64_t pE = checked_pow(p, E);
  auto tau = [&](const Rational& lam) {
    if (lam.is_zero()) return Ideal::unit(a.context());
    return test_ideal(a, lam, e0, d_check, dl);
  };

  std::vector<FJEntry> out;
  for (std::uint32_t s = 0; s < range_top; ++s) {
    for (std::int64_t k : flagged) {
      check_deadline(dl, "f-jumping certification");
      Rational lo = Rational(s) + Rational(k, pE);
      Rational hi = Rational(s) + Rational(k + 1, pE);
      Ideal tlo = tau(lo);
      Ideal thi = tau(hi);
      if (ideal_equals(tlo, thi)) continue;  // no jump in this shift
      FJEntry entry;
      entry.lo = lo;
      entry.hi = hi;
      entry.candidate = detail::smallest_candidate(lo, hi, p, E);
      if (entry.candidate == hi && hi.is_integer()) {
        Rational probe = hi - Rational(1, checked_pow(p, E + 1));
        entry.exact = !ideal_equals(tau(probe), thi);
      }
      out.push_back(std::move(entry));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const FJEntry& x, const FJEntry& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace fpinv

#endif  // FPINV_INVARIANTS_HPP
