#ifndef FPINV_FROBROOT_HPP
#define FPINV_FROBROOT_HPP

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/ideal.hpp"
#include "fpinv/polynomial.hpp"

namespace fpinv {

// Frobenius root C^e(I) = I^[1/p^e]: the smallest ideal J with I inside
// J^[p^e].  Computed generator-wise: each generator g decomposes uniquely as
//   g = sum_mu g_mu^(p^e) * x^mu   (mu ranging over [0,p^e)^n),
// and the g_mu over all generators generate C^e(I).  The result does not
// depend on the chosen generating set of I (up to ideal equality), which the
// property suite checks; no Groebner basis is required first.
inline Ideal frobenius_root(const Ideal& I, std::uint32_t e,
                            const Deadline* dl = nullptr) {
  if (e == 0) return I;
  const ContextPtr& ctx = I.context();
  std::int64_t q64 = checked_pow(ctx->p(), e);
  if (q64 >= static_cast<std::int64_t>(kMaxExponent))
    throw ResourceCapError("p^e exceeds the exponent range");
  const std::uint32_t q = static_cast<std::uint32_t>(q64);

  std::unordered_set<Polynomial, detail::PolyHash, detail::PolyEq> dedup;
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> buckets;
  for (const Polynomial& g : I.generators()) {
    check_deadline(dl, "frobenius root decomposition");
    buckets.clear();
    for (const Term& t : g.terms()) {
      Monomial quot(t.m.n), rem(t.m.n);
      for (std::size_t i = 0; i < t.m.n; ++i) {
        quot.e[i] = t.m.e[i] / q;
        rem.e[i] = t.m.e[i] % q;
      }
      buckets[rem].push_back({quot, t.c});
    }
    // Within one residue mu the quotient monomials inherit the strict
    // descending order from g, so the term lists are already canonical;
    // from_terms re-checks cheaply.
    for (auto& [mu, ts] : buckets)
      dedup.insert(Polynomial::from_terms(ctx, std::move(ts)));
  }

  std::vector<Polynomial> gens(dedup.begin(), dedup.end());
  std::sort(gens.begin(), gens.end(),
            [](const Polynomial& a, const Polynomial& b) {
              return detail::poly_compare(a, b) > 0;
            });
  return Ideal(ctx, std::move(gens));
}

// The chain C^e(I^0), C^e(I^1), ..., C^e(I^n_max).  Principal ideals power
// the single generator directly ((f)^n = (f^n)); otherwise powers come from
// the shared interreduced cache.
inline std::vector<Ideal> frobenius_root_chain(const Ideal& I, std::uint32_t e,
                                               std::uint64_t n_max,
                                               const Deadline* dl = nullptr) {
  const ContextPtr& ctx = I.context();
  std::vector<Ideal> out;
  out.reserve(n_max + 1);
  if (I.generators().size() == 1) {
    const Polynomial& f = I.generators()[0];
    Polynomial fn = Polynomial::constant(ctx, 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      check_deadline(dl, "frobenius root chain");
      out.push_back(frobenius_root(Ideal(ctx, {fn}), e, dl));
      if (n < n_max) fn = fn * f;
    }
  } else {
    IdealPowerCache cache;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      check_deadline(dl, "frobenius root chain");
      out.push_back(frobenius_root(ideal_power(I, n, cache), e, dl));
    }
  }
  return out;
}

}  // namespace fpinv

#endif  // FPINV_FROBROOT_HPP
