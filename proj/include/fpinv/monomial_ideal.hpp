#ifndef FPINV_MONOMIAL_IDEAL_HPP
#define FPINV_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/invariants.hpp"
#include "fpinv/monomial.hpp"

namespace fpinv {

// Monomial ideal held purely combinatorially: minimal generator exponent
// vectors over n variables in characteristic p.  The independent pipeline for
// nu-invariants (integer programming on exponents, no polynomial arithmetic).
struct MonomialIdeal {
  std::vector<Monomial> gens;  // minimal generators
  std::size_t nvars = 0;
  std::uint32_t p = 2;

  MonomialIdeal(std::vector<std::vector<std::uint32_t>> exponents,
                std::size_t n, const PrimeModulus& pm)
      : nvars(n), p(pm.value()) {
    if (n == 0 || n > kMaxVariables)
      throw PreconditionError("monomial ideal needs 1..8 variables");
    std::vector<Monomial> raw;
    for (const auto& v : exponents) {
      if (v.size() != n)
        throw PreconditionError("exponent vector of wrong length");
      raw.push_back(Monomial(v));
    }
    // Minimalize: drop duplicates and divisible generators.
    std::sort(raw.begin(), raw.end(),
              [](const Monomial& a, const Monomial& b) {
                if (a.degree() != b.degree()) return a.degree() < b.degree();
                return a < b;
              });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    for (const Monomial& m : raw) {
      bool redundant = false;
      for (const Monomial& k : gens)
        if (monomial_divides(k, m)) {
          redundant = true;
          break;
        }
      if (!redundant) gens.push_back(m);
    }
    if (gens.empty())
      throw PreconditionError("monomial ideal needs at least one generator");
    for (const Monomial& g : gens)
      if (g.is_one())
        throw PreconditionError("invariants undefined for trivial ideal");
  }
};

namespace detail {

// Dense DP table F over the box [0,t_1] x ... x [0,t_n]:
//   F(u) = max{s : x^u in a^s}, capped at `cap` (F(u) = 0 when x^u not in a).
// Row-major layout; u is processed in ascending product order so every
// u - g needed is already final.
class MaxPowerTable {
 public:
  MaxPowerTable(const MonomialIdeal& a, const std::vector<std::int64_t>& tmax,
                std::int64_t cap)
      : n_(a.nvars), cap_(cap) {
    std::int64_t size = 1;
    dims_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      dims_[i] = tmax[i] + 1;
      size = checked_mul(size, dims_[i]);
      if (size > (1ll << 26))
        throw ResourceCapError("monomial membership table too large");
    }
    strides_.assign(n_, 1);
    for (std::size_t i = n_ - 1; i-- > 0;)
      strides_[i] = strides_[i + 1] * dims_[i + 1];

    std::vector<std::int64_t> goff;
    for (const Monomial& g : a.gens) {
      std::int64_t off = 0;
      bool fits = true;
      for (std::size_t i = 0; i < n_; ++i) {
        if (g.e[i] > tmax[i]) fits = false;
        off += static_cast<std::int64_t>(g.e[i]) * strides_[i];
      }
      if (fits) gens_.push_back(g);
      if (fits) goff.push_back(off);
    }

    table_.assign(static_cast<std::size_t>(size), 0);
    std::vector<std::int64_t> u(n_, 0);
    for (std::int64_t idx = 0; idx < size; ++idx) {
      std::int32_t best = 0;
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        bool divides = true;
        for (std::size_t i = 0; i < n_; ++i)
          if (gens_[gi].e[i] > u[i]) {
            divides = false;
            break;
          }
        if (!divides) continue;
        std::int32_t v = 1 + table_[static_cast<std::size_t>(idx - goff[gi])];
        best = std::max(best, v);
      }
      table_[static_cast<std::size_t>(idx)] =
          std::min<std::int32_t>(best, static_cast<std::int32_t>(cap_));
      // Advance the odometer (last coordinate fastest).
      for (std::size_t i = n_; i-- > 0;) {
        if (++u[i] < dims_[i]) break;
        u[i] = 0;
      }
    }
  }

  std::int64_t at(const std::vector<std::int64_t>& u) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i] < 0 || u[i] >= dims_[i])
        throw PreconditionError("exponent outside the membership table");
      idx += u[i] * strides_[i];
    }
    return table_[static_cast<std::size_t>(idx)];
  }

 private:
  std::size_t n_;
  std::int64_t cap_;
  std::vector<std::int64_t> dims_, strides_;
  std::vector<Monomial> gens_;
  std::vector<std::int32_t> table_;
};

}  // namespace detail

// Largest s <= cap with x^t in a^s (0 when x^t is not even in a).
inline std::int64_t max_power_membership(const std::vector<std::int64_t>& t,
                                         const MonomialIdeal& a,
                                         std::int64_t cap) {
  if (t.size() != a.nvars)
    throw PreconditionError("exponent vector of wrong length");
  detail::MaxPowerTable table(a, t, cap);
  return table.at(t);
}

// nu-invariants of a monomial ideal by the membership oracle:
//   mu in C^e(a^s)  <=>  x^{mu*p^e + (p^e-1)*1} in a^s,
// so n(mu) = F(mu*p^e + (p^e-1)*1) enumerates the jump positions as mu runs
// over the box [0, r*maxdeg]^n; values at or above the window are dropped.
inline NuSet monomial_nu_invariants(const MonomialIdeal& a, std::uint32_t e,
                                    const Deadline* dl = nullptr) {
  if (e < 1) throw PreconditionError("level must be at least 1");
  PrimeModulus pm(a.p);
  std::int64_t pe = checked_pow(a.p, e);
  std::int64_t r = static_cast<std::int64_t>(a.gens.size());
  std::int64_t window = checked_mul(r, pe);

  std::int64_t maxdeg = 0;
  for (const Monomial& g : a.gens)
    maxdeg = std::max(maxdeg, static_cast<std::int64_t>(g.degree()));
  std::int64_t mu_top = checked_mul(r, maxdeg);

  std::vector<std::int64_t> tmax(a.nvars,
                                 checked_add(checked_mul(pe, mu_top), pe - 1));
  detail::MaxPowerTable table(a, tmax, window);

  std::vector<std::int64_t> found;
  std::vector<std::int64_t> mu(a.nvars, 0);
  for (;;) {
    check_deadline(dl, "monomial nu enumeration");
    std::vector<std::int64_t> t(a.nvars);
    for (std::size_t i = 0; i < a.nvars; ++i)
      t[i] = checked_add(checked_mul(mu[i], pe), pe - 1);
    std::int64_t v = table.at(t);
    if (v < window) found.push_back(v);
    std::size_t i = a.nvars;
    bool done = true;
    for (; i-- > 0;) {
      if (++mu[i] <= mu_top) {
        done = false;
        break;
      }
      mu[i] = 0;
    }
    if (done) break;
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  NuSet out;
  out.level = e;
  out.r = static_cast<std::uint32_t>(r);
  out.pe = pe;
  out.members = std::move(found);
  return out;
}

}  // namespace fpinv

#endif  // FPINV_MONOMIAL_IDEAL_HPP
