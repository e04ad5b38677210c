#ifndef FPINV_IDEAL_HPP
#define FPINV_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/polynomial.hpp"

namespace fpinv {

namespace detail {

// Canonical total order on polynomials of one context (term-list compare in
// the context's monomial order).  Used for deterministic generator lists.
inline int poly_compare(const Polynomial& a, const Polynomial& b) {
  MonomialOrder ord = a.context()->order();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
    int c = monomial_compare(ta[i].m, tb[i].m, ord);
    if (c != 0) return c;
    if (ta[i].c.value != tb[i].c.value)
      return ta[i].c.value < tb[i].c.value ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

struct PolyHash {
  std::size_t operator()(const Polynomial& f) const {
    std::uint64_t h = 1469598103934665603ull;
    for (const Term& t : f.terms()) {
      for (std::size_t i = 0; i < t.m.n; ++i) {
        h ^= t.m.e[i];
        h *= 1099511628211ull;
      }
      h ^= t.c.value;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct PolyEq {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return a == b;
  }
};

}  // namespace detail

// Remainder of f on division by the polynomial list G (each monic, scanned in
// order for a leading term dividing the current lead).  Full normal form:
// no term of the remainder is divisible by any leading term of G.
inline Polynomial normal_form(const Polynomial& f,
                              const std::vector<Polynomial>& G) {
  Polynomial h = f;
  Polynomial r(f.context());
  while (!h.is_zero()) {
    const Term& lead = h.leading_term();
    bool reduced = false;
    for (const Polynomial& g : G) {
      const Term& gl = g.leading_term();
      if (monomial_divides(gl.m, lead.m)) {
        // g is monic, so the cancelling multiple is lead.c * (lead.m/gl.m).
        h = h - g.times_term(monomial_div(lead.m, gl.m), lead.c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      r = r + Polynomial::from_term(f.context(), lead.m, lead.c.value);
      h = h - Polynomial::from_term(f.context(), lead.m, lead.c.value);
    }
  }
  return r;
}

namespace detail {

// Minimal generators of a monomial ideal: sort, drop duplicates and anything
// divisible by another generator.
inline std::vector<Polynomial> monomial_minimal_basis(
    const ContextPtr& ctx, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> kept;
  for (const Monomial& m : ms) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (monomial_divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  MonomialOrder ord = ctx->order();
  std::sort(kept.begin(), kept.end(),
            [ord](const Monomial& a, const Monomial& b) {
              return monomial_compare(a, b, ord) > 0;
            });
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const Monomial& m : kept)
    out.push_back(Polynomial::from_term(ctx, m, 1));
  return out;
}

// Buchberger's algorithm with the coprimality and chain criteria, followed by
// minimalization and full tail autoreduction.  The result is the unique
// reduced Groebner basis, monic, sorted descending by leading monomial.
inline std::vector<Polynomial> reduced_groebner(
    const ContextPtr& ctx, const std::vector<Polynomial>& gens) {
  MonomialOrder ord = ctx->order();

  std::vector<Polynomial> G;
  bool all_monomial = true;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    G.push_back(g.scale(fp_inv(g.leading_term().c)));
    all_monomial = all_monomial && g.terms().size() == 1;
  }
  if (G.empty()) return {};

  if (all_monomial) {
    std::vector<Monomial> ms;
    ms.reserve(G.size());
    for (const Polynomial& g : G) ms.push_back(g.leading_term().m);
    return monomial_minimal_basis(ctx, std::move(ms));
  }

  std::sort(G.begin(), G.end(), [](const Polynomial& a, const Polynomial& b) {
    return poly_compare(a, b) < 0;
  });

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    bool handled = false;
  };
  std::vector<Pair> pairs;
  auto push_pairs_for = [&](std::size_t m) {
    for (std::size_t i = 0; i < m; ++i)
      pairs.push_back({i, m,
                       monomial_lcm(G[i].leading_term().m,
                                    G[m].leading_term().m),
                       false});
  };
  for (std::size_t m = 1; m < G.size(); ++m) push_pairs_for(m);

  auto handled = [&](std::size_t a, std::size_t b) {
    for (const Pair& q : pairs)
      if (((q.i == a && q.j == b) || (q.i == b && q.j == a)) && q.handled)
        return true;
    return false;
  };

  for (;;) {
    // Normal selection: the pending pair with the smallest lcm.
    std::size_t best = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (pairs[k].handled) continue;
      if (best == pairs.size() ||
          monomial_compare(pairs[k].lcm, pairs[best].lcm, ord) < 0 ||
          (monomial_compare(pairs[k].lcm, pairs[best].lcm, ord) == 0 &&
           (pairs[k].i < pairs[best].i ||
            (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
        best = k;
    }
    if (best == pairs.size()) break;
    pairs[best].handled = true;
    const std::size_t pi = pairs[best].i;
    const std::size_t pj = pairs[best].j;
    const Monomial plcm = pairs[best].lcm;

    const Monomial& li = G[pi].leading_term().m;
    const Monomial& lj = G[pj].leading_term().m;
    // Coprimality criterion: disjoint leading supports reduce to zero.
    if (plcm == monomial_mul(li, lj)) continue;
    // Chain criterion: some third leading term divides the lcm and both
    // associated pairs were already handled.
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pi || k == pj) continue;
      if (monomial_divides(G[k].leading_term().m, plcm) && handled(pi, k) &&
          handled(pj, k))
        chained = true;
    }
    if (chained) continue;

    Polynomial s = G[pi].times_term(monomial_div(plcm, li),
                                    FpScalar(1, ctx->prime())) -
                   G[pj].times_term(monomial_div(plcm, lj),
                                    FpScalar(1, ctx->prime()));
    Polynomial h = normal_form(s, G);
    if (!h.is_zero()) {
      G.push_back(h.scale(fp_inv(h.leading_term().c)));
      push_pairs_for(G.size() - 1);
    }
  }

  // Minimalize: keep only generators whose leading monomial is not divisible
  // by another kept generator's leading monomial.
  std::sort(G.begin(), G.end(), [ord](const Polynomial& a, const Polynomial& b) {
    return monomial_compare(a.leading_term().m, b.leading_term().m, ord) < 0;
  });
  std::vector<Polynomial> minimal;
  for (const Polynomial& g : G) {
    bool redundant = false;
    for (const Polynomial& k : minimal)
      if (monomial_divides(k.leading_term().m, g.leading_term().m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }

  // Tail-reduce every element against the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others);
      if (r != minimal[i]) {
        minimal[i] = r.scale(fp_inv(r.leading_term().c));
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [ord](const Polynomial& a, const Polynomial& b) {
              return monomial_compare(a.leading_term().m, b.leading_term().m,
                                      ord) > 0;
            });
  return minimal;
}

}  // namespace detail

// Ideal of F_p[x_1..x_n], held as an explicit generator list plus a cached
// reduced Groebner basis.  The zero ideal has no generators; the unit ideal
// normalizes to the single generator 1.
class Ideal {
 public:
  explicit Ideal(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  Ideal(ContextPtr ctx, std::vector<Polynomial> gens) : ctx_(std::move(ctx)) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
      require_same_context(ctx_, g.context());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(const ContextPtr& ctx) { return Ideal(ctx); }
  static Ideal unit(const ContextPtr& ctx) {
    return Ideal(ctx, {Polynomial::constant(ctx, 1)});
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Unique reduced Groebner basis; computed once and cached.
  const std::vector<Polynomial>& reduced_basis() const {
    if (!basis_)
      basis_ = std::make_shared<const std::vector<Polynomial>>(
          detail::reduced_groebner(ctx_, gens_));
    return *basis_;
  }

  bool is_zero() const { return reduced_basis().empty(); }
  bool is_unit() const {
    const auto& b = reduced_basis();
    return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
  }
  // Trivial means zero or unit: the ideals on which the numeric invariants
  // are undefined.
  bool is_trivial() const { return is_zero() || is_unit(); }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<const std::vector<Polynomial>> basis_;
};

inline bool ideal_contains(const Ideal& I, const Polynomial& f) {
  require_same_context(I.context(), f.context());
  return normal_form(f, I.reduced_basis()).is_zero();
}

// A subset of B, generator-wise.
inline bool ideal_subset(const Ideal& A, const Ideal& B) {
  for (const Polynomial& g : A.generators())
    if (!ideal_contains(B, g)) return false;
  return true;
}

inline bool ideal_equals(const Ideal& A, const Ideal& B) {
  require_same_context(A.context(), B.context());
  const auto& a = A.reduced_basis();
  const auto& b = B.reduced_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline Ideal ideal_sum(const Ideal& A, const Ideal& B) {
  require_same_context(A.context(), B.context());
  std::vector<Polynomial> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return Ideal(A.context(), std::move(gens));
}

inline Ideal ideal_mul(const Ideal& A, const Ideal& B) {
  require_same_context(A.context(), B.context());
  std::vector<Polynomial> gens;
  gens.reserve(A.generators().size() * B.generators().size());
  for (const Polynomial& a : A.generators())
    for (const Polynomial& b : B.generators()) gens.push_back(a * b);
  return Ideal(A.context(), std::move(gens));
}

// Cache of interreduced powers I^0, I^1, ... shared across computations that
// walk the same power chain.
struct IdealPowerCache {
  std::vector<Ideal> powers;
};

// I^n with every cached power replaced by its reduced basis (interreduction
// keeps generator counts small along the chain).
inline const Ideal& ideal_power(const Ideal& I, std::uint64_t n,
                                IdealPowerCache& cache) {
  if (cache.powers.empty())
    cache.powers.push_back(Ideal::unit(I.context()));
  while (cache.powers.size() <= n) {
    const Ideal& prev = cache.powers.back();
    Ideal next = ideal_mul(prev, I);
    cache.powers.push_back(Ideal(I.context(), next.reduced_basis()));
  }
  return cache.powers[n];
}

inline Ideal ideal_power(const Ideal& I, std::uint64_t n) {
  IdealPowerCache cache;
  return ideal_power(I, n, cache);
}

// Bracket power I^[p^e]: generator-wise Frobenius power.
inline Ideal bracket_power(const Ideal& I, std::uint32_t e) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const Polynomial& g : I.generators())
    gens.push_back(frobenius_power(g, e));
  return Ideal(I.context(), std::move(gens));
}

}  // namespace fpinv

#endif  // FPINV_IDEAL_HPP
