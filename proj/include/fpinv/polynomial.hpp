#ifndef FPINV_POLYNOMIAL_HPP
#define FPINV_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/context.hpp"
#include "fpinv/fp.hpp"
#include "fpinv/monomial.hpp"

namespace fpinv {

struct Term {
  Monomial m;
  FpScalar c;
};

// Element of F_p[x_1..x_n] in canonical form: terms sorted strictly
// descending in the context's monomial order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) throw PreconditionError("polynomial without context");
  }

  static Polynomial constant(const ContextPtr& ctx, std::int64_t v) {
    Polynomial f(ctx);
    FpScalar c(v, ctx->prime());
    if (!c.is_zero()) f.terms_.push_back({Monomial(ctx->nvars()), c});
    return f;
  }

  static Polynomial from_term(const ContextPtr& ctx, const Monomial& m,
                              std::int64_t v) {
    Polynomial f(ctx);
    FpScalar c(v, ctx->prime());
    if (!c.is_zero()) f.terms_.push_back({m, c});
    return f;
  }

  // Builds a canonical polynomial from arbitrary (possibly repeated,
  // possibly zero-coefficient) terms.
  static Polynomial from_terms(const ContextPtr& ctx, std::vector<Term> ts) {
    Polynomial f(ctx);
    MonomialOrder ord = ctx->order();
    std::sort(ts.begin(), ts.end(), [ord](const Term& a, const Term& b) {
      return monomial_compare(a.m, b.m, ord) > 0;
    });
    for (const Term& t : ts) {
      if (!f.terms_.empty() && f.terms_.back().m == t.m) {
        f.terms_.back().c = fp_add(f.terms_.back().c, t.c);
        if (f.terms_.back().c.is_zero()) f.terms_.pop_back();
      } else if (!t.c.is_zero()) {
        f.terms_.push_back(t);
      }
    }
    return f;
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  const Term& leading_term() const {
    if (terms_.empty())
      throw PreconditionError("leading term of the zero polynomial");
    return terms_.front();
  }

  // Total degree; -1 for the zero polynomial.
  std::int64_t degree() const {
    std::int64_t d = -1;
    for (const Term& t : terms_)
      d = std::max(d, static_cast<std::int64_t>(t.m.degree()));
    return d;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.ctx_ != b.ctx_ && *a.ctx_ != *b.ctx_) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || a.terms_[i].c != b.terms_[i].c)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    Polynomial r(a.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    MonomialOrder ord = a.ctx_->order();
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int cmp = monomial_compare(a.terms_[i].m, b.terms_[j].m, ord);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(b.terms_[j++]);
      } else {
        FpScalar c = fp_add(a.terms_[i].c, b.terms_[j].c);
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].m, c});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (Term& t : r.terms_) t.c = fp_neg(t.c);
    return r;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }

  // Multiplying every term by a fixed monomial (and scalar) preserves the
  // strict descending order in both lex and grevlex, so no resort is needed.
  Polynomial times_term(const Monomial& m, const FpScalar& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
      r.terms_.push_back({monomial_mul(t.m, m), fp_mul(t.c, c)});
    return r;
  }

  Polynomial scale(const FpScalar& c) const {
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m, fp_mul(t.c, c)});
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_context(a.ctx_, b.ctx_);
    const Polynomial& outer = a.terms_.size() <= b.terms_.size() ? a : b;
    const Polynomial& inner = a.terms_.size() <= b.terms_.size() ? b : a;
    Polynomial r(a.ctx_);
    for (const Term& t : outer.terms_) r = r + inner.times_term(t.m, t.c);
    return r;
  }

  Polynomial pow(std::uint64_t k) const {
    Polynomial r = constant(ctx_, 1);
    Polynomial base(*this);
    while (k > 0) {
      if (k & 1) r = r * base;
      base = (k >>= 1) > 0 ? base * base : base;
    }
    return r;
  }

  // Canonical rendering in descending term order; round-trips through the
  // parser.  Examples: "x^2 + 6*y", "3*x*y^2 + 1", "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k > 0) out += " + ";
      out += term_str(terms_[k]);
    }
    return out;
  }

 private:
  std::string term_str(const Term& t) const {
    std::string mono;
    for (std::size_t i = 0; i < ctx_->nvars(); ++i) {
      if (t.m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->names()[i];
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) return std::to_string(t.c.value);
    if (t.c.value == 1) return mono;
    return std::to_string(t.c.value) + "*" + mono;
  }

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

// Frobenius power: c*x^a -> c*x^(a*p^e).  Coefficients pass through
// unchanged because c^(p^e) = c for every c in F_p.
inline Polynomial frobenius_power(const Polynomial& f, std::uint32_t e) {
  std::int64_t q = checked_pow(f.context()->p(), e);
  std::vector<Term> ts;
  ts.reserve(f.terms().size());
  for (const Term& t : f.terms())
    ts.push_back({monomial_pow_scale(t.m, static_cast<std::uint64_t>(q)), t.c});
  return Polynomial::from_terms(f.context(), std::move(ts));
}

// Base-p^e decomposition f = sum_mu g_mu^(p^e) * x^mu with residues
// mu in [0, p^e)^n.  Each term c*x^a contributes c*x^(a div p^e) to
// g_(a mod p^e); F_p coefficients are (p^e)-th powers of themselves.
inline std::map<Monomial, Polynomial> pe_decompose(const Polynomial& f,
                                                   std::uint32_t e) {
  std::int64_t q64 = checked_pow(f.context()->p(), e);
  std::uint32_t q = static_cast<std::uint32_t>(q64);
  if (q64 >= static_cast<std::int64_t>(kMaxExponent))
    throw ResourceCapError("p^e exceeds the exponent range");
  std::map<Monomial, std::vector<Term>> buckets;
  for (const Term& t : f.terms()) {
    Monomial quot(t.m.n), rem(t.m.n);
    for (std::size_t i = 0; i < t.m.n; ++i) {
      quot.e[i] = t.m.e[i] / q;
      rem.e[i] = t.m.e[i] % q;
    }
    buckets[rem].push_back({quot, t.c});
  }
  std::map<Monomial, Polynomial> out;
  for (auto& [mu, ts] : buckets)
    out.emplace(mu, Polynomial::from_terms(f.context(), std::move(ts)));
  return out;
}

}  // namespace fpinv

#endif  // FPINV_POLYNOMIAL_HPP
