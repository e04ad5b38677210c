#ifndef FPINV_BSROOTS_HPP
#define FPINV_BSROOTS_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "fpinv/common.hpp"
#include "fpinv/digits.hpp"
#include "fpinv/ideal.hpp"
#include "fpinv/invariants.hpp"
#include "fpinv/padic.hpp"
#include "fpinv/rational.hpp"

namespace fpinv {

// Residues mod p^e of the nu-invariants at level e: exactly the truncations
// mod p^e attained by roots of the level-e approximating polynomial, i.e. the
// level-e evidence set for Bernstein-Sato root candidates.
struct TruncationSet {
  std::uint32_t level = 0;
  std::int64_t pe = 0;
  std::vector<std::int64_t> valid;  // sorted distinct residues in [0, p^e)
};

inline TruncationSet valid_truncations(const Ideal& a, std::uint32_t e,
                                       const Deadline* dl = nullptr) {
  NuSet nu = nu_invariants(a, e, dl);
  TruncationSet out;
  out.level = e;
  out.pe = nu.pe;
  out.valid = nu.residues();
  return out;
}

struct BSRoot {
  Rational value;      // the root, a negative p-adic rational
  DigitStream digits;  // digit expansion of the truncation limit
};

struct BSRootReport {
  std::uint32_t e_max = 0;
  std::uint32_t lookahead = 0;
  std::vector<BSRoot> roots;             // sorted descending by value
  std::vector<DigitVector> unresolved;   // level-e_max digit words left open
};

namespace detail {

inline bool sorted_contains(const std::vector<std::int64_t>& v,
                            std::int64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Keep only residues with an extension one level up; applied top-down this
// removes every digit word that dies before the horizon.
inline std::vector<std::int64_t> prune_level(
    const std::vector<std::int64_t>& cur,
    const std::vector<std::int64_t>& next, std::int64_t pe) {
  std::vector<std::int64_t> survivors;
  std::vector<std::int64_t> reachable;
  reachable.reserve(next.size());
  for (std::int64_t u : next) reachable.push_back(u % pe);
  std::sort(reachable.begin(), reachable.end());
  for (std::int64_t t : cur)
    if (sorted_contains(reachable, t)) survivors.push_back(t);
  return survivors;
}

}  // namespace detail

// Bernstein-Sato roots of a up to truncation level e_max.  The pipeline:
//   1. compute the valid truncation sets at levels 1..e_max+lookahead;
//   2. prune top-down so only digit words alive through the horizon remain;
//   3. for each surviving level-e_max word, scan eventually-periodic digit
//      patterns (preperiod k, period d, k + 2d <= e_max) in lexicographic
//      (k, d) order and adopt the first whose p-adic value reproduces a
//      surviving truncation at every computed level;
//   4. words with no certified pattern are reported as unresolved.
inline BSRootReport bernstein_sato_roots(const Ideal& a, std::uint32_t e_max,
                                         std::uint32_t lookahead = 1,
                                         const Deadline* dl = nullptr) {
  if (e_max < 2) throw PreconditionError("e_max must be at least 2");
  detail::require_nontrivial(a);
  const std::uint32_t p = a.context()->p();
  const std::uint32_t L = e_max + lookahead;

  std::vector<std::int64_t> pe(L + 1, 1);
  for (std::uint32_t e = 1; e <= L; ++e) pe[e] = checked_mul(pe[e - 1], p);

  std::vector<std::vector<std::int64_t>> valid(L + 1);
  for (std::uint32_t e = 1; e <= L; ++e)
    valid[e] = valid_truncations(a, e, dl).valid;

  // Top-down pruning.
  std::vector<std::vector<std::int64_t>> alive(L + 1);
  alive[L] = valid[L];
  for (std::uint32_t e = L - 1; e >= 1; --e)
    alive[e] = detail::prune_level(valid[e], alive[e + 1], pe[e]);

  BSRootReport out;
  out.e_max = e_max;
  out.lookahead = lookahead;

  for (std::int64_t t : alive[e_max]) {
    check_deadline(dl, "root resolution");
    DigitVector word =
        base_p_digits(static_cast<std::uint64_t>(t), PrimeModulus(p), e_max);
    bool resolved = false;
    for (std::uint32_t k = 0; !resolved && k + 2 <= e_max; ++k) {
      for (std::uint32_t d = 1; k + 2 * d <= e_max; ++d) {
        bool consistent = true;
        for (std::uint32_t i = k; i < e_max; ++i)
          if (word.digits[i] != word.digits[k + (i - k) % d]) {
            consistent = false;
            break;
          }
        if (!consistent) continue;
        std::vector<std::uint32_t> pre(word.digits.begin(),
                                       word.digits.begin() + k);
        std::vector<std::uint32_t> per(word.digits.begin() + k,
                                       word.digits.begin() + k + d);
        Rational alpha = rational_from_digits(pre, per, PrimeModulus(p));
        if (!(alpha < Rational(0))) continue;  // roots are negative rationals
        PadicRational pa(alpha, PrimeModulus(p));
        bool certified = true;
        for (std::uint32_t e = 1; e <= L && certified; ++e)
          certified = detail::sorted_contains(alive[e],
                                              truncation_value(pa, e));
        if (!certified) continue;
        out.roots.push_back(
            BSRoot{alpha, digits_of_rational(pa)});
        resolved = true;
        break;
      }
    }
    if (!resolved) out.unresolved.push_back(word);
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const BSRoot& x, const BSRoot& y) { return y.value < x.value; });
  return out;
}

// Cross-check: the fractional classes of the Bernstein-Sato roots must match
// those of the negated F-jumping numbers whose denominator is coprime to p.
inline bool verify_bs_vs_fjn(const Ideal& a, const BSRootReport& bs,
                             const std::vector<FJEntry>& fjn) {
  if (!bs.unresolved.empty())
    throw PreconditionError("cannot verify with unresolved data");
  const std::uint32_t p = a.context()->p();

  std::vector<Rational> left;
  for (const BSRoot& r : bs.roots)
    left.push_back(split_negative(r.value).gamma);

  std::vector<Rational> right;
  for (const FJEntry& entry : fjn) {
    if (entry.candidate.denominator() % p == 0) continue;
    right.push_back(split_negative(-entry.candidate).gamma);
  }

  auto canon = [](std::vector<Rational>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  canon(left);
  canon(right);
  return left == right;
}

}  // namespace fpinv

#endif  // FPINV_BSROOTS_HPP
