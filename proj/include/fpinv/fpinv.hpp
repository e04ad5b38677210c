#ifndef FPINV_FPINV_HPP
#define FPINV_FPINV_HPP

// Umbrella header: exact computation of Frobenius-theoretic invariants of
// ideals in F_p[x_1..x_n] — Frobenius roots, nu-invariants, test ideals,
// F-jumping numbers, approximating-polynomial roots, and Bernstein-Sato
// roots as p-adic rationals.

#include "fpinv/bsroots.hpp"
#include "fpinv/common.hpp"
#include "fpinv/context.hpp"
#include "fpinv/digits.hpp"
#include "fpinv/fp.hpp"
#include "fpinv/frobroot.hpp"
#include "fpinv/ideal.hpp"
#include "fpinv/invariants.hpp"
#include "fpinv/jobrun.hpp"
#include "fpinv/monomial.hpp"
#include "fpinv/monomial_ideal.hpp"
#include "fpinv/padic.hpp"
#include "fpinv/parse.hpp"
#include "fpinv/polynomial.hpp"
#include "fpinv/rational.hpp"
#include "fpinv/version.hpp"

#endif  // FPINV_FPINV_HPP
