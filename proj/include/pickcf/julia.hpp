// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_JULIA_HPP
#define PICKCF_JULIA_HPP

#include "pickcf/ratfun.hpp"
#include "pickcf/rational.hpp"

namespace pickcf {

/// g(z) = -1/(f(z) - f(x)) + 1/(f'(x)(z - x)) for f analytic at x with
/// f'(x) > 0. The two simple poles at x cancel exactly, so g is again
/// analytic at x (verified after canonicalization). NotReducible for
/// constant f or f'(x) <= 0; PoleAtNode when den(x) = 0.
RationalFunction reduce_rational(const RationalFunction& f, const Rat& x);

/// Inverse transform 1/(f - a0) = 1/(a1(z-x)) - g. Requires a1 > 0
/// (InvalidDerivative). The result is non-constant of degree deg(g) + 1.
RationalFunction augment_rational(const RationalFunction& g, const Rat& x, const Rat& a0,
                                  const Rat& a1);

/// Whether y g(x + iy) -> 0 as y -> 0+, which for rational g holds exactly
/// when g has no pole at x. Decides when an augmentation by (a0, a1)
/// attains f'(x) = a1 rather than f'(x) < a1.
bool equality_condition(const RationalFunction& g, const Rat& x);

}  // namespace pickcf

#endif
