// SPDX-License-Identifier: Apache-2.0
#include "pickcf/julia.hpp"

#include <stdexcept>

#include "pickcf/errors.hpp"

namespace pickcf {

RationalFunction reduce_rational(const RationalFunction& f, const Rat& x) {
  if (f.is_constant()) fail(Errc::NotReducible, "constant function has no reduction");
  const Rat den_x = f.den().eval(x);
  if (sgn(den_x) == 0) fail(Errc::PoleAtNode, "function has a pole at the node");
  const Rat fx = f.num().eval(x) / den_x;
  const Rat dfx =
      (f.num().derivative().eval(x) * den_x - f.num().eval(x) * f.den().derivative().eval(x)) /
      (den_x * den_x);
  if (sgn(dfx) <= 0) fail(Errc::NotReducible, "derivative at the node is not positive");
  // g = -1/(f - f(x)) + 1/(f'(x)(z - x)); the simple poles at x cancel in
  // exact arithmetic, removed here by gcd canonicalization.
  const Polynomial lin = Polynomial::linear_root(x);
  const Polynomial shifted_num = f.num() - fx * f.den();  // f - f(x) = shifted_num / den
  const RationalFunction pole_part(f.den() * Polynomial::constant(-1), shifted_num);
  const RationalFunction correction(Polynomial::constant(1), dfx * lin);
  const RationalFunction g = pole_part + correction;
  if (sgn(g.den().eval(x)) == 0)
    throw std::logic_error("reduction left a pole at the node");  // cannot happen for f'(x) > 0
  return g;
}

RationalFunction augment_rational(const RationalFunction& g, const Rat& x, const Rat& a0,
                                  const Rat& a1) {
  if (sgn(a1) <= 0) fail(Errc::InvalidDerivative, "augmentation requires a1 > 0");
  // 1/(f - a0) = 1/(a1(z-x)) - g  =>  f = a0 + a1(z-x) gden / (gden - a1(z-x) gnum).
  const Polynomial lin = Polynomial::linear_root(x);
  const Polynomial scaled = a1 * lin;
  RationalFunction f(Polynomial::constant(a0) * (g.den() - scaled * g.num()) + scaled * g.den(),
                     g.den() - scaled * g.num());
  return f;
}

bool equality_condition(const RationalFunction& g, const Rat& x) {
  // y g(x + iy) -> 0 iff g is analytic at x; any pole there leaves a
  // nonzero (simple pole) or unbounded (higher pole) limit.
  return sgn(g.den().eval(x)) != 0;
}

}  // namespace pickcf
