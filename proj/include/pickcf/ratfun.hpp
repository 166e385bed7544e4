// SPDX-License-Identifier: Apache-2.0
#ifndef PICKCF_RATFUN_HPP
#define PICKCF_RATFUN_HPP

#include <complex>
#include <optional>
#include <vector>

#include "pickcf/linalg.hpp"
#include "pickcf/rational.hpp"
#include "pickcf/series.hpp"

namespace pickcf {

/// Dense univariate polynomial over exact rationals, ascending coefficients.
/// The zero polynomial has degree -1 and an empty coefficient vector.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Rat> coeffs);  // trailing zeros are stripped
  static Polynomial constant(const Rat& c);
  /// The monomial z - x.
  static Polynomial linear_root(const Rat& x);

  int degree() const noexcept { return int(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  Rat coeff(int k) const;  // 0 beyond the degree
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  std::complex<double> eval(const std::complex<double>& z) const;
  Polynomial derivative() const;
  /// Coefficients of p(x + t) as a polynomial in t (exact Taylor shift).
  Polynomial shifted(const Rat& x) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial&, const Polynomial&);
  friend Polynomial operator-(const Polynomial&, const Polynomial&);
  friend Polynomial operator*(const Polynomial&, const Polynomial&);
  friend Polynomial operator*(const Rat&, const Polynomial&);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact Euclidean division: returns {quotient, remainder}.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(Polynomial a, Polynomial b);  // monic

 private:
  std::vector<Rat> coeffs_;
};

struct PickCertificate {
  bool pick = false;
  /// For NotPick: a sampled point of the upper half-plane where Im f < 0,
  /// when the falsifier located one.
  std::optional<std::complex<double>> witness;
  Inertia bezoutian_inertia;  // certificate of the PSD test (dim 0 for constants)
};

struct FalsifierConfig {
  double center = 0.0;  // real point the mesh is anchored at
  double r_min = 1e-6;
  double r_max = 1e3;
  int n_r = 64;
  int n_theta = 64;
  int refine_levels = 3;
  bool parallel = true;
};

/// Real rational function in canonical form: numerator and denominator
/// coprime, denominator monic. Equality of values is then equality of
/// coefficient vectors.
class RationalFunction {
 public:
  RationalFunction();  // the zero function
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction constant(const Rat& c);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_, den_;
};

/// Horner evaluation in doubles. NearPole when |den(z)| is negligible
/// against the evaluation's own magnitude bound sum |den_i| |z|^i.
std::complex<double> eval(const RationalFunction& f, const std::complex<double>& z);

/// Exact Taylor coefficients about x up to order n; PoleAtCenter when
/// den(x) = 0 (use laurent_at).
PowerSeries taylor_at(const RationalFunction& f, const Rat& x, int order);

struct LaurentExpansion {
  Rat a_minus1;       // residue at x; 0 when f is analytic there
  PowerSeries tail;   // expansion of the regular part
};

/// Expansion at a point that is at most a simple pole; HigherOrderPole
/// otherwise.
LaurentExpansion laurent_at(const RationalFunction& f, const Rat& x, int order);

/// max(deg num, deg den) in lowest terms.
int degree(const RationalFunction& f);

/// Bezoutian matrix B of (num, den): sum B_ij z^i w^j =
/// (num(z) den(w) - num(w) den(z)) / (z - w), dimension max-degree. The sign
/// convention makes f(z) = z produce B = [1].
RatMatrix bezoutian(const RationalFunction& f);

/// Exact Pick-class membership: constants are Pick; otherwise f is Pick iff
/// deg num <= deg den + 1 and the Bezoutian is PSD (exact inertia test).
/// A NotPick verdict is decorated with a floating-point witness found by
/// the grid falsifier when possible.
PickCertificate is_pick(const RationalFunction& f, const FalsifierConfig& cfg = {});

/// Adaptive mesh search for a point of the upper half-plane with
/// Im f < 0. Geometric r x uniform theta base grid, refined around the
/// smallest observed imaginary parts. Nullopt when no such point was found.
std::optional<std::complex<double>> find_nonpick_witness(const RationalFunction& f,
                                                         const FalsifierConfig& cfg = {});

/// Serial reference for the falsifier's base-mesh sweep (kept for testing
/// the parallel kernel).
std::optional<std::complex<double>> find_nonpick_witness_serial(const RationalFunction& f,
                                                                FalsifierConfig cfg = {});

}  // namespace pickcf

#endif
