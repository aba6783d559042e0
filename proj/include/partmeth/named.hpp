#pragma once

#include <utility>
#include <vector>

#include "partmeth/series.hpp"

namespace partmeth {

enum class Family { Cosecant, Secant, ReciprocalLog };
const char* family_name(Family f);

enum class Route { Operator, Recurrence };

// Inner coefficients p_0..p_kmax and outer q_0..q_kmax binding each family to the series engine.
SeriesSpec family_spec(Family f, int kmax);

// c_k, d_k or A_k for k = 0..kmax.
std::vector<Rational> family_table(Family f, int kmax, Route route = Route::Operator);
Rational cosecant(int k);
Rational secant(int k);
Rational reciprocal_log(int k);

// A_k = (1/k!) sum_{j=1}^{k} S_k^(j) / (j+1).
Rational reciprocal_log_stirling(int k);
// Bernoulli route for c_k: (-1)^{k+1} (2^{2k} - 2) B_{2k} / (2k)!.
Rational cosecant_from_bernoulli(int k);
Rational bernoulli(int n);

// The coefficient of y^k in the rho-th power of each family's generating series, as a polynomial in rho.
// OverNumbers uses the family's own numbers; OverInner uses the reciprocal inner coefficients.
enum class GeneralizedRoute { OverNumbers, OverInner };
std::vector<Polynomial> generalized_table(Family f, int kmax, GeneralizedRoute route = GeneralizedRoute::OverNumbers,
                                          const std::string& var = "r");
Polynomial generalized(Family f, int k, GeneralizedRoute route = GeneralizedRoute::OverNumbers,
                       const std::string& var = "r");

// h_k(nu) as rational functions in "nu", k = 0..kmax.
std::vector<RationalFunction> bessel_h_table(int kmax, Route route = Route::Recurrence, const std::string& var = "nu");
RationalFunction bessel_h(int k);
// Exact values at a rational point, by the recurrence.
std::vector<Rational> bessel_h_at(const Rational& nu, int kmax);
std::vector<Complex> bessel_h_at(Complex nu, int kmax);
// Inner coefficients (-1)^i s^i / ((nu+1)_i i!) for the operator route; s = 1 gives h_k, s = 1/4 gives h_k / 4^k.
std::vector<RingValue> bessel_inner(int kmax, const Rational& scale, const std::string& var = "nu");

// +-2 sqrt(h_k / h_{k+1}), principal branch first.
std::pair<Complex, Complex> bessel_zero_estimate(const Rational& nu, int k);
std::pair<Complex, Complex> bessel_zero_estimate(Complex nu, int k);

enum class SlowSeries { EulerGamma, Ln2 };
double slow_series_partial(SlowSeries which, int n);

}  // namespace partmeth
