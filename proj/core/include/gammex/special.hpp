#ifndef GAMMEX_SPECIAL_HPP
#define GAMMEX_SPECIAL_HPP

#include <complex>

namespace gammex {

/// Kummer confluent hypergeometric function 1F1(alpha, beta; z).
///
/// Power series with term-ratio stopping for z <= 30, large-z asymptotic
/// series evaluated in log space beyond that. Relative error <= 1e-12 in the
/// series regime. beta equal to a nonpositive integer is a domain error.
double kummer_1f1(double alpha, double beta, double z);

/// log(1F1(alpha, beta; z)) for alpha, beta, z > 0 (all series terms positive,
/// so the value never cancels). Safe where the plain value would overflow.
double log_kummer_1f1(double alpha, double beta, double z);

/// Complex dilogarithm Li_2(z), principal branch (cut along [1, inf)).
std::complex<double> dilog(std::complex<double> z);

/// Upper incomplete gamma Gamma(s, z) for complex s, z with |z| reasonably
/// large (modified Lentz continued fraction). Used by the oscillatory
/// Fourier-inversion tail.
std::complex<double> upper_incomplete_gamma(std::complex<double> s, std::complex<double> z);

double normal_pdf(double x);

/// Gamma(shape, rate) density at x (0 for x < 0; x == 0 handled by limit).
double gamma_pdf(double x, double shape, double rate);
double log_gamma_pdf(double x, double shape, double rate);

}  // namespace gammex

#endif
