#pragma once

namespace uqd {

/// Digamma psi(x) for x > 0. The argument is raised with
/// psi(x) = psi(x + 1) - 1/x until x >= 6, then the asymptotic series
/// ln x - 1/(2x) - sum B_2n / (2n x^2n) is summed through x^-14.
double digamma(double x);

}  // namespace uqd
