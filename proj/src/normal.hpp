#pragma once

namespace gcmp {

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal CDF, absolute error well below 1e-12 over the full range.
double norm_cdf(double x);

/// Upper tail 1 - Phi(x), computed via erfc so small tails keep relative accuracy.
double norm_sf(double x);

} // namespace gcmp
