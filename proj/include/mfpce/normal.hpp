#pragma once

namespace mfpce {

// Standard normal CDF, Phi(z).
double normal_cdf(double z);

// Upper tail Phi(-z) = P[Z > z], accurate to full relative precision for
// large z (plain 1 - normal_cdf(z) saturates around z ~ 8).
double normal_sf(double z);

double normal_pdf(double z);

// Inverse standard normal CDF on (0, 1). Initial rational approximation
// polished with two Newton steps against the erfc-based CDF, giving
// near machine precision over the whole open interval.
double normal_quantile(double p);

}  // namespace mfpce
