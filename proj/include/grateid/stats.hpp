#pragma once

namespace grateid {

/// Standard normal density.
double norm_pdf(double z);

/// Standard normal CDF, computed from erfc for full-range accuracy.
double norm_cdf(double z);

/// Inverse standard normal CDF (Acklam's rational approximation refined by
/// one Halley step); |error| < 1e-13 over (0, 1).
double norm_quantile(double p);

/// Two-sided z value for a central probability level, e.g. 0.95 -> 1.95996.
double z_for_level(double level);

} // namespace grateid
