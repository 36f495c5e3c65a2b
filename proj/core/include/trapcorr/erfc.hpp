#pragma once

#include "trapcorr/series.hpp"

namespace trapcorr {

/// Complementary error function of a complex argument.
///
/// Relative accuracy is better than 1e-10 for |z| <= 10. Where the result
/// overflows a double, each component saturates to +-DBL_MAX instead of
/// producing inf or NaN.
[[nodiscard]] Complex erfc(Complex z);

/// Scaled complementary error function exp(z^2) erfc(z).
///
/// Stays O(1/|z|) for large |z| in the right half plane, where erfc alone
/// underflows. Saturates like erfc() when exp(z^2) overflows for Re z < 0.
[[nodiscard]] Complex erfcx(Complex z);

} // namespace trapcorr
