#include "trapcorr/erfc.hpp"

#include <cfloat>
#include <cmath>

namespace trapcorr {
namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695; // 1/sqrt(pi)
constexpr double kLogMax = 709.78271289338397;        // log(DBL_MAX)

/// Magnitude exp(log_mag), phase `phase`, clamped to DBL_MAX in modulus.
Complex polar_saturated(double log_mag, double phase) {
    const double mag = log_mag >= kLogMax ? DBL_MAX : std::exp(log_mag);
    return {mag * std::cos(phase), mag * std::sin(phase)};
}

/// exp(z^2) * w, saturating instead of overflowing.
Complex scale_by_exp_z2(Complex z, Complex w) {
    if (w == Complex{0.0, 0.0})
        return w;
    const double re = z.real() * z.real() - z.imag() * z.imag();
    const double im = 2.0 * z.real() * z.imag();
    return polar_saturated(re + std::log(std::abs(w)), im + std::arg(w));
}

Complex saturate(Complex w) {
    if (std::isfinite(w.real()) && std::isfinite(w.imag()))
        return w;
    return polar_saturated(kLogMax, std::arg(w));
}

// Maclaurin series of erf. Relative cancellation grows like exp(2 Re(z)^2),
// so it is only used where that factor is small or |z| is modest.
Complex erf_series(Complex z) {
    const Complex z2 = z * z;
    Complex term = z;
    Complex sum = z;
    const double n_min = std::norm(z);
    for (int n = 1; n < 2000; ++n) {
        term *= -z2 / static_cast<double>(n);
        const Complex contrib = term / static_cast<double>(2 * n + 1);
        sum += contrib;
        if (n > n_min && std::abs(contrib) <= 1e-17 * std::abs(sum))
            break;
    }
    return 2.0 * kInvSqrtPi * sum;
}

// Continued fraction for exp(z^2) erfc(z), Re z >= 0:
//   1/sqrt(pi) / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
// evaluated with the modified Lentz algorithm.
Complex erfcx_continued_fraction(Complex z) {
    constexpr double tiny = 1e-300;
    Complex f = z;
    if (std::abs(f) < tiny)
        f = tiny;
    Complex c = f;
    Complex d = 0.0;
    for (int n = 1; n < 20000; ++n) {
        const double a = 0.5 * n;
        d = z + a * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = z + a / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const Complex delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16)
            break;
    }
    return kInvSqrtPi / f;
}

// 1 - erf(z) cancels once erfc(z) is small, i.e. for large Re z; the
// continued fraction converges slowly near the origin and the imaginary axis.
bool use_series(Complex z) {
    const double r = std::abs(z);
    const double x = std::abs(z.real());
    return (r < 3.0 && x < 1.75) || r < 1.5 || (x < 1.4 && r < 12.0);
}

// exp(z^2) erfc(z) for Re z >= 0.
Complex erfcx_right(Complex z) {
    if (use_series(z))
        return scale_by_exp_z2(z, 1.0 - erf_series(z));
    return erfcx_continued_fraction(z);
}

// erfc(z) for Re z >= 0.
Complex erfc_right(Complex z) {
    if (use_series(z))
        return 1.0 - erf_series(z);
    const Complex w = erfcx_continued_fraction(z);
    // erfc = exp(-z^2) w
    const double re = z.imag() * z.imag() - z.real() * z.real();
    const double im = -2.0 * z.real() * z.imag();
    return polar_saturated(re + std::log(std::abs(w)), im + std::arg(w));
}

} // namespace

Complex erfc(Complex z) {
    if (z.real() >= 0.0)
        return saturate(erfc_right(z));
    return saturate(2.0 - erfc_right(-z));
}

Complex erfcx(Complex z) {
    if (z.real() >= 0.0)
        return saturate(erfcx_right(z));
    // exp(z^2) erfc(z) = 2 exp(z^2) - exp(z^2) erfc(-z)
    return saturate(scale_by_exp_z2(z, 2.0) - erfcx_right(-z));
}

} // namespace trapcorr
