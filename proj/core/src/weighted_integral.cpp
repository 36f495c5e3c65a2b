#include "trapcorr/model.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "trapcorr/error.hpp"

namespace trapcorr {
namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

// Sums f over [lo, hi] with the 20-point Gauss-Legendre rule.
template <class F> Complex gauss_panel(F &&f, double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    const auto &x = Rule::abscissa();
    const auto &w = Rule::weights();
    Complex sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
            sum += w[i] * f(mid);
            continue;
        }
        sum += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
    }
    return half * sum;
}

// integral_0^inf delta(eps) exp(-(eta + i t) eps) d eps
Complex damped_integral(const std::function<double(double)> &delta, double t,
                        double eta) {
    const Complex s{eta, t};
    const double half_period = std::numbers::pi / t;

    // [0, a] with eps = u^2 so a sqrt(eps) branch point at 0 becomes smooth.
    const double a = half_period;
    const double u_max = std::sqrt(a);
    const int head_panels = std::max(8, static_cast<int>(std::ceil(u_max / 0.5)));
    auto head = [&](double u) {
        const double eps = u * u;
        return 2.0 * u * delta(eps) * std::exp(-s * eps);
    };
    Complex sum = 0.0;
    for (int j = 0; j < head_panels; ++j)
        sum += gauss_panel(head, u_max * j / head_panels,
                           u_max * (j + 1) / head_panels);

    // Half-period panels until exp(-eta eps) drops below ~1e-18.
    auto tail = [&](double eps) { return delta(eps) * std::exp(-s * eps); };
    const double stop = a + 41.5 / eta;
    const auto panels = static_cast<long>(std::ceil((stop - a) / half_period));
    for (long j = 0; j < panels; ++j) {
        const double lo = a + half_period * static_cast<double>(j);
        sum += gauss_panel(tail, lo, lo + half_period);
    }
    return sum;
}

} // namespace

Complex weighted_integral(const std::function<double(double)> &delta, double t,
                          const WeightedIntegralOptions &options) {
    if (!(t >= 0.0))
        throw DomainError("weighted_integral: time must be non-negative");
    if (t == 0.0)
        return 0.0;
    if (options.max_levels < 3)
        throw ArgumentError("weighted_integral: need at least 3 levels");

    const Complex prefactor = Complex{0.0, t} / std::numbers::pi;
    std::vector<double> etas;
    std::vector<Complex> tableau; // Neville diagonal, newest first
    Complex previous = 0.0;
    double last_change = 0.0;
    double eta = options.initial_damping_ratio * t;
    for (int level = 0; level < options.max_levels; ++level, eta *= 0.5) {
        etas.push_back(eta);
        const Complex value = prefactor * damped_integral(delta, t, eta);
        // Neville: p_{j,m} = ((0 - eta_{j-m}) p_{j,m-1} - (0 - eta_j) p_{j-1,m-1})
        //                    / (eta_j - eta_{j-m})
        std::vector<Complex> next{value};
        const std::size_t j = etas.size() - 1;
        for (std::size_t m = 1; m <= j; ++m) {
            const double ej = etas[j];
            const double ejm = etas[j - m];
            next.push_back((-ejm * next[m - 1] + ej * tableau[m - 1]) /
                           (ej - ejm));
        }
        tableau = std::move(next);
        const Complex current = tableau.back();
        if (level >= 2) {
            last_change = std::abs(current - previous);
            if (last_change < options.tolerance)
                return current;
        }
        previous = current;
    }
    std::ostringstream msg;
    msg << "weighted_integral: damping extrapolation did not converge at t="
        << t << " after " << options.max_levels
        << " levels (last change " << last_change << ", smallest eta " << eta * 2
        << ")";
    throw ConvergenceError(msg.str());
}

} // namespace trapcorr
