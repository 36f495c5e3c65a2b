#include "trapcorr/model.hpp"

#include <cmath>
#include <string>

#include "trapcorr/erfc.hpp"
#include "trapcorr/error.hpp"

namespace trapcorr {

PhysicalParams::PhysicalParams(double v0, double mass, double box_length,
                               std::int64_t n_cut)
    : v0_(v0), mass_(mass), box_length_(box_length), n_cut_(n_cut) {
    if (!std::isfinite(v0))
        throw ArgumentError("v0 must be finite");
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw ArgumentError("mass must be positive, got " +
                            std::to_string(mass));
    if (!(box_length > 0.0) || !std::isfinite(box_length))
        throw ArgumentError("box_length must be positive, got " +
                            std::to_string(box_length));
    if (n_cut < 0)
        throw ArgumentError("n_cut must be non-negative, got " +
                            std::to_string(n_cut));
}

PhysicalParams PhysicalParams::with_v0(double v0) const {
    return {v0, mass_, box_length_, n_cut_};
}

PhysicalParams PhysicalParams::with_box_length(double box_length) const {
    return {v0_, mass_, box_length, n_cut_};
}

PhysicalParams PhysicalParams::with_n_cut(std::int64_t n_cut) const {
    return {v0_, mass_, box_length_, n_cut};
}

double contact_phase_shift(double eps, double v0, double reduced_mass) {
    if (!(eps > 0.0))
        throw DomainError("phase_shift: energy must be positive, got " +
                          std::to_string(eps));
    if (v0 == 0.0)
        throw DegenerateCouplingError("phase_shift: zero coupling");
    // tan(delta) = -mu v0 / sqrt(2 mu eps); atan picks the branch that
    // vanishes at high energy.
    return std::atan(-reduced_mass * v0 / std::sqrt(2.0 * reduced_mass * eps));
}

double phase_shift(double eps, const PhysicalParams &params) {
    return contact_phase_shift(eps, params.v0(), params.reduced_mass());
}

Complex delta_c_infinite(double t, double v0, double reduced_mass) {
    if (!(t >= 0.0))
        throw DomainError("delta_c_infinite: time must be non-negative, got " +
                          std::to_string(t));
    // sqrt(i t / 2mu) = sqrt(t / 2mu) exp(i pi/4)
    const double r = reduced_mass * v0 * std::sqrt(t / (2.0 * reduced_mass));
    const Complex z = r * Complex{M_SQRT1_2, M_SQRT1_2};
    // erfc(z) exp(z^2) with z^2 = (mu v0)^2 i t / 2mu
    return 0.5 * erfcx(z) - 0.5;
}

Complex delta_c_infinite(double t, const PhysicalParams &params) {
    return delta_c_infinite(t, params.v0(), params.reduced_mass());
}

} // namespace trapcorr
