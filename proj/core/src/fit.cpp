#include "trapcorr/analysis.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "trapcorr/error.hpp"

namespace trapcorr {
namespace {

// Real residual vector: (Re, Im) of model - data per segment.
class Residuals {
  public:
    Residuals(const SegmentAverage &data, const PhaseShiftModel &model)
        : data_(data), model_(model) {}

    [[nodiscard]] bool admissible(const Eigen::VectorXd &p) const {
        return model_.admissible({p.data(), static_cast<std::size_t>(p.size())});
    }

    [[nodiscard]] Eigen::VectorXd operator()(const Eigen::VectorXd &p) const {
        const auto m = model_segment_average(
            model_, {p.data(), static_cast<std::size_t>(p.size())}, data_);
        const auto n = static_cast<Eigen::Index>(m.size());
        Eigen::VectorXd r(2 * n);
        for (Eigen::Index i = 0; i < n; ++i) {
            const Complex d = m[static_cast<std::size_t>(i)] -
                              data_.averages[static_cast<std::size_t>(i)];
            r(2 * i) = d.real();
            r(2 * i + 1) = d.imag();
        }
        return r;
    }

    [[nodiscard]] Eigen::MatrixXd jacobian(const Eigen::VectorXd &p) const {
        Eigen::MatrixXd j(2 * static_cast<Eigen::Index>(data_.n_segments),
                          p.size());
        for (Eigen::Index k = 0; k < p.size(); ++k) {
            const double h = 1e-6 * std::max(std::abs(p(k)), 1e-2);
            Eigen::VectorXd up = p;
            Eigen::VectorXd down = p;
            up(k) += h;
            down(k) -= h;
            j.col(k) = ((*this)(up) - (*this)(down)) / (2.0 * h);
        }
        return j;
    }

    [[nodiscard]] double rms(const Eigen::VectorXd &r) const {
        return std::sqrt(r.squaredNorm() / static_cast<double>(data_.n_segments));
    }

  private:
    const SegmentAverage &data_;
    const PhaseShiftModel &model_;
};

} // namespace

FitResult fit_potential(const SegmentAverage &data, const PhaseShiftModel &model,
                        std::span<const double> initial_guess,
                        const FitOptions &options) {
    const std::size_t n_params = model.num_params();
    if (data.n_segments < 2 * n_params || data.averages.size() != data.n_segments)
        throw ArgumentError("fit_potential: " + std::to_string(data.n_segments) +
                            " segments cannot constrain " +
                            std::to_string(n_params) + " parameter(s); need at "
                            "least " +
                            std::to_string(2 * n_params));
    if (!model.admissible(initial_guess))
        throw ArgumentError("fit_potential: initial guess is inadmissible");

    const Residuals residuals(data, model);
    Eigen::VectorXd p = Eigen::Map<const Eigen::VectorXd>(
        initial_guess.data(), static_cast<Eigen::Index>(initial_guess.size()));
    Eigen::VectorXd r = residuals(p);
    double cost = 0.5 * r.squaredNorm();
    // Exactly representable data is matched to rounding; stop there.
    const double cost_floor =
        1e-28 * std::max(1.0, static_cast<double>(data.n_segments));

    FitResult result;
    result.residual_history.push_back(residuals.rms(r));

    Eigen::MatrixXd jac = residuals.jacobian(p);
    double lambda = 1e-3;
    bool converged = cost <= cost_floor;
    int iteration = 0;
    while (!converged && iteration < options.max_iterations) {
        const Eigen::MatrixXd jtj = jac.transpose() * jac;
        const Eigen::VectorXd gradient = jac.transpose() * r;

        bool accepted = false;
        while (!accepted && lambda < 1e16) {
            Eigen::MatrixXd a = jtj;
            a.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
            const Eigen::VectorXd step = a.ldlt().solve(-gradient);
            const Eigen::VectorXd trial = p + step;
            if (!residuals.admissible(trial) || !step.allFinite()) {
                lambda *= 4.0;
                continue;
            }
            const Eigen::VectorXd r_trial = residuals(trial);
            const double cost_trial = 0.5 * r_trial.squaredNorm();
            if (!(cost_trial < cost)) {
                lambda *= 4.0;
                continue;
            }
            accepted = true;
            ++iteration;
            const double rel_step = step.norm() / (p.norm() + 1e-12);
            const double rel_cost = (cost - cost_trial) / cost;
            p = trial;
            r = r_trial;
            cost = cost_trial;
            lambda = std::max(lambda / 3.0, 1e-12);
            result.residual_history.push_back(residuals.rms(r));
            jac = residuals.jacobian(p);
            converged = cost <= cost_floor ||
                        (rel_step < options.step_tolerance &&
                         rel_cost < options.residual_tolerance);
        }
        // No descent direction left at machine precision: a stationary point.
        if (!accepted)
            converged = true;
    }

    const Eigen::VectorXd gradient = jac.transpose() * r;
    result.params.assign(p.data(), p.data() + p.size());
    result.residual_norm = residuals.rms(r);
    result.iterations = iteration;
    result.gradient_norm = gradient.cwiseAbs().maxCoeff();
    const double gradient_scale = 1.0 + jac.norm() * r.norm();
    result.converged = converged && (cost <= cost_floor ||
                                     result.gradient_norm <=
                                         options.gradient_tolerance * gradient_scale);
    if (!result.converged) {
        std::ostringstream msg;
        msg << "fit_potential: no convergence after " << iteration
            << " iterations (rms residual " << result.residual_norm
            << ", gradient " << result.gradient_norm << ")";
        throw FitConvergenceError(msg.str(), result.params);
    }
    return result;
}

} // namespace trapcorr
