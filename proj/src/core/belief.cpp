#include "belief.hpp"

#include <cmath>
#include <string>

namespace mts {

double BeliefGrid::total() const {
    double sum = 0.0;
    for (double m : mass) sum += m;
    return sum;
}

bool is_normalized(const BeliefGrid& belief, double tol) {
    for (double m : belief.mass)
        if (!(m >= 0.0)) return false;
    return std::abs(belief.total() - 1.0) <= tol;
}

BeliefGrid gaussian_mixture_belief(GridShape shape,
                                   const std::vector<GaussianComponent>& components) {
    if (!shape.valid())
        throw ValidationError("shape", "grid must be at least 2x2");
    if (components.empty())
        throw ValidationError("belief", "at least one mixture component required");

    BeliefGrid grid(shape);
    for (std::size_t k = 0; k < components.size(); ++k) {
        const GaussianComponent& c = components[k];
        const std::string field = "belief[" + std::to_string(k) + "]";
        if (!(c.weight > 0.0) || !std::isfinite(c.weight))
            throw ValidationError(field + ".weight", "weight must be positive");
        const double det = c.cov_rr * c.cov_cc - c.cov_rc * c.cov_rc;
        if (!(c.cov_rr > 0.0) || !(det > 0.0))
            throw ValidationError(field + ".cov", "covariance must be positive definite");

        // inverse of the 2x2 covariance
        const double inv_rr = c.cov_cc / det;
        const double inv_cc = c.cov_rr / det;
        const double inv_rc = -c.cov_rc / det;
        const double norm = c.weight / (2.0 * M_PI * std::sqrt(det));

        for (int r = 0; r < shape.rows; ++r) {
            for (int col = 0; col < shape.cols; ++col) {
                const double dr = double(r) - c.mean_row;
                const double dc = double(col) - c.mean_col;
                const double q = inv_rr * dr * dr + 2.0 * inv_rc * dr * dc + inv_cc * dc * dc;
                grid.at(r, col) += norm * std::exp(-0.5 * q);
            }
        }
    }

    const double total = grid.total();
    if (!(total > 0.0))
        throw ValidationError("belief", "mixture places no mass on the grid");
    for (double& m : grid.mass) m /= total;
    return grid;
}

BeliefGrid uniform_belief(GridShape shape) {
    if (!shape.valid())
        throw ValidationError("shape", "grid must be at least 2x2");
    return BeliefGrid(shape, 1.0 / double(shape.cell_count()));
}

BeliefGrid predict(const BeliefGrid& belief, const TargetMotionModel& motion, int step) {
    if (step < 1 || std::size_t(step) > motion.displacements.size())
        throw ValidationError("motion", "step " + std::to_string(step) +
                                            " outside the motion schedule");
    const GridStep d = motion.displacements[std::size_t(step - 1)];
    const GridShape shape = belief.shape;
    BeliefGrid out(shape);
    for (int r = 0; r < shape.rows; ++r) {
        for (int c = 0; c < shape.cols; ++c) {
            const Cell dst = clamp_to_grid({r + d.d_row, c + d.d_col}, shape);
            out.at(dst) += belief.at(r, c);
        }
    }
    return out;
}

NoDetectionUpdate no_detection_update(const BeliefGrid& belief_hat, SensorModel sensor,
                                      Cell observed) {
    if (!in_grid(observed, belief_hat.shape))
        throw ValidationError("observed", "cell outside the grid");

    NoDetectionUpdate result;
    const double pd = sensor.p_d;
    const double r = 1.0 - pd * belief_hat.at(observed);
    result.r = std::max(0.0, r);
    if (result.r <= 0.0) {
        result.degenerate = true;
        result.posterior = uniform_belief(belief_hat.shape);
        result.r = 0.0;
        return result;
    }

    result.posterior = belief_hat;
    result.posterior.at(observed) *= (1.0 - pd);
    const double scale = 1.0 / result.r;
    for (double& m : result.posterior.mass) m *= scale;
    return result;
}

} // namespace mts
