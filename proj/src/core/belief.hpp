#pragma once

#include <vector>

#include "errors.hpp"
#include "grid.hpp"

namespace mts {

/// Probability mass over the grid, row-major. Operations that promise a
/// normalized result keep the total at 1 within 1e-9.
struct BeliefGrid {
    GridShape shape;
    std::vector<double> mass;

    BeliefGrid() = default;
    explicit BeliefGrid(GridShape s, double fill = 0.0)
        : shape(s), mass(std::size_t(s.cell_count()), fill) {}

    double at(int row, int col) const { return mass[std::size_t(row * shape.cols + col)]; }
    double& at(int row, int col) { return mass[std::size_t(row * shape.cols + col)]; }
    double at(Cell c) const { return at(c.row, c.col); }
    double& at(Cell c) { return at(c.row, c.col); }

    double total() const;
};

bool is_normalized(const BeliefGrid& belief, double tol = 1e-9);

/// Per-step (d_row, d_col) displacement of the conditionally deterministic
/// target; entry t-1 applies at step t.
struct GridStep {
    int d_row = 0;
    int d_col = 0;

    bool operator==(const GridStep&) const = default;
};

struct TargetMotionModel {
    std::vector<GridStep> displacements;
};

/// Binary detection sensor: the target in the observed cell is detected
/// with probability p_d, a target anywhere else is never detected.
struct SensorModel {
    double p_d = 1.0;
};

/// One component of the initial-belief Gaussian mixture; mean and
/// covariance are in cell units on the (row, col) axes.
struct GaussianComponent {
    double mean_row = 0.0;
    double mean_col = 0.0;
    double cov_rr = 1.0;
    double cov_rc = 0.0;
    double cov_cc = 1.0;
    double weight = 1.0;
};

/// Builds a normalized belief map by evaluating the mixture density at every
/// cell center. Weights are normalized implicitly by the final rescale.
/// Throws ValidationError for non-positive-definite covariances, non-positive
/// weights, an empty component list, or an all-underflow (off-grid) mixture.
BeliefGrid gaussian_mixture_belief(GridShape shape,
                                   const std::vector<GaussianComponent>& components);

/// Exactly uniform belief (1 / cell_count per cell).
BeliefGrid uniform_belief(GridShape shape);

/// Prediction phase: moves every cell's mass by the step-t displacement.
/// Mass pushed past an edge lands on the boundary cell along the offset
/// direction, so the total is conserved exactly. `step` is 1-based.
BeliefGrid predict(const BeliefGrid& belief, const TargetMotionModel& motion, int step);

struct NoDetectionUpdate {
    BeliefGrid posterior;
    double r = 1.0;           ///< probability this observation misses the target
    bool degenerate = false;  ///< r == 0: the target is certainly in the observed cell
};

/// Bayes update for a "no detection" observation at `observed`. The observed
/// cell keeps a (1 - p_d) share and the grid is rescaled by 1/r. When r is 0
/// no posterior exists; a uniform grid is returned with `degenerate` set and
/// the caller treats the target as found.
NoDetectionUpdate no_detection_update(const BeliefGrid& belief_hat, SensorModel sensor,
                                      Cell observed);

} // namespace mts
