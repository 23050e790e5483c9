#pragma once

#include <Eigen/Core>

#include "carlab/quadratic_system.hpp"
#include "carlab/trajectory.hpp"

namespace carlab {

/// Settings for the high-accuracy reference solver (adaptive Dormand-Prince
/// 5(4) with dense output). Defaults keep the reference error several orders
/// below any truncation error measured against it.
struct IntegratorConfig {
    double rel_tol = 1e-12;       // must lie in (0, 1e-3)
    double abs_tol = 1e-14;       // must be > 0
    double max_step = 0.0;        // 0: no cap
    bool dense_output = true;
    double output_stride = 0.0;   // 0: record at the steps actually taken
};

/// Integrates du/dt = rhs(u) from u(0) = u0 to t_end. Records either the
/// accepted steps or a fixed stride grid (dense-output evaluation).
/// Throws DivergenceError on non-finite states and an ErrorCode::stiffness
/// error when step control stops making progress.
[[nodiscard]] Trajectory integrate_reference(const QuadraticSystem& sys, const Eigen::VectorXd& u0,
                                             double t_end, const IntegratorConfig& cfg = {});

/// Propagator u(0) -> u(tau); dense-output evaluation at exactly tau.
[[nodiscard]] Eigen::VectorXd flow_map(const QuadraticSystem& sys, const Eigen::VectorXd& u0,
                                       double tau, const IntegratorConfig& cfg = {});

}  // namespace carlab
