#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "carlab/carleman.hpp"
#include "carlab/quadratic_system.hpp"
#include "carlab/reference_integrator.hpp"
#include "carlab/state_analytics.hpp"

namespace carlab {

/// Three-variable system with a stable fixed point that nevertheless shows
/// chaos for generic initial conditions:
///   dx/dt = y,  dy/dt = z,
///   dz/dt = -x - (1-k) y - z - 2.3 z^2 + x y + k,   k in [-1, 0).
namespace chaos_bench {

struct ChaosParams {
    double k = -1e-4;
    double xi = 5e-3;  // perturbation magnitude for the decaying start

    ChaosParams(double k_, double xi_);
};

[[nodiscard]] QuadraticSystem build_chaos_system(double k);

/// The stable fixed point (k, 0, 0).
[[nodiscard]] Eigen::Vector3d fixed_point(double k);

struct ChaosInitialConditions {
    Eigen::Vector3d chaos;   // (k-1, 0, 0)
    Eigen::Vector3d decay;   // fixed point + xi * v1
    Eigen::Vector3d v1;      // unit eigenvector of the real eigenvalue, first component > 0
    double lambda1 = 0.0;    // the real eigenvalue of F1
};

[[nodiscard]] ChaosInitialConditions initial_conditions(double k, double xi);

/// Closed-form R for this system, (10.04/|k|) ||u0|| + 1/||u0||, which uses
/// ||F2|| rounded to 2.51 and the small-|k| value |k|/4 for |Re lambda_2|.
/// Its F0 term is only a rough stand-in, so it tracks the generic R formula
/// closely when the F2 term dominates (||u0|| not too small).
[[nodiscard]] double r_formula(double k, const Eigen::Vector3d& u0);

struct Fig2Options {
    double perturbation_norm = 1e-8;
    int n_samples = 100;
    double t_end = 400.0;
    double output_stride = 0.1;
    int n_workers = 0;
    IntegratorConfig integrator{};
};

struct Fig2Result {
    Trajectory trajectory;       // chaotic reference run
    LyapunovEstimate lyapunov;
};

/// Reference trajectory from the chaotic start plus the ensemble Lyapunov
/// estimate (perturbation 1e-8, 100 samples by default).
[[nodiscard]] Fig2Result run_fig2(double k, std::uint64_t seed, const Fig2Options& opts = {});

struct Fig34Options {
    int c_max = 5;
    double dt = 1e-3;
    double t_end = 10.0;
    double xi = 5e-3;
    int n_workers = 0;
    IntegratorConfig integrator{};
    std::int64_t cap = kDefaultCapacity;
};

struct Fig34Result {
    Trajectory reference_chaos;
    Trajectory reference_decay;
    std::vector<ErrorCurve> errors_chaos;      // index C-1
    std::vector<ErrorCurve> errors_decay;
    std::vector<Trajectory> carleman_chaos;    // Euler u-block per order
    std::vector<Trajectory> carleman_decay;
};

/// Truncation-error sweep over C = 1..c_max for both initial conditions.
/// Runs fan out in parallel; aggregation order is fixed by (IC, C).
[[nodiscard]] Fig34Result run_fig34(double k, const Fig34Options& opts = {});

}  // namespace chaos_bench
}  // namespace carlab
