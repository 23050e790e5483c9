#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carlab/quadratic_system.hpp"
#include "carlab/reference_integrator.hpp"
#include "carlab/trajectory.hpp"

namespace carlab {

/// A state vector split into direction and magnitude: the normalised
/// component vector is the amplitude-encoded state, the norm is what the
/// encoding discards.
struct AmplitudeEncoding {
    Eigen::VectorXd components;  // unit norm
    double norm = 0.0;
};

[[nodiscard]] AmplitudeEncoding amplitude_encode(const Eigen::VectorXd& u);

/// cos(theta) between two phase-space vectors.
[[nodiscard]] double overlap(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Overlap recovered from the two magnitudes and the separation
/// (law of cosines): (a^2 + b^2 - s^2) / (2ab). The triple must satisfy
/// |a - b| <= s <= a + b.
[[nodiscard]] double overlap_from_norms(double norm_a, double norm_b, double separation);

/// Trace distance between k-fold copies of two pure states with overlap
/// magnitude `overlap_mag`: sqrt(1 - overlap_mag^(2k)).
[[nodiscard]] double trace_distance_pure(double overlap_mag, std::int64_t k);

/// Smallest integer k with k > 1/(10 epsilon) — the number of state copies
/// needed to distinguish states with initial overlap 1 - epsilon.
[[nodiscard]] std::int64_t query_lower_bound(double epsilon);

struct LyapunovOptions {
    double output_stride = 0.1;
    double r2_threshold = 0.98;
    /// Fit-window points must have mean separation below this fraction of
    /// the attractor diameter estimate (max coordinate range of the base
    /// trajectory).
    double saturation_fraction = 0.1;
    std::optional<std::pair<double, double>> window_override;
    int n_workers = 0;  // 0: hardware concurrency
    IntegratorConfig integrator{};
};

struct LyapunovEstimate {
    double lambda_t = 0.0;           // slope of log mean separation, per unit time
    double window_t_a = 0.0;
    double window_t_b = 0.0;
    int n_samples = 0;
    double perturbation_norm = 0.0;
    double r_squared = 0.0;
    bool non_chaotic = false;        // no exponential window, or lambda_t <= 0
    double attractor_diameter = 0.0;
    std::vector<double> times;
    std::vector<double> mean_separation;
};

/// Finite-time Lyapunov exponent from an ensemble of perturbed trajectories:
/// n_samples directions drawn uniformly on the unit sphere (seeded per
/// sample, so results do not depend on the worker count), both trajectories
/// integrated with the reference solver, separations averaged, and
/// log(mean separation) fitted over the longest window whose regression has
/// r^2 >= threshold while the separation is still far from saturation.
[[nodiscard]] LyapunovEstimate lyapunov_estimate(const QuadraticSystem& sys,
                                                 const Eigen::VectorXd& u0,
                                                 double perturbation_norm, int n_samples,
                                                 std::uint64_t seed, double t_end,
                                                 const LyapunovOptions& opts = {});

/// Constants of the sub-exponential decay bound on the solution-to-
/// separation ratio ||u(t)|| / ||du(t)|| <= (1/sep0) exp(-t (lambda - t^-a)):
///   t_max  — where the raw bound peaks,
///   r_max  — the peak value,
///   t_c    — where t^-a = lambda (exponential decay onset),
///   c      — prefactor of the enclosing exponential through r_max at 2 t_c.
struct DecayBoundConstants {
    double alpha = 0.0;
    double lambda_t = 0.0;
    double sep0 = 0.0;
    double t_max = 0.0;
    double r_max = 0.0;
    double t_c = 0.0;
    double c = 0.0;

    /// The enclosing exponential (c / sep0) exp(-lambda (1 - 2^-a) t).
    [[nodiscard]] double bound(double t) const;
};

[[nodiscard]] DecayBoundConstants decay_bound_constants(double alpha, double lambda_t,
                                                        double sep0);

/// Overlaps, per-copy trace distances, and the query lower bound along a
/// pair of trajectories sharing one time grid.
struct OverlapReport {
    std::vector<double> times;
    std::vector<double> overlaps;
    std::vector<double> trace_distances;  // for k copies
    std::int64_t copies = 1;
    double epsilon = 0.0;   // 1 - initial overlap
    std::int64_t k_min = 0; // query lower bound for epsilon
};

[[nodiscard]] OverlapReport make_overlap_report(const Trajectory& a, const Trajectory& b,
                                                std::int64_t copies = 1);

/// CSV with header `t,overlap,trace_distance`.
void write_overlap_report_csv(const OverlapReport& report, const std::string& path);

}  // namespace carlab
