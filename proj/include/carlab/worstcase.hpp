#pragma once

#include <Eigen/Core>
#include <utility>

#include "carlab/quadratic_system.hpp"

namespace carlab {

/// The coupled two-variable benchmark
///   du1/dt = -u1 + r* u1^2,   du2/dt = -u2 - u1,
/// whose pair of closed-form solutions (psi for small epsilon, phi for
/// epsilon = 0) start at overlap 1 - epsilon and separate to a constant gap
/// in time logarithmic in 1/epsilon.
namespace worstcase {

/// Valid epsilon range is (0, e^-3).
inline constexpr double kEpsilonMax = 0.049787068367863944;

struct WorstcaseParams {
    double r_star = 1.0;
    double epsilon = 0.0;
    double delta = 0.0;  // sqrt(2 eps - eps^2); (1-eps, delta) has unit norm

    WorstcaseParams(double r_star_, double epsilon_);
};

/// N=2 system with F1 = [[-1,0],[-1,-1]], a single quadratic entry r* on
/// u1*u1, and F0 = 0.
[[nodiscard]] QuadraticSystem build_system(double r_star);

/// General solution with integration constants c1, c2:
///   u1 = 1/(r* + e^(t+c1)),  u2 = e^-t (c2 - e^-c1 log(r* + e^(t+c1))).
[[nodiscard]] Eigen::Vector2d closed_form_general(double r_star, double c1, double c2, double t);

/// R = 1 solution from (1-eps, delta):
///   u1 = [1 + eps e^t/(1-eps)]^-1,
///   u2 = (e^-t/eps) { eps delta - (1-eps) log(1 - eps + e^t eps) }.
[[nodiscard]] Eigen::Vector2d closed_form_psi(double epsilon, double t);

/// eps = 0 solution: (1, e^-t - 1).
[[nodiscard]] Eigen::Vector2d closed_form_phi(double t);

/// Ratio S = u1/u2; throws a singularity error when u2 == 0 (for phi that
/// happens only at t = 0).
[[nodiscard]] double ratio_s(const Eigen::Vector2d& u);

/// Upper bound 2/(t - log(1/eps)) on |S_psi(t)|, valid for t > log(1/eps).
[[nodiscard]] double s_psi_bound(double epsilon, double t);

/// Overlap magnitude of the amplitude-encoded psi/phi states at time t:
///   (|S_phi| |S_psi| + 1) / (sqrt(S_phi^2+1) sqrt(S_psi^2+1)).
/// At t = 0 (where S_phi has a pole) the overlap is computed from the
/// states directly and equals 1 - eps.
[[nodiscard]] double overlap_psi_phi(double epsilon, double t);

/// Initial conditions rescaled so the same closed forms apply for r >= 1
/// while both states keep unit norm and initial overlap 1 - eps:
///   phi0 = (1/r, sqrt(1 - 1/r^2)),
///   psi0 = (p, sqrt(1 - p^2)), p = (1-eps)/r - sqrt(2eps - eps^2 - (2eps - eps^2)/r^2).
[[nodiscard]] std::pair<Eigen::Vector2d, Eigen::Vector2d> scaled_initials(double r,
                                                                          double epsilon);

/// The system linearised about (1, 0) in shifted coordinates u1 = 1 + x1,
/// u2 = x2: dx1/dt = x1, dx2/dt = -x1 - x2 - 1. Ratio functions for the
/// linearised dynamics are evaluated on (1 + x1, x2).
[[nodiscard]] QuadraticSystem linearised_system();

}  // namespace worstcase
}  // namespace carlab
