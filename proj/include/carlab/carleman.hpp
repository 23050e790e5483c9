#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cstdint>
#include <optional>
#include <vector>

#include "carlab/quadratic_system.hpp"
#include "carlab/trajectory.hpp"

namespace carlab {

/// Truncated Carleman operator: the lifted state y = (u, u^(x)2, ..., u^(x)C)
/// obeys dy/dt = A y + b with A block tridiagonal and b = (F0, 0, ..., 0).
struct CarlemanOperator {
    int order = 0;                   // truncation order C
    std::int64_t lifted_dim = 0;     // sum_{j<=C} N^j
    Eigen::SparseMatrix<double> a;   // lifted_dim x lifted_dim
    Eigen::VectorXd b;
    QuadraticSystem source;
};

/// Lifted dimension sum_{j=1..c} n^j, guarded by the size cap.
[[nodiscard]] std::int64_t carleman_dimension(int n, int c, std::int64_t cap = kDefaultCapacity);

/// The three blocks of block-row j of the (untruncated) Carleman matrix,
/// obtained by applying the tensor product rule to the quadratic RHS:
///   up   = sum_v I^(v-1) (x) F2 (x) I^(j-v)   (N^j x N^(j+1))
///   diag = sum_v I^(v-1) (x) F1 (x) I^(j-v)   (N^j x N^j)
///   down = sum_v I^(v-1) (x) F0 (x) I^(j-v)   (N^j x N^(j-1), F0 as N x 1)
/// For j = 1 the down block is empty (width 0); F0 enters through b instead.
struct TransferBlocks {
    Eigen::SparseMatrix<double> down;
    Eigen::SparseMatrix<double> diag;
    Eigen::SparseMatrix<double> up;
};

[[nodiscard]] TransferBlocks transfer_blocks(const QuadraticSystem& sys, int j,
                                             std::int64_t cap = kDefaultCapacity);

/// Assembles the truncated operator at order c; the up block of the last
/// block row is dropped (that is the truncation).
[[nodiscard]] CarlemanOperator assemble(const QuadraticSystem& sys, int c,
                                        std::int64_t cap = kDefaultCapacity);

/// Initial lifted state (u0, u0^(x)2, ..., u0^(x)c).
[[nodiscard]] Eigen::VectorXd lift_initial(const Eigen::VectorXd& u0, int c,
                                           std::int64_t cap = kDefaultCapacity);

struct EulerRun {
    Trajectory trajectory;           // u-block (first N components) per step
    Eigen::VectorXd final_lifted;    // full lifted state at the last recorded step
    bool diverged = false;
    double blowup_time = 0.0;
};

/// Forward Euler on the lifted system: y <- (I + A dt) y + b dt, for
/// m = round(t_end/dt) steps on the grid t_i = i dt. If the state becomes
/// non-finite the run stops and reports the blow-up time.
/// meta().stability_warning is set when dt * ||A||_inf > 2.
[[nodiscard]] EulerRun integrate_euler_run(const CarlemanOperator& op, const Eigen::VectorXd& y0,
                                           double dt, double t_end);

/// As integrate_euler_run, but divergence throws DivergenceError.
[[nodiscard]] Trajectory integrate_euler(const CarlemanOperator& op, const Eigen::VectorXd& y0,
                                         double dt, double t_end,
                                         Eigen::VectorXd* final_lifted = nullptr);

/// All-timesteps linear system M yhat = rhs with M = I - Ahat, where Ahat
/// encodes y_{n+1} = (I + A dt) y_n + b dt. With timesteps stacked forward,
/// M is block lower bidiagonal with identity diagonal blocks and
/// rhs = (y0, b dt, ..., b dt). Size (m+1) Delta; refused above the cap.
struct GlobalSystem {
    Eigen::SparseMatrix<double> m;
    Eigen::VectorXd rhs;
    std::int64_t steps = 0;      // m
    std::int64_t block_dim = 0;  // Delta
};

[[nodiscard]] GlobalSystem assemble_global(const CarlemanOperator& op, const Eigen::VectorXd& y0,
                                           double dt, double t_end,
                                           std::int64_t cap = kDefaultCapacity);

/// Solves the stacked system by block forward substitution. The result
/// matches integrate_euler states step by step (up to floating-point
/// associativity).
[[nodiscard]] Eigen::VectorXd solve_global(const GlobalSystem& gs);

struct ErrorCurve {
    std::vector<double> times;
    std::vector<double> errors;  // ||u_C(t) - u_ref(t)||
    bool diverged = false;
    double blowup_time = 0.0;

    [[nodiscard]] double max_error() const;
};

/// Truncation error of the order-c Carleman/Euler solution against a
/// reference trajectory, which is linearly interpolated onto the Euler grid
/// and must cover [0, t_end]. A diverging run yields a truncated curve with
/// the blow-up flag set.
[[nodiscard]] ErrorCurve truncation_error(const QuadraticSystem& sys, const Eigen::VectorXd& u0,
                                          int c, double dt, double t_end,
                                          const Trajectory& reference,
                                          std::int64_t cap = kDefaultCapacity);

/// CSV with header `t,err`.
void write_error_curve_csv(const ErrorCurve& curve, const std::string& path);

}  // namespace carlab
