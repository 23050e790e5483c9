#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>
#include <vector>

#include "carlab/errors.hpp"

namespace carlab {

/// Default size cap for lifted/Kronecker objects (number of scalar entries).
inline constexpr std::int64_t kDefaultCapacity = 10'000'000;

/// One coordinate-list entry of the quadratic coefficient matrix. The column
/// indexes the pair (i, j) of the state product u_i * u_j as col = i*N + j
/// (row-major pairing). Cross terms are stored asymmetrically: a single
/// entry on (i, j), not half weight on (i, j) and (j, i).
struct F2Entry {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Quadratic ODE system du/dt = F2 (u (x) u) + F1 u + F0 with constant
/// coefficients: F2 sparse N x N^2, F1 dense N x N, F0 length N.
class QuadraticSystem {
public:
    QuadraticSystem(int dim, std::vector<F2Entry> f2, Eigen::MatrixXd f1, Eigen::VectorXd f0);

    [[nodiscard]] int dim() const noexcept { return dim_; }
    [[nodiscard]] const std::vector<F2Entry>& f2() const noexcept { return f2_; }
    [[nodiscard]] const Eigen::MatrixXd& f1() const noexcept { return f1_; }
    [[nodiscard]] const Eigen::VectorXd& f0() const noexcept { return f0_; }

    /// F2 as an explicit sparse N x N^2 matrix.
    [[nodiscard]] Eigen::SparseMatrix<double> f2_sparse() const;

private:
    int dim_;
    std::vector<F2Entry> f2_;
    Eigen::MatrixXd f1_;
    Eigen::VectorXd f0_;
};

struct SpectralReport {
    std::vector<std::complex<double>> eigenvalues_f1;  // sorted by real part ascending
    double max_real_part = 0.0;
    double f2_spectral_norm = 0.0;
    bool dissipative = false;
};

/// Right-hand side F2 (u (x) u) + F1 u + F0, evaluated without forming
/// u (x) u densely.
[[nodiscard]] Eigen::VectorXd rhs_eval(const QuadraticSystem& sys, const Eigen::VectorXd& u);

/// k-fold Kronecker power with lexicographic index ordering: the component
/// (i_1, ..., i_k) lands at index sum_j i_j * N^(k-j).
[[nodiscard]] Eigen::VectorXd kron_power(const Eigen::VectorXd& u, int k,
                                         std::int64_t cap = kDefaultCapacity);

/// Eigenvalues of F1 (dense solver) and the spectral norm of F2 computed
/// from the N x N Gram matrix F2 * F2^T.
[[nodiscard]] SpectralReport spectral_report(const QuadraticSystem& sys);

/// Nonlinearity-strength ratio
///   R = (|Re lambda_N|)^-1 * (||F2|| ||u0|| + ||F0|| / ||u0||),
/// defined only for dissipative systems (all Re lambda < 0).
[[nodiscard]] double reynolds_like_r(const QuadraticSystem& sys, const Eigen::VectorXd& u0);

}  // namespace carlab
