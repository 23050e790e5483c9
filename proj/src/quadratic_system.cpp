#include "carlab/quadratic_system.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace carlab {

QuadraticSystem::QuadraticSystem(int dim, std::vector<F2Entry> f2, Eigen::MatrixXd f1,
                                 Eigen::VectorXd f0)
    : dim_(dim), f2_(std::move(f2)), f1_(std::move(f1)), f0_(std::move(f0)) {
    detail::require(dim_ >= 1, ErrorCode::invalid_argument, "dim must be positive");
    const std::int64_t n = dim_;
    detail::require(f1_.rows() == n && f1_.cols() == n, ErrorCode::invalid_argument,
                    "f1 must be dim x dim");
    detail::require(f0_.size() == n, ErrorCode::invalid_argument, "f0 must have length dim");
    detail::require(f1_.allFinite() && f0_.allFinite(), ErrorCode::invalid_argument,
                    "coefficients must be finite");
    for (const auto& e : f2_) {
        detail::require(e.row >= 0 && e.row < dim_, ErrorCode::invalid_argument,
                        "f2 entry row out of range");
        detail::require(e.col >= 0 && static_cast<std::int64_t>(e.col) < n * n,
                        ErrorCode::invalid_argument, "f2 entry column out of range");
        detail::require(std::isfinite(e.value), ErrorCode::invalid_argument,
                        "f2 entry value must be finite");
    }
}

Eigen::SparseMatrix<double> QuadraticSystem::f2_sparse() const {
    Eigen::SparseMatrix<double> m(dim_, static_cast<Eigen::Index>(dim_) * dim_);
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(f2_.size());
    for (const auto& e : f2_) trips.emplace_back(e.row, e.col, e.value);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

Eigen::VectorXd rhs_eval(const QuadraticSystem& sys, const Eigen::VectorXd& u) {
    const int n = sys.dim();
    detail::require(u.size() == n, ErrorCode::invalid_argument, "rhs_eval: state has wrong length");
    Eigen::VectorXd out = sys.f1() * u + sys.f0();
    for (const auto& e : sys.f2()) {
        const int i = e.col / n;
        const int j = e.col % n;
        out[e.row] += e.value * u[i] * u[j];
    }
    return out;
}

Eigen::VectorXd kron_power(const Eigen::VectorXd& u, int k, std::int64_t cap) {
    detail::require(k >= 1, ErrorCode::invalid_argument, "kron_power: k must be >= 1");
    const std::int64_t n = u.size();
    detail::require(n >= 1, ErrorCode::invalid_argument, "kron_power: empty vector");
    std::int64_t size = 1;
    for (int i = 0; i < k; ++i) {
        size *= n;
        detail::require(size <= cap, ErrorCode::capacity, "kron_power: N^k exceeds size cap");
    }
    Eigen::VectorXd result = u;
    for (int p = 2; p <= k; ++p) {
        Eigen::VectorXd next(result.size() * n);
        for (Eigen::Index a = 0; a < result.size(); ++a)
            for (Eigen::Index b = 0; b < n; ++b) next[a * n + b] = result[a] * u[b];
        result.swap(next);
    }
    return result;
}

SpectralReport spectral_report(const QuadraticSystem& sys) {
    SpectralReport report;

    Eigen::EigenSolver<Eigen::MatrixXd> solver(sys.f1());
    detail::require(solver.info() == Eigen::Success, ErrorCode::numerical,
                    "eigensolver failed on f1");
    const auto& vals = solver.eigenvalues();
    report.eigenvalues_f1.assign(vals.data(), vals.data() + vals.size());
    std::sort(report.eigenvalues_f1.begin(), report.eigenvalues_f1.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  if (a.real() != b.real()) return a.real() < b.real();
                  return a.imag() < b.imag();
              });
    report.max_real_part = report.eigenvalues_f1.back().real();
    report.dissipative = report.max_real_part < 0.0;

    // ||F2||_2 via the Gram matrix F2 F2^T (N x N, cheap for small N).
    const Eigen::SparseMatrix<double> f2 = sys.f2_sparse();
    const Eigen::MatrixXd gram = Eigen::MatrixXd(f2 * f2.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram_solver(gram);
    detail::require(gram_solver.info() == Eigen::Success, ErrorCode::numerical,
                    "eigensolver failed on f2 gram matrix");
    report.f2_spectral_norm = std::sqrt(std::max(0.0, gram_solver.eigenvalues().maxCoeff()));
    return report;
}

double reynolds_like_r(const QuadraticSystem& sys, const Eigen::VectorXd& u0) {
    detail::require(u0.size() == sys.dim(), ErrorCode::invalid_argument,
                    "reynolds_like_r: u0 has wrong length");
    const double norm_u0 = u0.norm();
    detail::require(norm_u0 > 0.0, ErrorCode::invalid_argument, "reynolds_like_r: ||u0|| = 0");
    const SpectralReport report = spectral_report(sys);
    if (!report.dissipative)
        throw Error(ErrorCode::non_dissipative,
                    "R is defined only for dissipative systems (all Re(lambda) < 0)");
    return (report.f2_spectral_norm * norm_u0 + sys.f0().norm() / norm_u0) /
           std::abs(report.max_real_part);
}

}  // namespace carlab
