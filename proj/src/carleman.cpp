#include "carlab/carleman.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "carlab/csv.hpp"

namespace carlab {

namespace {

/// Powers n^0..n^max, guarded against overflow of the running total.
std::vector<std::int64_t> dim_powers(int n, int max_power, std::int64_t cap) {
    std::vector<std::int64_t> powers(static_cast<std::size_t>(max_power) + 1, 1);
    for (int j = 1; j <= max_power; ++j) {
        detail::require(powers[j - 1] <= cap / n, ErrorCode::capacity,
                        "carleman: N^j exceeds size cap");
        powers[j] = powers[j - 1] * n;
    }
    return powers;
}

/// Accumulates I_L (x) B (x) I_R into `trips`, with B given in coordinate
/// form with block shape rows_b x cols_b, at global offset (row0, col0).
void add_kron_sandwich(std::vector<Eigen::Triplet<double>>& trips, std::int64_t left,
                       std::int64_t right, const std::vector<F2Entry>& b, std::int64_t rows_b,
                       std::int64_t cols_b, std::int64_t row0, std::int64_t col0) {
    for (std::int64_t l = 0; l < left; ++l) {
        const std::int64_t row_l = row0 + l * rows_b * right;
        const std::int64_t col_l = col0 + l * cols_b * right;
        for (const auto& e : b) {
            for (std::int64_t r = 0; r < right; ++r) {
                trips.emplace_back(row_l + e.row * right + r, col_l + e.col * right + r, e.value);
            }
        }
    }
}

std::vector<F2Entry> dense_to_entries(const Eigen::MatrixXd& m) {
    std::vector<F2Entry> entries;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0.0) entries.push_back({r, c, m(r, c)});
    return entries;
}

std::vector<F2Entry> vector_to_entries(const Eigen::VectorXd& v) {
    std::vector<F2Entry> entries;
    for (int r = 0; r < v.size(); ++r)
        if (v[r] != 0.0) entries.push_back({r, 0, v[r]});
    return entries;
}

/// One transfer block sum_{v=1..j} I^(v-1) (x) B (x) I^(j-v) as a sparse
/// matrix of the given shape.
Eigen::SparseMatrix<double> build_block(const std::vector<F2Entry>& b, std::int64_t rows_b,
                                        std::int64_t cols_b, int j,
                                        const std::vector<std::int64_t>& powers,
                                        std::int64_t rows, std::int64_t cols) {
    std::vector<Eigen::Triplet<double>> trips;
    for (int v = 1; v <= j; ++v)
        add_kron_sandwich(trips, powers[v - 1], powers[j - v], b, rows_b, cols_b, 0, 0);
    Eigen::SparseMatrix<double> m(rows, cols);
    m.setFromTriplets(trips.begin(), trips.end());
    return m;
}

std::int64_t round_steps(double dt, double t_end) {
    detail::require(dt > 0.0 && t_end > 0.0, ErrorCode::invalid_argument,
                    "dt and t_end must be positive");
    // Horizon is rounded to the nearest multiple of dt (at least one step).
    const std::int64_t m = std::max<std::int64_t>(1, std::llround(t_end / dt));
    return m;
}

double inf_norm(const Eigen::SparseMatrix<double>& a) {
    Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(a.rows());
    for (int k = 0; k < a.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(a, k); it; ++it)
            row_sums[it.row()] += std::abs(it.value());
    return a.rows() ? row_sums.maxCoeff() : 0.0;
}

}  // namespace

std::int64_t carleman_dimension(int n, int c, std::int64_t cap) {
    detail::require(n >= 1 && c >= 1, ErrorCode::invalid_argument,
                    "carleman_dimension: n and c must be >= 1");
    std::int64_t total = 0;
    std::int64_t power = 1;
    for (int j = 1; j <= c; ++j) {
        detail::require(power <= cap / n, ErrorCode::capacity, "carleman_dimension: exceeds cap");
        power *= n;
        total += power;
        detail::require(total <= cap, ErrorCode::capacity, "carleman_dimension: exceeds cap");
    }
    return total;
}

TransferBlocks transfer_blocks(const QuadraticSystem& sys, int j, std::int64_t cap) {
    detail::require(j >= 1, ErrorCode::invalid_argument, "transfer_blocks: j must be >= 1");
    const int n = sys.dim();
    const auto powers = dim_powers(n, j + 1, cap);

    TransferBlocks blocks;
    blocks.up = build_block(sys.f2(), n, n, static_cast<std::int64_t>(n) * n, j, powers, powers[j],
                            powers[j + 1]);
    blocks.diag = build_block(dense_to_entries(sys.f1()), n, n, n, j, powers, powers[j], powers[j]);
    if (j == 1) {
        blocks.down = Eigen::SparseMatrix<double>(n, 0);  // F0 lives in b, not in the grid
    } else {
        blocks.down = build_block(vector_to_entries(sys.f0()), n, n, 1, j, powers, powers[j],
                                  powers[j - 1]);
    }
    return blocks;
}

CarlemanOperator assemble(const QuadraticSystem& sys, int c, std::int64_t cap) {
    detail::require(c >= 1, ErrorCode::invalid_argument, "assemble: order must be >= 1");
    const int n = sys.dim();
    const std::int64_t delta = carleman_dimension(n, c, cap);
    const auto powers = dim_powers(n, c + 1, cap);

    std::vector<std::int64_t> offsets(static_cast<std::size_t>(c) + 1, 0);  // offsets[j] of block j
    offsets[1] = 0;
    for (int j = 2; j <= c; ++j) offsets[j] = offsets[j - 1] + powers[j - 1];

    std::vector<Eigen::Triplet<double>> trips;
    const auto f1_entries = dense_to_entries(sys.f1());
    const auto f0_entries = vector_to_entries(sys.f0());
    for (int j = 1; j <= c; ++j) {
        for (int v = 1; v <= j; ++v) {
            const std::int64_t left = powers[v - 1];
            const std::int64_t right = powers[j - v];
            add_kron_sandwich(trips, left, right, f1_entries, n, n, offsets[j], offsets[j]);
            if (j < c)  // truncation drops the last up block
                add_kron_sandwich(trips, left, right, sys.f2(), n, static_cast<std::int64_t>(n) * n,
                                  offsets[j], offsets[j + 1]);
            if (j > 1)
                add_kron_sandwich(trips, left, right, f0_entries, n, 1, offsets[j], offsets[j - 1]);
        }
    }

    CarlemanOperator op{c, delta, Eigen::SparseMatrix<double>(delta, delta),
                        Eigen::VectorXd::Zero(delta), sys};
    op.a.setFromTriplets(trips.begin(), trips.end());
    op.b.head(n) = sys.f0();
    return op;
}

Eigen::VectorXd lift_initial(const Eigen::VectorXd& u0, int c, std::int64_t cap) {
    const std::int64_t delta = carleman_dimension(static_cast<int>(u0.size()), c, cap);
    Eigen::VectorXd y(delta);
    std::int64_t offset = 0;
    Eigen::VectorXd power = u0;
    for (int j = 1; j <= c; ++j) {
        y.segment(offset, power.size()) = power;
        offset += power.size();
        if (j < c) {
            Eigen::VectorXd next(power.size() * u0.size());
            for (Eigen::Index a = 0; a < power.size(); ++a)
                for (Eigen::Index b = 0; b < u0.size(); ++b) next[a * u0.size() + b] = power[a] * u0[b];
            power.swap(next);
        }
    }
    return y;
}

EulerRun integrate_euler_run(const CarlemanOperator& op, const Eigen::VectorXd& y0, double dt,
                             double t_end) {
    detail::require(y0.size() == op.lifted_dim, ErrorCode::invalid_argument,
                    "integrate_euler: y0 has wrong lifted dimension");
    const std::int64_t m = round_steps(dt, t_end);
    const int n = op.source.dim();

    TrajectoryMeta meta;
    meta.integrator = "carleman_euler";
    meta.step_size = dt;
    meta.stability_warning = dt * inf_norm(op.a) > 2.0;

    EulerRun run;
    run.trajectory = Trajectory(n, meta);
    Eigen::VectorXd y = y0;
    Eigen::VectorXd ay(op.lifted_dim);
    run.trajectory.append(0.0, y.head(n));
    for (std::int64_t step = 1; step <= m; ++step) {
        ay.noalias() = op.a * y;
        y += dt * ay + dt * op.b;
        const double t = static_cast<double>(step) * dt;
        if (!y.allFinite()) {
            run.diverged = true;
            run.blowup_time = t;
            break;
        }
        run.trajectory.append(t, y.head(n));
        run.final_lifted = y;
    }
    if (run.final_lifted.size() == 0) run.final_lifted = y0;
    return run;
}

Trajectory integrate_euler(const CarlemanOperator& op, const Eigen::VectorXd& y0, double dt,
                           double t_end, Eigen::VectorXd* final_lifted) {
    EulerRun run = integrate_euler_run(op, y0, dt, t_end);
    if (run.diverged)
        throw DivergenceError(run.blowup_time, "carleman euler state became non-finite at t = " +
                                                   format_value(run.blowup_time));
    if (final_lifted) *final_lifted = run.final_lifted;
    return std::move(run.trajectory);
}

GlobalSystem assemble_global(const CarlemanOperator& op, const Eigen::VectorXd& y0, double dt,
                             double t_end, std::int64_t cap) {
    detail::require(y0.size() == op.lifted_dim, ErrorCode::invalid_argument,
                    "assemble_global: y0 has wrong lifted dimension");
    const std::int64_t m = round_steps(dt, t_end);
    const std::int64_t delta = op.lifted_dim;
    detail::require((m + 1) <= cap / delta, ErrorCode::capacity,
                    "assemble_global: (m+1)*Delta exceeds size cap");
    const std::int64_t total = (m + 1) * delta;

    // One sub-diagonal block is -(I + A dt), repeated for every step.
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(total) +
                  static_cast<std::size_t>(op.a.nonZeros() + delta) * static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < total; ++i) trips.emplace_back(i, i, 1.0);
    for (std::int64_t s = 1; s <= m; ++s) {
        const std::int64_t row0 = s * delta;
        const std::int64_t col0 = (s - 1) * delta;
        for (std::int64_t i = 0; i < delta; ++i) trips.emplace_back(row0 + i, col0 + i, -1.0);
        for (int k = 0; k < op.a.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(op.a, k); it; ++it)
                trips.emplace_back(row0 + it.row(), col0 + it.col(), -dt * it.value());
    }

    GlobalSystem gs;
    gs.steps = m;
    gs.block_dim = delta;
    gs.m = Eigen::SparseMatrix<double>(total, total);
    gs.m.setFromTriplets(trips.begin(), trips.end());
    gs.rhs = Eigen::VectorXd::Zero(total);
    gs.rhs.head(delta) = y0;
    for (std::int64_t s = 1; s <= m; ++s) gs.rhs.segment(s * delta, delta) = dt * op.b;
    return gs;
}

Eigen::VectorXd solve_global(const GlobalSystem& gs) {
    const std::int64_t delta = gs.block_dim;
    const std::int64_t total = (gs.steps + 1) * delta;
    detail::require(gs.m.rows() == total && gs.rhs.size() == total, ErrorCode::invalid_argument,
                    "solve_global: inconsistent system");
    // Block forward substitution: x_s = rhs_s - L_s x_{s-1}, diagonal blocks
    // are identities by construction.
    Eigen::VectorXd x = gs.rhs;
    for (int k = 0; k < gs.m.outerSize(); ++k) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(gs.m, k); it; ++it) {
            if (it.row() == it.col()) continue;  // unit diagonal
            x[it.row()] -= it.value() * x[it.col()];
        }
    }
    return x;
}

double ErrorCurve::max_error() const {
    double max_err = 0.0;
    for (double e : errors) max_err = std::max(max_err, e);
    return max_err;
}

ErrorCurve truncation_error(const QuadraticSystem& sys, const Eigen::VectorXd& u0, int c,
                            double dt, double t_end, const Trajectory& reference,
                            std::int64_t cap) {
    detail::require(!reference.times().empty() &&
                        reference.times().back() >= t_end - 1e-9 * std::max(1.0, t_end),
                    ErrorCode::invalid_argument, "truncation_error: reference must cover [0, t_end]");
    const CarlemanOperator op = assemble(sys, c, cap);
    const EulerRun run = integrate_euler_run(op, lift_initial(u0, c, cap), dt, t_end);

    ErrorCurve curve;
    curve.diverged = run.diverged;
    curve.blowup_time = run.blowup_time;
    curve.times = run.trajectory.times();
    curve.errors.reserve(curve.times.size());
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
        const Eigen::VectorXd ref = reference.sample(std::min(curve.times[i], t_end));
        curve.errors.push_back((run.trajectory.state(i) - ref).norm());
    }
    return curve;
}

void write_error_curve_csv(const ErrorCurve& curve, const std::string& path) {
    std::vector<double> data;
    data.reserve(curve.times.size() * 2);
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
        data.push_back(curve.times[i]);
        data.push_back(curve.errors[i]);
    }
    write_csv(path, "t,err", data, curve.times.size(), 2);
}

}  // namespace carlab
