#include "trajkit/weave.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <string>

namespace trajkit {

namespace {

// The overlap and continuation blocks of the weave system are row slices of
// the depth-L Hankel matrix:
//   H_n(x_{[L-n, N-1]})     = bottom n*d rows of H_L(x)   (segment tails)
//   H_n(x_{[0, N-L+n-1]})   = top n*d rows of H_L(x)      (segment heads)
//   H_{L-n}(x_{[n, N-1]})   = bottom (L-n)*d rows of H_L(x)

Matrix tail_block(const HankelMatrix& h, Index n) {
    return h.entries.bottomRows(n * h.source_dim);
}

Matrix head_block(const HankelMatrix& h, Index n) {
    return h.entries.topRows(n * h.source_dim);
}

Matrix continuation_block(const HankelMatrix& h, Index n) {
    const Index d = h.source_dim;
    return h.entries.middleRows(n * d, (h.depth - n) * d);
}

}  // namespace

WeavePlan::WeavePlan(TrajectoryBasis basis, Index segment_count)
    : basis_(std::move(basis)), xi_(segment_count) {
    if (xi_ < 1) {
        throw ArgumentError("WeavePlan: segment count must be >= 1");
    }
    if (basis_.horizon() <= basis_.n_bound()) {
        throw ArgumentError("WeavePlan: horizon must exceed n_bound for segments to overlap");
    }
}

Index WeavePlan::extended_horizon() const {
    return xi_ * basis_.horizon() + (1 - xi_) * basis_.n_bound();
}

double JunctionReport::worst() const {
    double w = 0.0;
    for (double r : input_residuals) w = std::max(w, r);
    for (double r : output_residuals) w = std::max(w, r);
    return w;
}

namespace {

void validate_coefficients(const WeavePlan& plan, const WeaveCoefficients& coeffs) {
    if (static_cast<Index>(coeffs.size()) != plan.segment_count()) {
        throw DimensionError("weave: expected " + std::to_string(plan.segment_count()) +
                             " coefficient vectors, got " + std::to_string(coeffs.size()));
    }
    for (const AlphaVector& alpha : coeffs) {
        if (alpha.size() != plan.basis().column_count()) {
            throw DimensionError("weave: coefficient vector of dimension " +
                                 std::to_string(alpha.size()) + ", expected " +
                                 std::to_string(plan.basis().column_count()));
        }
    }
}

}  // namespace

JunctionReport check_weave_constraints(const WeavePlan& plan, const WeaveCoefficients& coeffs,
                                       double tolerance) {
    validate_coefficients(plan, coeffs);
    const TrajectoryBasis& basis = plan.basis();
    const Index n = basis.n_bound();

    JunctionReport report;
    if (plan.segment_count() == 1) {
        return report;  // no junctions
    }

    const Matrix tail_u = tail_block(basis.input_hankel(), n);
    const Matrix head_u = head_block(basis.input_hankel(), n);
    const Matrix tail_y = tail_block(basis.output_hankel(), n);
    const Matrix head_y = head_block(basis.output_hankel(), n);

    for (Index i = 0; i + 1 < plan.segment_count(); ++i) {
        const double ru = (tail_u * coeffs[i] - head_u * coeffs[i + 1]).norm();
        const double ry = (tail_y * coeffs[i] - head_y * coeffs[i + 1]).norm();
        report.input_residuals.push_back(ru);
        report.output_residuals.push_back(ry);
        if (ru > tolerance || ry > tolerance) {
            report.ok = false;
        }
    }
    return report;
}

Trajectory assemble(const WeavePlan& plan, const WeaveCoefficients& coeffs, double tolerance) {
    const JunctionReport junctions = check_weave_constraints(plan, coeffs, tolerance);
    if (!junctions.ok) {
        throw WeaveError("assemble: junction constraints violated (worst residual " +
                             std::to_string(junctions.worst()) + ")",
                         junctions.worst());
    }

    const TrajectoryBasis& basis = plan.basis();
    const Index L = basis.horizon();
    const Index n = basis.n_bound();
    const Index total = plan.extended_horizon();

    Matrix u_out(basis.input_dim(), total);
    Matrix y_out(basis.output_dim(), total);
    Index offset = 0;
    for (Index i = 0; i < plan.segment_count(); ++i) {
        const Trajectory segment = basis.realize(coeffs[i]);
        const Index first = i == 0 ? 0 : n;  // later segments overlap on the first n steps
        const Index count = L - first;
        u_out.middleCols(offset, count) = segment.u().data().middleCols(first, count);
        y_out.middleCols(offset, count) = segment.y().data().middleCols(first, count);
        offset += count;
    }
    return Trajectory(Signal(std::move(u_out)), Signal(std::move(y_out)));
}

WeaveSolution solve_weave(const WeavePlan& plan, const Trajectory& target, double tolerance) {
    const TrajectoryBasis& basis = plan.basis();
    const Index xi = plan.segment_count();
    const Index L = basis.horizon();
    const Index n = basis.n_bound();
    const Index m = basis.input_dim();
    const Index p = basis.output_dim();
    const Index cols = basis.column_count();
    const Index total = plan.extended_horizon();

    if (target.length() != total) {
        throw DimensionError("solve_weave: target length " + std::to_string(target.length()) +
                             ", expected " + std::to_string(total));
    }
    if (target.input_dim() != m || target.output_dim() != p) {
        throw DimensionError("solve_weave: target dimensions do not match the data");
    }

    const Matrix& Hu = basis.input_hankel().entries;
    const Matrix& Hy = basis.output_hankel().entries;
    const Matrix cont_u = continuation_block(basis.input_hankel(), n);
    const Matrix cont_y = continuation_block(basis.output_hankel(), n);
    const Matrix tail_u = tail_block(basis.input_hankel(), n);
    const Matrix head_u = head_block(basis.input_hankel(), n);
    const Matrix tail_y = tail_block(basis.output_hankel(), n);
    const Matrix head_y = head_block(basis.output_hankel(), n);

    const Index stack_rows = (m + p) * total;
    const Index junction_rows = (xi - 1) * (m + p) * n;
    Matrix system = Matrix::Zero(stack_rows + junction_rows, xi * cols);
    Vector rhs = Vector::Zero(system.rows());

    // Stacking equations: segment 1 contributes all L steps, segments 2..xi
    // their steps n..L-1.
    rhs.head(m * total) = target.u().stacked();
    rhs.segment(m * total, p * total) = target.y().stacked();
    Index row_u = 0;
    Index row_y = m * total;
    for (Index i = 0; i < xi; ++i) {
        const Matrix& bu = i == 0 ? Hu : cont_u;
        const Matrix& by = i == 0 ? Hy : cont_y;
        system.block(row_u, i * cols, bu.rows(), cols) = bu;
        system.block(row_y, i * cols, by.rows(), cols) = by;
        row_u += bu.rows();
        row_y += by.rows();
    }

    // Junction constraints: tail of segment i equals head of segment i+1.
    Index row = stack_rows;
    for (Index i = 0; i + 1 < xi; ++i) {
        system.block(row, i * cols, n * m, cols) = tail_u;
        system.block(row, (i + 1) * cols, n * m, cols) = -head_u;
        row += n * m;
        system.block(row, i * cols, n * p, cols) = tail_y;
        system.block(row, (i + 1) * cols, n * p, cols) = -head_y;
        row += n * p;
    }

    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(system);
    const Vector solution = cod.solve(rhs);

    WeaveSolution result;
    result.coefficients.reserve(xi);
    for (Index i = 0; i < xi; ++i) {
        result.coefficients.push_back(solution.segment(i * cols, cols));
    }
    result.residual = (system * solution - rhs).norm();
    const double scale = std::max(1.0, rhs.head(stack_rows).norm());
    result.within_tolerance = result.residual <= tolerance * scale;
    return result;
}

}  // namespace trajkit
