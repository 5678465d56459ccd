#include "trajkit/trajspace.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <string>

namespace trajkit {

Index max_horizon(Index N, Index m, Index n_bound) {
    if (N < 1 || m < 1 || n_bound < 1) {
        throw ArgumentError("max_horizon: N, m and n_bound must be >= 1");
    }
    return (N + 1) / (m + 1) - n_bound;
}

TrajectoryBasis::TrajectoryBasis(Trajectory data, Index horizon, Index n_bound,
                                 double rank_tolerance)
    : data_(std::move(data)), L_(horizon), n_bound_(n_bound), pe_verified_(false) {
    if (n_bound_ < 1) {
        throw ArgumentError("TrajectoryBasis: n_bound must be >= 1");
    }
    Hu_ = hankel(data_.u(), L_);
    Hy_ = hankel(data_.y(), L_);
    pe_report_ = is_persistently_exciting(data_.u(), L_ + n_bound_, rank_tolerance);
    pe_verified_ = pe_report_.is_pe;
    stacked_.resize(Hu_.rows() + Hy_.rows(), Hu_.cols());
    stacked_.topRows(Hu_.rows()) = Hu_.entries;
    stacked_.bottomRows(Hy_.rows()) = Hy_.entries;
}

Trajectory TrajectoryBasis::realize(const AlphaVector& alpha) const {
    if (alpha.size() != column_count()) {
        throw DimensionError("realize: alpha has dimension " + std::to_string(alpha.size()) +
                             ", expected " + std::to_string(column_count()));
    }
    return Trajectory(Signal::from_stacked(Hu_.entries * alpha, input_dim()),
                      Signal::from_stacked(Hy_.entries * alpha, output_dim()));
}

MembershipResult TrajectoryBasis::membership(const Trajectory& candidate,
                                             double residual_tolerance) const {
    if (candidate.length() != L_) {
        throw DimensionError("membership: candidate length " +
                             std::to_string(candidate.length()) + ", expected " +
                             std::to_string(L_));
    }
    if (candidate.input_dim() != input_dim() || candidate.output_dim() != output_dim()) {
        throw DimensionError("membership: candidate dimensions do not match the data");
    }

    Vector w(stacked_.rows());
    w << candidate.u().stacked(), candidate.y().stacked();

    MembershipResult result;
    result.pe_verified = pe_verified_;
    // Minimum-norm least-squares solution; handles rank deficiency.
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(stacked_);
    result.alpha = cod.solve(w);
    result.residual = (stacked_ * result.alpha - w).norm();
    result.is_member = result.residual <= residual_tolerance * std::max(1.0, w.norm());
    return result;
}

bool state_consistency_check(const TrajectoryBasis& basis, const AlphaVector& alpha,
                             const StateSpaceModel& model, double tolerance) {
    const StateSpaceModel linear = model.linear_part();
    const Index n = linear.order();
    const Index L = basis.horizon();
    if (L < n) {
        throw ArgumentError("state_consistency_check: horizon shorter than the model order");
    }

    // State windows of the data record in the model's realization.
    const Trajectory& data = basis.data();
    const Vector x0_data = reconstruct_initial_state(linear, data).x0;
    const Signal data_states = simulate(linear, x0_data, data.u()).states;

    Vector combined = Vector::Zero(n * L);
    for (Index i = 0; i < basis.column_count(); ++i) {
        combined += alpha(i) * data_states.window(i, i + L - 1);
    }

    // State sequence of the realized trajectory, reconstructed independently.
    const Trajectory realized = basis.realize(alpha);
    const Vector x0_realized = reconstruct_initial_state(linear, realized).x0;
    const Signal realized_states = simulate(linear, x0_realized, realized.u()).states;

    const double deviation =
        (realized_states.window(0, L - 1) - combined).lpNorm<Eigen::Infinity>();
    return deviation <= tolerance;
}

}  // namespace trajkit
