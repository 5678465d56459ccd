#pragma once

#include "trajkit/oracle.hpp"
#include "trajkit/signal.hpp"

namespace trajkit {

/// Coefficient vector over the N-L+1 time-shifted windows of a data record.
using AlphaVector = Vector;

/// Largest horizon L for which a record of length N with m inputs can span
/// the full trajectory space of a system of order up to n_bound, i.e. the
/// largest L with (m+1)(L+n_bound) - 1 <= N. May be <= 0 when the record is
/// too short.
Index max_horizon(Index N, Index m, Index n_bound);

struct MembershipResult {
    bool is_member = false;
    AlphaVector alpha;
    double residual = 0.0;
    /// Whether the basis input was persistently exciting of order L+n_bound.
    /// Without it a positive verdict is still sound but a negative one is
    /// inconclusive.
    bool pe_verified = false;
};

/// Represents the length-L trajectory space of an unknown system by the
/// Hankel matrices of a single measured trajectory. Immutable; all queries
/// are pure and safe to run concurrently.
class TrajectoryBasis {
public:
    /// Builds H_L(u), H_L(y) and checks persistence of excitation of the
    /// input at order L + n_bound.
    TrajectoryBasis(Trajectory data, Index horizon, Index n_bound,
                    double rank_tolerance = 1e-10);

    const Trajectory& data() const { return data_; }
    Index horizon() const { return L_; }
    Index n_bound() const { return n_bound_; }
    Index input_dim() const { return data_.input_dim(); }
    Index output_dim() const { return data_.output_dim(); }
    Index column_count() const { return Hu_.cols(); }  // N - L + 1

    const HankelMatrix& input_hankel() const { return Hu_; }
    const HankelMatrix& output_hankel() const { return Hy_; }
    bool pe_verified() const { return pe_verified_; }
    const PersistenceReport& pe_report() const { return pe_report_; }

    /// Linear combination of data windows: (H_L(u) alpha, H_L(y) alpha)
    /// unstacked to a length-L trajectory.
    Trajectory realize(const AlphaVector& alpha) const;

    /// Least-squares membership test against the stacked Hankel matrix. The
    /// candidate is accepted when the residual is at most
    /// residual_tolerance * max(1, ||candidate||).
    MembershipResult membership(const Trajectory& candidate,
                                double residual_tolerance = 1e-8) const;

private:
    Trajectory data_;
    Index L_;
    Index n_bound_;
    HankelMatrix Hu_;
    HankelMatrix Hy_;
    PersistenceReport pe_report_;
    bool pe_verified_;
    Matrix stacked_;  // [H_L(u); H_L(y)]
};

/// Cross-checks the state-space side of a window combination: the state
/// sequence of realize(alpha), reconstructed in the model's realization,
/// must equal the alpha-combination of the data's state windows. Test
/// instrumentation; the model must be the true system behind the data.
bool state_consistency_check(const TrajectoryBasis& basis, const AlphaVector& alpha,
                             const StateSpaceModel& model, double tolerance = 1e-6);

}  // namespace trajkit
