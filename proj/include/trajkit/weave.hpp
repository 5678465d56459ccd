#pragma once

#include <vector>

#include "trajkit/trajspace.hpp"

namespace trajkit {

/// Plan for weaving xi length-L segments, each drawn from the same basis,
/// into one trajectory of length L*xi - (xi-1)*n_bound. Consecutive segments
/// overlap on windows of n_bound steps so that the internal states align.
class WeavePlan {
public:
    WeavePlan(TrajectoryBasis basis, Index segment_count);

    const TrajectoryBasis& basis() const { return basis_; }
    Index segment_count() const { return xi_; }

    /// L~ = xi*L + (1-xi)*n_bound; equals L for a single segment.
    Index extended_horizon() const;

private:
    TrajectoryBasis basis_;
    Index xi_;
};

/// One coefficient vector per segment.
using WeaveCoefficients = std::vector<AlphaVector>;

/// Residuals of the overlap equations at each junction between consecutive
/// segments (xi - 1 junctions; empty for a single segment).
struct JunctionReport {
    bool ok = true;
    std::vector<double> input_residuals;
    std::vector<double> output_residuals;

    double worst() const;
    explicit operator bool() const { return ok; }
};

/// Verifies that consecutive segments agree on their n_bound-step overlap
/// windows, input and output side, each within tolerance.
JunctionReport check_weave_constraints(const WeavePlan& plan, const WeaveCoefficients& coeffs,
                                       double tolerance = 1e-8);

/// Stacks the segments into one trajectory of length extended_horizon():
/// segment 1 contributes all L steps, later segments their steps n_bound..L-1.
/// Throws WeaveError when the junction constraints fail at the tolerance.
Trajectory assemble(const WeavePlan& plan, const WeaveCoefficients& coeffs,
                    double tolerance = 1e-8);

struct WeaveSolution {
    WeaveCoefficients coefficients;
    double residual = 0.0;  // of the full stacked system (assembly + junctions)
    /// Whether the residual clears tolerance * max(1, ||target||). Given a
    /// persistently exciting basis this decides trajectory-hood of the target.
    bool within_tolerance = false;
};

/// Fits coefficients for all segments at once by minimum-norm least squares
/// over the stacking equations and the junction constraints.
WeaveSolution solve_weave(const WeavePlan& plan, const Trajectory& target,
                          double tolerance = 1e-8);

}  // namespace trajkit
