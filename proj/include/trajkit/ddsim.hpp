#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trajkit/lift.hpp"
#include "trajkit/signal.hpp"
#include "trajkit/trajspace.hpp"

namespace trajkit {

/// A data-driven simulation instance: predict the output a system produces
/// for a new input of length L, pinned down by an initial input-output
/// window of length nu, using only a measured data trajectory.
///
/// The problem couples the input over the whole horizon with the output over
/// the initial window through the mixed matrix
///
///   H_{L,nu} = [ H_L(u); H_nu(y_{[0, N-L+nu-1]}) ]
///
/// and the stacked right-hand side w = [u_new; y_init].
class DDSimProblem {
public:
    DDSimProblem(Trajectory data, const Signal& new_input, const Trajectory& initial_window,
                 double lambda);

    const Trajectory& data() const { return data_; }
    Index horizon() const { return L_; }
    Index init_length() const { return nu_; }
    double lambda() const { return lambda_; }

    const Matrix& mixed_matrix() const { return mixed_; }
    const Vector& target() const { return target_; }
    const Matrix& output_hankel() const { return output_hankel_; }

private:
    Trajectory data_;
    Index L_;
    Index nu_;
    double lambda_;
    Matrix mixed_;          // (m L + p nu) x (N - L + 1)
    Vector target_;         // w
    Matrix output_hankel_;  // H_L(y)
};

struct DDSimResult {
    AlphaVector alpha;
    Signal predicted_output;                // y over the full horizon
    std::optional<Signal> predicted_lifted; // z when the output lives in lifted coordinates
    double residual = 0.0;                  // ||H_{L,nu} alpha - w||
    double objective_value = 0.0;           // residual^2 + lambda ||alpha||^2
    std::vector<std::string> warnings;
};

/// Exact data-driven simulation: solve H_{L,nu} alpha = w by minimum-norm
/// least squares, then read off the predicted output as H_L(y) alpha. On
/// noise-free data with a persistently exciting input of order L + n_bound
/// and nu >= n_bound the prediction is the unique true continuation; failing
/// either condition adds a warning to the result.
DDSimResult ddsim_exact(const Trajectory& data, const Signal& new_input,
                        const Trajectory& initial_window, Index n_bound);

/// Ridge-regularized variant: alpha = argmin ||H_{L,nu} a - w||^2 + lambda
/// ||a||^2 via the normal equations; lambda = 0 falls back to the
/// minimum-norm least-squares path.
DDSimResult ddsim_regularized(const DDSimProblem& problem);

/// Maps a lifted output sample z_k back to a scalar output sample.
using OutputDecoder = std::function<double(const Vector&)>;

/// Kernelized data-driven simulation for scalar-input scalar-output data:
/// solves the ridge problem in lifted coordinates using only kernel values,
/// without ever materializing the lifted signals (see
/// docs/kernel_reformulation.md). With the identity output kernel the
/// prediction is H_L(y) alpha directly; an explicit non-identity output
/// kernel yields the lifted prediction and needs a decoder to recover the
/// output, otherwise a RecoveryError is thrown.
DDSimResult ddsim_kernel(const Trajectory& data, const Signal& new_input,
                         const Trajectory& initial_window, double lambda,
                         const Kernel& input_kernel, const Kernel& output_kernel,
                         const OutputDecoder& decoder = nullptr);

/// The regularized objective ||H_{L,nu} alpha - w||^2 + lambda ||alpha||^2.
double objective_value(const DDSimProblem& problem, const AlphaVector& alpha);

}  // namespace trajkit
