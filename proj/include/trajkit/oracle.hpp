#pragma once

#include <cstdint>
#include <functional>

#include "trajkit/signal.hpp"

namespace trajkit {

/// Static map between vector-valued samples, e.g. an input or output
/// nonlinearity. An empty function means identity.
using VectorMap = std::function<Vector(const Vector&)>;

/// Lifts a scalar function to a componentwise VectorMap.
VectorMap componentwise(std::function<double(double)> f);

/// Discrete-time state-space model
///
///   x_{k+1} = A x_k + B psi(u_k)
///   y_k     = Phi(C x_k + D psi(u_k))
///
/// with optional static input nonlinearity psi: R^m -> R^mt and output
/// nonlinearity Phi: R^pt -> R^p. Identity maps give a plain LTI system.
class StateSpaceModel {
public:
    /// Linear model; input/output maps are identity.
    StateSpaceModel(Matrix A, Matrix B, Matrix C, Matrix D);

    /// Hammerstein-Wiener model. input_dim is m (the argument dimension of
    /// psi), output_dim is p (the value dimension of Phi).
    StateSpaceModel(Matrix A, Matrix B, Matrix C, Matrix D, VectorMap input_map,
                    Index input_dim, VectorMap output_map, Index output_dim);

    const Matrix& A() const { return A_; }
    const Matrix& B() const { return B_; }
    const Matrix& C() const { return C_; }
    const Matrix& D() const { return D_; }

    Index order() const { return A_.rows(); }       // n
    Index input_dim() const { return input_dim_; }  // m
    Index output_dim() const { return output_dim_; }

    bool has_input_map() const { return static_cast<bool>(input_map_); }
    bool has_output_map() const { return static_cast<bool>(output_map_); }
    bool is_linear() const { return !has_input_map() && !has_output_map(); }

    /// psi(u), or u itself for the identity map.
    Vector apply_input(const Vector& u) const;

    /// Phi(w), or w itself for the identity map.
    Vector apply_output(const Vector& w) const;

    /// Same matrices with both nonlinearities removed.
    StateSpaceModel linear_part() const { return {A_, B_, C_, D_}; }

private:
    Matrix A_, B_, C_, D_;
    VectorMap input_map_;
    VectorMap output_map_;
    Index input_dim_;
    Index output_dim_;
};

struct SimulationResult {
    Signal y;       // outputs, length N
    Signal states;  // x_0..x_N, length N+1
};

/// Runs the state recursion from x0 under input u.
SimulationResult simulate(const StateSpaceModel& model, const Vector& x0, const Signal& u);

/// The four-state single-input single-output reference system used throughout
/// the test suite: a Hammerstein model with psi(u) = sin(u).
StateSpaceModel example1_model();

enum class NoiseDistribution { Uniform, Normal };

/// Multiplicative measurement noise: y_k * (1 + ratio * eta_k) componentwise.
struct NoiseSpec {
    double ratio = 0.0;  // signal-to-noise ratio as a fraction
    std::uint64_t seed = 0;
    NoiseDistribution distribution = NoiseDistribution::Uniform;
};

/// Applies multiplicative noise; deterministic for a given seed. eta_k is
/// i.i.d. uniform on [-1, 1] or standard normal.
Signal add_multiplicative_noise(const Signal& y, const NoiseSpec& spec);

struct InitialStateEstimate {
    Vector x0;
    double residual = 0.0;  // least-squares residual of the observability stack
};

/// Recovers the initial state of a linear model from an input-output window of
/// length >= n by least squares over the observability stack. Throws
/// ObservabilityError when the stack is rank deficient and ArgumentError when
/// the model carries nonlinear maps.
InitialStateEstimate reconstruct_initial_state(const StateSpaceModel& model,
                                               const Trajectory& traj);

}  // namespace trajkit
