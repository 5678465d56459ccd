#include "trajkit/oracle.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <string>
#include <utility>

#include "trajkit/rng.hpp"

namespace trajkit {

VectorMap componentwise(std::function<double(double)> f) {
    return [f = std::move(f)](const Vector& v) { return Vector(v.unaryExpr(f)); };
}

StateSpaceModel::StateSpaceModel(Matrix A, Matrix B, Matrix C, Matrix D)
    : StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D), nullptr, -1,
                      nullptr, -1) {}

StateSpaceModel::StateSpaceModel(Matrix A, Matrix B, Matrix C, Matrix D, VectorMap input_map,
                                 Index input_dim, VectorMap output_map, Index output_dim)
    : A_(std::move(A)),
      B_(std::move(B)),
      C_(std::move(C)),
      D_(std::move(D)),
      input_map_(std::move(input_map)),
      output_map_(std::move(output_map)),
      input_dim_(input_dim >= 0 ? input_dim : B_.cols()),
      output_dim_(output_dim >= 0 ? output_dim : C_.rows()) {
    const Index n = A_.rows();
    if (n < 1 || A_.cols() != n) {
        throw DimensionError("StateSpaceModel: A must be square of order >= 1");
    }
    if (B_.rows() != n || C_.cols() != n || D_.rows() != C_.rows() || D_.cols() != B_.cols()) {
        throw DimensionError("StateSpaceModel: inconsistent B/C/D dimensions");
    }
    if (input_dim_ < 1 || output_dim_ < 1) {
        throw ArgumentError("StateSpaceModel: input and output dimensions must be >= 1");
    }
    if (!input_map_ && input_dim_ != B_.cols()) {
        throw DimensionError("StateSpaceModel: identity input map requires input_dim == cols(B)");
    }
    if (!output_map_ && output_dim_ != C_.rows()) {
        throw DimensionError("StateSpaceModel: identity output map requires output_dim == rows(C)");
    }
}

Vector StateSpaceModel::apply_input(const Vector& u) const {
    if (u.size() != input_dim_) {
        throw DimensionError("StateSpaceModel: input sample of dimension " +
                             std::to_string(u.size()) + ", expected " +
                             std::to_string(input_dim_));
    }
    if (!input_map_) return u;
    Vector v = input_map_(u);
    if (v.size() != B_.cols()) {
        throw DimensionError("StateSpaceModel: input map produced dimension " +
                             std::to_string(v.size()) + ", expected " +
                             std::to_string(B_.cols()));
    }
    return v;
}

Vector StateSpaceModel::apply_output(const Vector& w) const {
    if (!output_map_) return w;
    Vector y = output_map_(w);
    if (y.size() != output_dim_) {
        throw DimensionError("StateSpaceModel: output map produced dimension " +
                             std::to_string(y.size()) + ", expected " +
                             std::to_string(output_dim_));
    }
    return y;
}

SimulationResult simulate(const StateSpaceModel& model, const Vector& x0, const Signal& u) {
    if (x0.size() != model.order()) {
        throw DimensionError("simulate: x0 has dimension " + std::to_string(x0.size()) +
                             ", model order is " + std::to_string(model.order()));
    }
    if (u.dim() != model.input_dim()) {
        throw DimensionError("simulate: input dimension " + std::to_string(u.dim()) +
                             ", model expects " + std::to_string(model.input_dim()));
    }

    const Index n = model.order();
    const Index N = u.length();
    Matrix states(n, N + 1);
    Matrix outputs(model.output_dim(), N);
    states.col(0) = x0;
    for (Index k = 0; k < N; ++k) {
        const Vector v = model.apply_input(u.sample(k));
        outputs.col(k) = model.apply_output(model.C() * states.col(k) + model.D() * v);
        states.col(k + 1) = model.A() * states.col(k) + model.B() * v;
    }
    return SimulationResult{Signal(std::move(outputs)), Signal(std::move(states))};
}

StateSpaceModel example1_model() {
    Matrix A(4, 4);
    A << 0.4, -0.3, 0.0, 0.1,   //
        -0.3, 0.0, 0.8, -0.1,   //
        0.1, -0.7, -0.4, 0.0,   //
        0.2, -0.5, 0.5, 0.4;
    Matrix B(4, 1);
    B << 0.0, -1.0, 1.4, 0.0;
    Matrix C(1, 4);
    C << -0.7, 0.0, -2.0, 0.4;
    Matrix D(1, 1);
    D << 0.2;
    return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D),
                           componentwise([](double u) { return std::sin(u); }), 1, nullptr, 1);
}

Signal add_multiplicative_noise(const Signal& y, const NoiseSpec& spec) {
    if (spec.ratio < 0.0) {
        throw ArgumentError("add_multiplicative_noise: ratio must be >= 0");
    }
    Rng rng(spec.seed);
    Matrix noisy = y.data();
    for (Index k = 0; k < y.length(); ++k) {
        for (Index i = 0; i < y.dim(); ++i) {
            const double eta = spec.distribution == NoiseDistribution::Uniform
                                   ? rng.uniform(-1.0, 1.0)
                                   : rng.normal();
            noisy(i, k) *= 1.0 + spec.ratio * eta;
        }
    }
    return Signal(std::move(noisy));
}

InitialStateEstimate reconstruct_initial_state(const StateSpaceModel& model,
                                               const Trajectory& traj) {
    if (!model.is_linear()) {
        throw ArgumentError(
            "reconstruct_initial_state: requires a linear model (use linear_part())");
    }
    const Index n = model.order();
    if (traj.length() < n) {
        throw ArgumentError("reconstruct_initial_state: window of length " +
                            std::to_string(traj.length()) + " is shorter than the order " +
                            std::to_string(n));
    }
    if (traj.input_dim() != model.input_dim() || traj.output_dim() != model.output_dim()) {
        throw DimensionError("reconstruct_initial_state: trajectory dimensions do not match");
    }

    const Index K = traj.length();
    const Index p = model.output_dim();

    // Observability stack: y_k - (forced response)_k = C A^k x0, k = 0..K-1.
    Matrix obs(p * K, n);
    Matrix Ak = Matrix::Identity(n, n);
    for (Index k = 0; k < K; ++k) {
        obs.middleRows(k * p, p) = model.C() * Ak;
        Ak = model.A() * Ak;
    }

    const Signal forced = simulate(model, Vector::Zero(n), traj.u()).y;
    const Vector rhs = traj.y().stacked() - forced.stacked();

    Eigen::JacobiSVD<Matrix> svd(obs, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Vector sv = svd.singularValues();
    const double threshold = 1e-10 * (sv.size() > 0 ? sv(0) : 0.0);
    if ((sv.array() > threshold).count() < n) {
        throw ObservabilityError(
            "reconstruct_initial_state: observability stack is rank deficient; the model is "
            "not observable over the given window");
    }

    InitialStateEstimate estimate;
    estimate.x0 = svd.solve(rhs);
    estimate.residual = (obs * estimate.x0 - rhs).norm();
    return estimate;
}

}  // namespace trajkit
