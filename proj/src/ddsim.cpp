#include "trajkit/ddsim.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace trajkit {

namespace {

void validate_request(const Trajectory& data, const Signal& new_input,
                      const Trajectory& initial_window) {
    const Index L = new_input.length();
    const Index nu = initial_window.length();
    if (nu > L) {
        throw ArgumentError("ddsim: initial window length " + std::to_string(nu) +
                            " exceeds the horizon " + std::to_string(L));
    }
    if (L > data.length()) {
        throw DimensionError("ddsim: horizon " + std::to_string(L) +
                             " exceeds the data length " + std::to_string(data.length()));
    }
    if (new_input.dim() != data.input_dim() || initial_window.input_dim() != data.input_dim() ||
        initial_window.output_dim() != data.output_dim()) {
        throw DimensionError("ddsim: input/output dimensions do not match the data");
    }
    // The initial window's input is the first nu samples of the new input.
    const double scale = std::max(1.0, new_input.stacked().lpNorm<Eigen::Infinity>());
    const double mismatch = (new_input.window(0, nu - 1) - initial_window.u().stacked())
                                .lpNorm<Eigen::Infinity>();
    if (mismatch > 1e-9 * scale) {
        throw ArgumentError(
            "ddsim: initial window input does not match the first samples of the new input");
    }
}

AlphaVector solve_ridge(const Matrix& system, const Vector& rhs, double lambda) {
    if (lambda > 0.0) {
        const Matrix normal = system.transpose() * system +
                              lambda * Matrix::Identity(system.cols(), system.cols());
        return Eigen::LLT<Matrix>(normal).solve(system.transpose() * rhs);
    }
    // Minimum-norm least squares.
    return Eigen::CompleteOrthogonalDecomposition<Matrix>(system).solve(rhs);
}

}  // namespace

DDSimProblem::DDSimProblem(Trajectory data, const Signal& new_input,
                           const Trajectory& initial_window, double lambda)
    : data_(std::move(data)),
      L_(new_input.length()),
      nu_(initial_window.length()),
      lambda_(lambda) {
    if (lambda_ < 0.0) {
        throw ArgumentError("DDSimProblem: lambda must be >= 0");
    }
    validate_request(data_, new_input, initial_window);

    const Index N = data_.length();
    const Index m = data_.input_dim();
    const Index p = data_.output_dim();

    const HankelMatrix Hu = hankel(data_.u(), L_);
    const HankelMatrix Hy_init = hankel(data_.y().slice(0, N - L_ + nu_ - 1), nu_);
    output_hankel_ = hankel(data_.y(), L_).entries;

    mixed_.resize(m * L_ + p * nu_, Hu.cols());
    mixed_.topRows(m * L_) = Hu.entries;
    mixed_.bottomRows(p * nu_) = Hy_init.entries;

    target_.resize(m * L_ + p * nu_);
    target_ << new_input.stacked(), initial_window.y().stacked();
}

double objective_value(const DDSimProblem& problem, const AlphaVector& alpha) {
    if (alpha.size() != problem.mixed_matrix().cols()) {
        throw DimensionError("objective_value: alpha has dimension " +
                             std::to_string(alpha.size()) + ", expected " +
                             std::to_string(problem.mixed_matrix().cols()));
    }
    return (problem.mixed_matrix() * alpha - problem.target()).squaredNorm() +
           problem.lambda() * alpha.squaredNorm();
}

DDSimResult ddsim_regularized(const DDSimProblem& problem) {
    const AlphaVector alpha = solve_ridge(problem.mixed_matrix(), problem.target(),
                                          problem.lambda());
    const double residual = (problem.mixed_matrix() * alpha - problem.target()).norm();
    return DDSimResult{alpha,
                       Signal::from_stacked(problem.output_hankel() * alpha,
                                            problem.data().output_dim()),
                       std::nullopt,
                       residual,
                       residual * residual + problem.lambda() * alpha.squaredNorm(),
                       {}};
}

DDSimResult ddsim_exact(const Trajectory& data, const Signal& new_input,
                        const Trajectory& initial_window, Index n_bound) {
    if (n_bound < 1) {
        throw ArgumentError("ddsim_exact: n_bound must be >= 1");
    }
    const DDSimProblem problem(data, new_input, initial_window, 0.0);
    DDSimResult result = ddsim_regularized(problem);

    const PersistenceReport pe =
        is_persistently_exciting(data.u(), new_input.length() + n_bound);
    if (!pe.is_pe) {
        result.warnings.push_back(
            "input data is not persistently exciting of order L + n_bound (rank " +
            std::to_string(pe.numerical_rank) + " of " + std::to_string(pe.required_rank) +
            "); the prediction may not be unique");
    }
    if (initial_window.length() < n_bound) {
        result.warnings.push_back(
            "initial window is shorter than n_bound; it may not pin down the initial state");
    }
    return result;
}

DDSimResult ddsim_kernel(const Trajectory& data, const Signal& new_input,
                         const Trajectory& initial_window, double lambda,
                         const Kernel& input_kernel, const Kernel& output_kernel,
                         const OutputDecoder& decoder) {
    if (lambda < 0.0) {
        throw ArgumentError("ddsim_kernel: lambda must be >= 0");
    }
    if (data.input_dim() != 1 || data.output_dim() != 1) {
        throw DimensionError("ddsim_kernel: requires scalar input and output data");
    }
    validate_request(data, new_input, initial_window);

    const Index N = data.length();
    const Index L = new_input.length();
    const Index nu = initial_window.length();
    const Index M = N - L + 1;

    const Vector u_data = data.u().data().transpose();
    const Vector y_data = data.y().data().transpose();
    const Vector u_new = new_input.data().transpose();
    const Vector y_init = initial_window.y().data().transpose();

    // Gram matrix of the lifted mixed-matrix columns and its cross vector
    // against the lifted target, expressed through kernel values only:
    //   G(i,j) = sum_{t<L} K_in(u_{i+t}, u_{j+t}) + sum_{t<nu} K_out(y_{i+t}, y_{j+t})
    //   c(i)   = sum_{t<L} K_in(u_new_t, u_{i+t}) + sum_{t<nu} K_out(y_init_t, y_{i+t})
    const Matrix pairwise_in = gram(input_kernel, u_data, u_data);
    const Matrix pairwise_out = gram(output_kernel, y_data, y_data);
    Matrix G = Matrix::Zero(M, M);
    for (Index t = 0; t < L; ++t) G += pairwise_in.block(t, t, M, M);
    for (Index t = 0; t < nu; ++t) G += pairwise_out.block(t, t, M, M);

    const Matrix cross_in = gram(input_kernel, u_new, u_data);    // L x N
    const Matrix cross_out = gram(output_kernel, y_init, y_data); // nu x N
    Vector c = Vector::Zero(M);
    for (Index t = 0; t < L; ++t) c += cross_in.row(t).segment(t, M).transpose();
    for (Index t = 0; t < nu; ++t) c += cross_out.row(t).segment(t, M).transpose();

    double target_sq = 0.0;
    for (Index t = 0; t < L; ++t) target_sq += input_kernel(u_new(t), u_new(t));
    for (Index t = 0; t < nu; ++t) target_sq += output_kernel(y_init(t), y_init(t));

    // lambda = 0 solves the plain normal system G alpha = c directly; with
    // noisy data G is close to singular and the solution follows the noise,
    // which is exactly what the regularization is there to prevent.
    std::vector<std::string> warnings;
    AlphaVector alpha;
    if (lambda > 0.0) {
        alpha = Eigen::LLT<Matrix>(G + lambda * Matrix::Identity(M, M)).solve(c);
    } else {
        alpha = Eigen::LDLT<Matrix>(G).solve(c);
        warnings.push_back(
            "lambda = 0 solves the possibly singular Gram system directly; prefer lambda > 0");
    }

    // ||H alpha - w||^2 = alpha' G alpha - 2 c' alpha + ||w||^2.
    const double residual_sq =
        std::max(0.0, alpha.dot(G * alpha) - 2.0 * c.dot(alpha) + target_sq);
    const double residual = std::sqrt(residual_sq);
    const double objective = residual_sq + lambda * alpha.squaredNorm();

    if (output_kernel.is_identity_basis()) {
        return DDSimResult{alpha,
                           Signal::from_stacked(hankel(data.y(), L).entries * alpha, 1),
                           std::nullopt, residual, objective, std::move(warnings)};
    }
    if (output_kernel.kind() != Kernel::Kind::Explicit) {
        throw RecoveryError(
            "ddsim_kernel: the output kernel has no explicit basis, so the lifted prediction "
            "cannot be materialized; use an explicit output kernel and supply a decoder");
    }

    const Signal z = lift_output(data.y(), *output_kernel.basis());
    const Signal z_pred = Signal::from_stacked(hankel(z, L).entries * alpha, z.dim());
    if (!decoder) {
        throw RecoveryError(
            "ddsim_kernel: output kernel is a non-identity lifting; supply a decoder to map "
            "lifted samples back to outputs");
    }
    Matrix y_pred(1, L);
    for (Index k = 0; k < L; ++k) {
        y_pred(0, k) = decoder(z_pred.sample(k));
    }
    return DDSimResult{alpha,     Signal(std::move(y_pred)), z_pred,
                       residual,  objective,                 std::move(warnings)};
}

}  // namespace trajkit
