#pragma once

#include <algorithm>
#include <cmath>

#include "trajkit/oracle.hpp"
#include "trajkit/rng.hpp"
#include "trajkit/signal.hpp"

namespace trajkit::testing {

inline Signal random_signal(Index dim, Index length, Rng& rng, double amplitude = 1.0) {
    Matrix samples(dim, length);
    for (Index k = 0; k < length; ++k) {
        for (Index i = 0; i < dim; ++i) {
            samples(i, k) = rng.uniform(-amplitude, amplitude);
        }
    }
    return Signal(std::move(samples));
}

inline Vector random_vector(Index dim, Rng& rng, double amplitude = 1.0) {
    Vector v(dim);
    for (Index i = 0; i < dim; ++i) {
        v(i) = rng.uniform(-amplitude, amplitude);
    }
    return v;
}

/// Noise-free data record of the reference system's linear part.
inline Trajectory linear_example_data(Index length, std::uint64_t seed,
                                      double amplitude = 1.0) {
    Rng rng(seed);
    const StateSpaceModel model = example1_model().linear_part();
    const Signal input = random_signal(1, length, rng, amplitude);
    return Trajectory(input, simulate(model, Vector::Zero(model.order()), input).y);
}

/// Random stable linear model with the requested shape.
inline StateSpaceModel random_model(Index n, Index m, Index p, Rng& rng) {
    Matrix A(n, n), B(n, m), C(p, n), D(p, m);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) A(i, j) = rng.uniform(-1.0, 1.0);
        for (Index j = 0; j < m; ++j) B(i, j) = rng.uniform(-1.0, 1.0);
    }
    for (Index i = 0; i < p; ++i) {
        for (Index j = 0; j < n; ++j) C(i, j) = rng.uniform(-1.0, 1.0);
        for (Index j = 0; j < m; ++j) D(i, j) = rng.uniform(-1.0, 1.0);
    }
    A *= 0.8 / std::max(1.0, A.cwiseAbs().rowwise().sum().maxCoeff());
    return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D));
}

}  // namespace trajkit::testing
