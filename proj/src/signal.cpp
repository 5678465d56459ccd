#include "trajkit/signal.hpp"

#include <Eigen/SVD>
#include <string>

namespace trajkit {

Signal::Signal(Matrix samples) : samples_(std::move(samples)) {
    if (samples_.rows() < 1 || samples_.cols() < 1) {
        throw ArgumentError("Signal: needs at least one sample of dimension >= 1, got " +
                            std::to_string(samples_.rows()) + "x" +
                            std::to_string(samples_.cols()));
    }
}

Signal::Signal(const std::vector<double>& values)
    : Signal(Eigen::Map<const Eigen::RowVectorXd>(values.data(),
                                                  static_cast<Index>(values.size()))) {}

Signal::Signal(std::initializer_list<double> values)
    : Signal(std::vector<double>(values)) {}

Signal Signal::scalar(const Vector& values) { return Signal(values.transpose()); }

Signal Signal::from_stacked(const Vector& stacked, Index dim) {
    if (dim < 1 || stacked.size() % dim != 0) {
        throw DimensionError("Signal::from_stacked: vector of size " +
                             std::to_string(stacked.size()) +
                             " is not a multiple of dimension " + std::to_string(dim));
    }
    return Signal(Eigen::Map<const Matrix>(stacked.data(), dim, stacked.size() / dim));
}

Signal Signal::zero(Index dim, Index length) { return Signal(Matrix::Zero(dim, length)); }

Vector Signal::sample(Index k) const {
    if (k < 0 || k >= length()) {
        throw ArgumentError("Signal::sample: index " + std::to_string(k) +
                            " out of range [0, " + std::to_string(length()) + ")");
    }
    return samples_.col(k);
}

Vector Signal::window(Index a, Index b) const {
    if (a < 0 || a > b || b >= length()) {
        throw ArgumentError("Signal::window: invalid range [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] for length " + std::to_string(length()));
    }
    const Index count = b - a + 1;
    // Column-major storage makes consecutive columns one contiguous block.
    return Eigen::Map<const Vector>(samples_.data() + a * dim(), count * dim());
}

Vector Signal::stacked() const { return window(0, length() - 1); }

Signal Signal::slice(Index a, Index b) const {
    if (a < 0 || a > b || b >= length()) {
        throw ArgumentError("Signal::slice: invalid range [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] for length " + std::to_string(length()));
    }
    return Signal(samples_.middleCols(a, b - a + 1));
}

Trajectory::Trajectory(Signal input, Signal output)
    : u_(std::move(input)), y_(std::move(output)) {
    if (u_.length() != y_.length()) {
        throw DimensionError("Trajectory: input length " + std::to_string(u_.length()) +
                             " differs from output length " + std::to_string(y_.length()));
    }
}

HankelMatrix hankel(const Signal& x, Index depth) {
    if (depth < 1) {
        throw ArgumentError("hankel: depth must be >= 1");
    }
    if (depth > x.length()) {
        throw DimensionError("hankel: depth " + std::to_string(depth) +
                             " exceeds signal length " + std::to_string(x.length()));
    }
    const Index d = x.dim();
    const Index cols = x.length() - depth + 1;
    Matrix entries(d * depth, cols);
    for (Index i = 0; i < depth; ++i) {
        entries.middleRows(i * d, d) = x.data().middleCols(i, cols);
    }
    return HankelMatrix{std::move(entries), depth, d};
}

PersistenceReport is_persistently_exciting(const Signal& x, Index order,
                                           double rank_tolerance) {
    if (order < 1) {
        throw ArgumentError("is_persistently_exciting: order must be >= 1");
    }
    if (rank_tolerance < 0.0) {
        throw ArgumentError("is_persistently_exciting: rank tolerance must be >= 0");
    }

    PersistenceReport report;
    report.required_rank = x.dim() * order;
    if (order > x.length()) {
        return report;  // H_L(x) does not exist; cannot be persistently exciting
    }

    const HankelMatrix h = hankel(x, order);
    Eigen::BDCSVD<Matrix> svd(h.entries);
    report.singular_values = svd.singularValues();

    const double sigma_max = report.singular_values.size() > 0 ? report.singular_values(0) : 0.0;
    const double threshold = rank_tolerance * sigma_max;
    report.numerical_rank = (report.singular_values.array() > threshold).count();
    report.is_pe = report.numerical_rank == report.required_rank;
    return report;
}

}  // namespace trajkit
