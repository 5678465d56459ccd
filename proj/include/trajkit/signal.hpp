#pragma once

#include <Eigen/Dense>
#include <vector>

#include "trajkit/errors.hpp"

namespace trajkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// A finite vector-valued signal {x_k}, k = 0..N-1.
///
/// Samples are stored as the columns of a d x N matrix, so x_k is column k.
/// Immutable after construction.
class Signal {
public:
    /// Wraps a d x N sample matrix (column k = x_k). Requires d >= 1, N >= 1.
    explicit Signal(Matrix samples);

    /// Scalar signal (d = 1) from a list of values.
    explicit Signal(const std::vector<double>& values);
    Signal(std::initializer_list<double> values);

    /// Scalar signal (d = 1) from a vector of values.
    static Signal scalar(const Vector& values);

    /// Rebuilds a signal of dimension d from a stacked vector x_{[0,N-1]}.
    static Signal from_stacked(const Vector& stacked, Index dim);

    /// Constant zero signal.
    static Signal zero(Index dim, Index length);

    Index dim() const { return samples_.rows(); }
    Index length() const { return samples_.cols(); }

    const Matrix& data() const { return samples_; }

    /// Sample x_k.
    Vector sample(Index k) const;

    /// Stacked window x_{[a,b]} of dimension d*(b-a+1). Requires 0 <= a <= b < N.
    Vector window(Index a, Index b) const;

    /// Full stacked vector x_{[0,N-1]}.
    Vector stacked() const;

    /// Sub-signal over samples a..b (inclusive).
    Signal slice(Index a, Index b) const;

    bool operator==(const Signal& other) const { return samples_ == other.samples_; }

private:
    Matrix samples_;
};

/// An input-output record {u_k, y_k} of common length N.
class Trajectory {
public:
    Trajectory(Signal input, Signal output);

    const Signal& u() const { return u_; }
    const Signal& y() const { return y_; }

    Index length() const { return u_.length(); }
    Index input_dim() const { return u_.dim(); }
    Index output_dim() const { return y_.dim(); }

    /// Sub-trajectory over samples a..b (inclusive).
    Trajectory slice(Index a, Index b) const { return {u_.slice(a, b), y_.slice(a, b)}; }

    bool operator==(const Trajectory& other) const {
        return u_ == other.u_ && y_ == other.y_;
    }

private:
    Signal u_;
    Signal y_;
};

/// Block-Hankel matrix H_L(x) of a signal: column j holds the stacked window
/// x_{[j, j+L-1]}, giving a (d*L) x (N-L+1) matrix.
struct HankelMatrix {
    Matrix entries;
    Index depth = 0;       // L
    Index source_dim = 0;  // d

    Index rows() const { return entries.rows(); }
    Index cols() const { return entries.cols(); }
};

/// Builds H_L(x). Throws ArgumentError for L = 0, DimensionError for L > N.
HankelMatrix hankel(const Signal& x, Index depth);

/// Verdict and diagnostics of a persistence-of-excitation check.
struct PersistenceReport {
    bool is_pe = false;
    Index numerical_rank = 0;
    Index required_rank = 0;  // d*L
    Vector singular_values;   // of H_L(x); empty when N < L

    explicit operator bool() const { return is_pe; }
};

/// Checks whether x is persistently exciting of order L, i.e. whether H_L(x)
/// has full row rank d*L. Rank is counted as the number of singular values
/// above rank_tolerance times the largest one. Signals shorter than
/// (d+1)L - 1 samples can never be persistently exciting of order L and
/// yield a false verdict rather than an error.
PersistenceReport is_persistently_exciting(const Signal& x, Index order,
                                           double rank_tolerance = 1e-10);

}  // namespace trajkit
