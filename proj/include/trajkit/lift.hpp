#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "trajkit/signal.hpp"

namespace trajkit {

using ScalarFunction = std::function<double(double)>;

/// An ordered set of scalar basis functions used to lift inputs or outputs
/// into coordinates where a nonlinear system behaves linearly. Immutable.
class BasisSet {
public:
    /// User-supplied functions; names are for display and identity detection.
    explicit BasisSet(std::vector<ScalarFunction> functions,
                      std::vector<std::string> names = {});

    /// The single function u -> u.
    static BasisSet identity();

    /// Monomials 1, u, ..., u^max_degree (the constant can be dropped).
    static BasisSet monomials(int max_degree, bool include_constant = true);

    /// Builds a set from tokens: "identity", "one", "sin", "cos", "u^k",
    /// or "poly:k" (expands to 1, u, ..., u^k).
    static BasisSet from_names(const std::vector<std::string>& names);

    Index count() const { return static_cast<Index>(functions_.size()); }
    const std::vector<std::string>& names() const { return names_; }

    double evaluate(Index i, double x) const;

    /// The lifted sample (psi_1(x), ..., psi_r(x)).
    Vector lift(double x) const;

    /// True for the one-function set built by identity() / "identity".
    bool is_identity() const;

private:
    std::vector<ScalarFunction> functions_;
    std::vector<std::string> names_;
};

/// Lifts a scalar input signal: v_k = (psi_1(u_k), ..., psi_r(u_k)).
Signal lift_input(const Signal& u, const BasisSet& basis);

/// Lifts a scalar output signal: z_k = (phi_1(y_k), ..., phi_q(y_k)).
Signal lift_output(const Signal& y, const BasisSet& basis);

/// A positive semidefinite kernel over scalars. Explicit kernels compute the
/// dot product of lifted vectors; the other kinds imply their basis sets
/// implicitly.
class Kernel {
public:
    enum class Kind { SquaredExponential, Polynomial, Explicit };

    /// K(x, x') = exp(-(x - x')^2 / (2 sigma^2)); requires sigma > 0.
    static Kernel squared_exponential(double sigma);

    /// K(x, x') = (x x' + offset)^degree; requires degree >= 1, offset >= 0.
    static Kernel polynomial(int degree, double offset = 1.0);

    /// K(x, x') = lift(x) . lift(x').
    static Kernel explicit_basis(BasisSet basis);

    Kind kind() const { return kind_; }
    double evaluate(double x1, double x2) const;
    double operator()(double x1, double x2) const { return evaluate(x1, x2); }

    /// The basis behind an explicit kernel, nullptr otherwise.
    const BasisSet* basis() const { return basis_.get(); }

    /// Explicit kernel over the identity basis, i.e. K(x, x') = x x' with
    /// lifted coordinates equal to the raw signal.
    bool is_identity_basis() const { return basis_ && basis_->is_identity(); }

    double sigma() const { return sigma_; }
    int degree() const { return degree_; }
    double offset() const { return offset_; }

private:
    Kernel() = default;

    Kind kind_ = Kind::SquaredExponential;
    double sigma_ = 1.0;
    int degree_ = 1;
    double offset_ = 0.0;
    std::shared_ptr<const BasisSet> basis_;
};

/// Kernel value K(x1, x2).
double kernel_eval(const Kernel& kernel, double x1, double x2);

/// Gram matrix G[i][j] = K(xs[i], ys[j]).
Matrix gram(const Kernel& kernel, const Vector& xs, const Vector& ys);

}  // namespace trajkit
