#include "trajkit/lift.hpp"

#include <cmath>
#include <charconv>

namespace trajkit {

BasisSet::BasisSet(std::vector<ScalarFunction> functions, std::vector<std::string> names)
    : functions_(std::move(functions)), names_(std::move(names)) {
    if (functions_.empty()) {
        throw ArgumentError("BasisSet: needs at least one function");
    }
    for (const ScalarFunction& f : functions_) {
        if (!f) throw ArgumentError("BasisSet: empty function");
    }
    if (names_.empty()) {
        names_.assign(functions_.size(), "custom");
    }
    if (names_.size() != functions_.size()) {
        throw ArgumentError("BasisSet: names and functions must have equal length");
    }
}

BasisSet BasisSet::identity() {
    return BasisSet({[](double x) { return x; }}, {"identity"});
}

BasisSet BasisSet::monomials(int max_degree, bool include_constant) {
    if (max_degree < (include_constant ? 0 : 1)) {
        throw ArgumentError("BasisSet::monomials: degree range is empty");
    }
    std::vector<ScalarFunction> fns;
    std::vector<std::string> names;
    for (int k = include_constant ? 0 : 1; k <= max_degree; ++k) {
        fns.push_back([k](double x) { return std::pow(x, k); });
        names.push_back(k == 0 ? "one" : (k == 1 ? "identity" : "u^" + std::to_string(k)));
    }
    return BasisSet(std::move(fns), std::move(names));
}

BasisSet BasisSet::from_names(const std::vector<std::string>& tokens) {
    std::vector<ScalarFunction> fns;
    std::vector<std::string> names;
    auto add = [&](ScalarFunction f, std::string name) {
        fns.push_back(std::move(f));
        names.push_back(std::move(name));
    };
    for (const std::string& token : tokens) {
        if (token == "identity") {
            add([](double x) { return x; }, "identity");
        } else if (token == "one") {
            add([](double) { return 1.0; }, "one");
        } else if (token == "sin") {
            add([](double x) { return std::sin(x); }, "sin");
        } else if (token == "cos") {
            add([](double x) { return std::cos(x); }, "cos");
        } else if (token.rfind("u^", 0) == 0 || token.rfind("poly:", 0) == 0) {
            const bool expand = token.rfind("poly:", 0) == 0;
            const std::string digits = token.substr(expand ? 5 : 2);
            int k = -1;
            const auto [ptr, ec] =
                std::from_chars(digits.data(), digits.data() + digits.size(), k);
            if (ec != std::errc() || ptr != digits.data() + digits.size() || k < 0) {
                throw ArgumentError("BasisSet: malformed basis token '" + token + "'");
            }
            if (expand) {
                for (int j = 0; j <= k; ++j) {
                    add([j](double x) { return std::pow(x, j); },
                        j == 0 ? "one" : (j == 1 ? "identity" : "u^" + std::to_string(j)));
                }
            } else {
                add([k](double x) { return std::pow(x, k); }, "u^" + std::to_string(k));
            }
        } else {
            throw ArgumentError("BasisSet: unknown basis token '" + token +
                                "' (expected identity, one, sin, cos, u^k or poly:k)");
        }
    }
    return BasisSet(std::move(fns), std::move(names));
}

double BasisSet::evaluate(Index i, double x) const {
    if (i < 0 || i >= count()) {
        throw ArgumentError("BasisSet::evaluate: index out of range");
    }
    return functions_[static_cast<std::size_t>(i)](x);
}

Vector BasisSet::lift(double x) const {
    Vector v(count());
    for (Index i = 0; i < count(); ++i) {
        v(i) = functions_[static_cast<std::size_t>(i)](x);
    }
    return v;
}

bool BasisSet::is_identity() const { return count() == 1 && names_[0] == "identity"; }

namespace {

Signal lift_scalar_signal(const Signal& x, const BasisSet& basis, const char* what) {
    if (x.dim() != 1) {
        throw DimensionError(std::string(what) + ": requires a scalar signal, got dimension " +
                             std::to_string(x.dim()));
    }
    Matrix lifted(basis.count(), x.length());
    for (Index k = 0; k < x.length(); ++k) {
        lifted.col(k) = basis.lift(x.data()(0, k));
    }
    return Signal(std::move(lifted));
}

}  // namespace

Signal lift_input(const Signal& u, const BasisSet& basis) {
    return lift_scalar_signal(u, basis, "lift_input");
}

Signal lift_output(const Signal& y, const BasisSet& basis) {
    return lift_scalar_signal(y, basis, "lift_output");
}

Kernel Kernel::squared_exponential(double sigma) {
    if (sigma <= 0.0) {
        throw ArgumentError("Kernel::squared_exponential: sigma must be > 0");
    }
    Kernel k;
    k.kind_ = Kind::SquaredExponential;
    k.sigma_ = sigma;
    return k;
}

Kernel Kernel::polynomial(int degree, double offset) {
    if (degree < 1) {
        throw ArgumentError("Kernel::polynomial: degree must be >= 1");
    }
    if (offset < 0.0) {
        throw ArgumentError("Kernel::polynomial: offset must be >= 0");
    }
    Kernel k;
    k.kind_ = Kind::Polynomial;
    k.degree_ = degree;
    k.offset_ = offset;
    return k;
}

Kernel Kernel::explicit_basis(BasisSet basis) {
    Kernel k;
    k.kind_ = Kind::Explicit;
    k.basis_ = std::make_shared<const BasisSet>(std::move(basis));
    return k;
}

double Kernel::evaluate(double x1, double x2) const {
    switch (kind_) {
        case Kind::SquaredExponential: {
            const double d = x1 - x2;
            return std::exp(-d * d / (2.0 * sigma_ * sigma_));
        }
        case Kind::Polynomial:
            return std::pow(x1 * x2 + offset_, degree_);
        case Kind::Explicit:
            return basis_->lift(x1).dot(basis_->lift(x2));
    }
    return 0.0;  // unreachable
}

double kernel_eval(const Kernel& kernel, double x1, double x2) {
    return kernel.evaluate(x1, x2);
}

Matrix gram(const Kernel& kernel, const Vector& xs, const Vector& ys) {
    Matrix g(xs.size(), ys.size());
    if (kernel.kind() == Kernel::Kind::Explicit) {
        // Lift each sample once instead of twice per entry.
        const BasisSet& basis = *kernel.basis();
        Matrix lx(basis.count(), xs.size());
        Matrix ly(basis.count(), ys.size());
        for (Index i = 0; i < xs.size(); ++i) lx.col(i) = basis.lift(xs(i));
        for (Index j = 0; j < ys.size(); ++j) ly.col(j) = basis.lift(ys(j));
        for (Index i = 0; i < xs.size(); ++i) {
            for (Index j = 0; j < ys.size(); ++j) {
                g(i, j) = lx.col(i).dot(ly.col(j));
            }
        }
        return g;
    }
    for (Index i = 0; i < xs.size(); ++i) {
        for (Index j = 0; j < ys.size(); ++j) {
            g(i, j) = kernel.evaluate(xs(i), ys(j));
        }
    }
    return g;
}

}  // namespace trajkit
