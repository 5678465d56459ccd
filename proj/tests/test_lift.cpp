#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "support.hpp"
#include "trajkit/lift.hpp"
#include "trajkit/trajspace.hpp"

using namespace trajkit;
using trajkit::testing::random_signal;
using trajkit::testing::random_vector;

TEST_CASE("identity lifting returns the signal itself") {
    Rng rng(70);
    const Signal u = random_signal(1, 15, rng);
    CHECK(lift_input(u, BasisSet::identity()) == u);
    CHECK(BasisSet::identity().is_identity());
}

TEST_CASE("monomial lifting evaluates the powers") {
    const BasisSet basis = BasisSet::monomials(2);
    const Signal v = lift_input(Signal({2.0}), basis);
    CHECK(v.dim() == 3);
    CHECK(v.sample(0) == Vector(Eigen::Vector3d(1, 2, 4)));
}

TEST_CASE("sine lifting evaluates the function") {
    const BasisSet basis = BasisSet::from_names({"sin"});
    const Signal v = lift_input(Signal({std::numbers::pi / 2}), basis);
    CHECK(v.sample(0)(0) == doctest::Approx(1.0));
    CHECK_FALSE(basis.is_identity());
}

TEST_CASE("output lifting mirrors input lifting") {
    const Signal y({0.5, -0.25, 2.0});
    CHECK(lift_output(y, BasisSet::identity()) == y);
    const Signal z = lift_output(y, BasisSet::monomials(2));
    CHECK(z.sample(2) == Vector(Eigen::Vector3d(1, 2, 4)));
    CHECK(lift_output(Signal({std::numbers::pi / 2}), BasisSet::from_names({"sin"}))
              .sample(0)(0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(lift_output(Signal(Matrix::Ones(2, 3)), BasisSet::identity()),
                    DimensionError);
}

TEST_CASE("basis token parsing") {
    const BasisSet poly = BasisSet::from_names({"poly:2"});
    CHECK(poly.count() == 3);
    const BasisSet mixed = BasisSet::from_names({"one", "identity", "u^3", "cos"});
    CHECK(mixed.lift(2.0) ==
          Vector(Eigen::Vector4d(1.0, 2.0, 8.0, std::cos(2.0))));
    CHECK_THROWS_AS(BasisSet::from_names({"tanh"}), ArgumentError);
    CHECK_THROWS_AS(BasisSet::from_names({"u^x"}), ArgumentError);
    CHECK_THROWS_AS(BasisSet(std::vector<ScalarFunction>{}), ArgumentError);
}

TEST_CASE("squared exponential kernel values") {
    const Kernel k = Kernel::squared_exponential(1.0);
    CHECK(k(0.7, 0.7) == 1.0);
    CHECK(k(-3.2, -3.2) == 1.0);
    CHECK(k(0.0, 1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(Kernel::squared_exponential(0.0), ArgumentError);
    CHECK_THROWS_AS(Kernel::squared_exponential(-1.0), ArgumentError);
}

TEST_CASE("explicit kernel is the dot product of liftings") {
    const Kernel k = Kernel::explicit_basis(BasisSet::from_names({"sin"}));
    CHECK(k(std::numbers::pi / 2, std::numbers::pi / 2) == doctest::Approx(1.0));
    CHECK(k(0.3, 0.8) == std::sin(0.3) * std::sin(0.8));
    CHECK(Kernel::explicit_basis(BasisSet::identity()).is_identity_basis());
    CHECK_FALSE(Kernel::explicit_basis(BasisSet::monomials(2)).is_identity_basis());
}

TEST_CASE("polynomial kernel validates its parameters") {
    const Kernel k = Kernel::polynomial(2, 1.0);
    CHECK(k(1.0, 2.0) == 9.0);
    CHECK_THROWS_AS(Kernel::polynomial(0), ArgumentError);
    CHECK_THROWS_AS(Kernel::polynomial(2, -1.0), ArgumentError);
}

TEST_CASE("gram matrix over identical samples is symmetric with unit diagonal") {
    Rng rng(71);
    const Vector xs = random_vector(12, rng, 2.0);
    const Matrix g = gram(Kernel::squared_exponential(0.7), xs, xs);
    CHECK((g - g.transpose()).lpNorm<Eigen::Infinity>() == 0.0);
    CHECK((g.diagonal().array() == 1.0).all());
}

TEST_CASE("gram of an explicit basis equals the product of lifted stacks") {
    Rng rng(72);
    const BasisSet basis = BasisSet::from_names({"one", "identity"});
    const Kernel k = Kernel::explicit_basis(basis);
    const Vector xs = random_vector(8, rng);
    const Vector ys = random_vector(5, rng);

    Matrix vx(2, 8), wy(2, 5);
    for (Index i = 0; i < 8; ++i) vx.col(i) = basis.lift(xs(i));
    for (Index j = 0; j < 5; ++j) wy.col(j) = basis.lift(ys(j));
    const Matrix direct = vx.transpose() * wy;

    CHECK((gram(k, xs, ys) - direct).lpNorm<Eigen::Infinity>() < 1e-12);
}

TEST_CASE("gram of a row of samples evaluates the kernel entrywise") {
    Vector xs(1), ys(2);
    xs << 0.0;
    ys << 0.0, 1.0;
    const Matrix g = gram(Kernel::squared_exponential(1.0), xs, ys);
    CHECK(g(0, 0) == 1.0);
    CHECK(g(0, 1) == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("kernels are symmetric") {
    Rng rng(73);
    const Kernel kernels[] = {Kernel::squared_exponential(0.8), Kernel::polynomial(3, 0.5),
                              Kernel::explicit_basis(BasisSet::from_names({"sin", "cos"}))};
    for (const Kernel& k : kernels) {
        for (int trial = 0; trial < 100; ++trial) {
            const double a = rng.uniform(-3.0, 3.0);
            const double b = rng.uniform(-3.0, 3.0);
            CHECK(k(a, b) == doctest::Approx(k(b, a)).epsilon(1e-14));
        }
    }
}

TEST_CASE("gram matrices are positive semidefinite") {
    Rng rng(74);
    const Kernel kernels[] = {Kernel::squared_exponential(1.0), Kernel::polynomial(2, 1.0),
                              Kernel::explicit_basis(BasisSet::monomials(3))};
    for (const Kernel& k : kernels) {
        for (int trial = 0; trial < 34; ++trial) {
            const Index count = 2 + static_cast<Index>(rng.uniform(0, 48));
            const Vector xs = random_vector(count, rng);
            const Matrix g = gram(k, xs, xs);
            Eigen::SelfAdjointEigenSolver<Matrix> eig((g + g.transpose()) / 2.0);
            CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
        }
    }
}

TEST_CASE("explicit kernel values match lift dot products exactly") {
    Rng rng(75);
    const BasisSet basis = BasisSet::from_names({"one", "identity", "u^2", "sin"});
    const Kernel k = Kernel::explicit_basis(basis);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = rng.uniform(-2.0, 2.0);
        const double b = rng.uniform(-2.0, 2.0);
        CHECK(k(a, b) == basis.lift(a).dot(basis.lift(b)));
    }
}

TEST_CASE("input lifting turns the Hammerstein system into a linear one") {
    Rng rng(76);
    const StateSpaceModel model = example1_model();
    const BasisSet basis = BasisSet::from_names({"sin"});

    const Signal u_data = random_signal(1, 250, rng);
    const Signal y_data = simulate(model, Vector::Zero(4), u_data).y;
    const Signal v_data = lift_input(u_data, basis);
    const TrajectoryBasis lifted(Trajectory(v_data, y_data), 15, 4);
    REQUIRE(lifted.pe_verified());

    for (int trial = 0; trial < 10; ++trial) {
        const Signal u_new = random_signal(1, 15, rng);
        const Signal y_new = simulate(model, random_vector(4, rng), u_new).y;
        const Trajectory candidate(lift_input(u_new, basis), y_new);
        // Nonlinear trajectory <=> lifted pair lies in the lifted span.
        CHECK(lifted.membership(candidate).is_member);

        Matrix corrupted = y_new.data();
        corrupted(0, 6) += 0.5;
        CHECK_FALSE(
            lifted.membership(Trajectory(lift_input(u_new, basis), Signal(corrupted)))
                .is_member);
    }
}

TEST_CASE("output lifting certifies Wiener trajectories one way only") {
    Rng rng(77);
    const StateSpaceModel linear = example1_model().linear_part();
    // Wiener system with invertible output map w -> w^3; its inverse is
    // spanned by the single basis function cbrt.
    const StateSpaceModel wiener(linear.A(), linear.B(), linear.C(), linear.D(), nullptr, 1,
                                 componentwise([](double w) { return w * w * w; }), 1);
    const BasisSet inverse_basis({[](double y) { return std::cbrt(y); }}, {"cbrt"});

    const Signal u_data = random_signal(1, 250, rng);
    const Signal y_data = simulate(wiener, Vector::Zero(4), u_data).y;
    const Signal z_data = lift_output(y_data, inverse_basis);
    const TrajectoryBasis lifted(Trajectory(u_data, z_data), 15, 4);
    REQUIRE(lifted.pe_verified());

    SUBCASE("candidates passing the lifted test are Wiener trajectories") {
        for (int trial = 0; trial < 10; ++trial) {
            const AlphaVector alpha = random_vector(lifted.column_count(), rng, 0.5);
            const Trajectory realized = lifted.realize(alpha);
            // Candidate output with lift_output(y) equal to the realized z.
            Matrix y(1, realized.length());
            for (Index k = 0; k < realized.length(); ++k) {
                const double z = realized.y().data()(0, k);
                y(0, k) = z * z * z;
            }
            const Trajectory candidate(realized.u(), Signal(y));
            REQUIRE(lifted.membership(Trajectory(candidate.u(),
                                                 lift_output(candidate.y(), inverse_basis)))
                        .is_member);

            // Oracle verification of trajectory-hood.
            const Vector x0 =
                reconstruct_initial_state(linear, Trajectory(realized.u(), realized.y())).x0;
            const Signal resim = simulate(wiener, x0, candidate.u()).y;
            CHECK((resim.data() - candidate.y().data()).lpNorm<Eigen::Infinity>() < 1e-6);
        }
    }

    SUBCASE("true trajectories can fail the lifted test under a redundant basis") {
        // Identity output map with basis {y, y^2}: a legitimate inverse
        // decomposition (coefficients 1 and 0), but the y^2 component is not
        // the output of any linear system, so true trajectories are not
        // spanned by the lifted data windows. A short record keeps the
        // quadratic rows from absorbing arbitrary candidates through the
        // null space of the linear rows.
        const BasisSet redundant = BasisSet::from_names({"identity", "u^2"});
        const Signal u_short = u_data.slice(0, 39);
        const Signal w_data = simulate(linear, Vector::Zero(4), u_short).y;
        const TrajectoryBasis lifted2(
            Trajectory(u_short, lift_output(w_data, redundant)), 15, 4);
        REQUIRE(lifted2.pe_verified());

        int failures = 0;
        for (int trial = 0; trial < 10; ++trial) {
            const Signal u_new = random_signal(1, 15, rng);
            const Signal y_new = simulate(linear, random_vector(4, rng), u_new).y;
            if (!lifted2.membership(Trajectory(u_new, lift_output(y_new, redundant)))
                     .is_member) {
                ++failures;
            }
        }
        CHECK(failures == 10);
    }
}
