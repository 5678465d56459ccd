#include <doctest.h>

#include <Eigen/LU>

#include "support.hpp"
#include "trajkit/signal.hpp"

using namespace trajkit;
using trajkit::testing::random_signal;

TEST_CASE("hankel matches the window layout for a scalar signal") {
    const Signal x({1, 2, 3, 4, 5});
    const HankelMatrix h = hankel(x, 3);
    Matrix expected(3, 3);
    expected << 1, 2, 3, 2, 3, 4, 3, 4, 5;
    CHECK(h.entries == expected);
    CHECK(h.depth == 3);
    CHECK(h.source_dim == 1);
}

TEST_CASE("hankel stacks vector samples blockwise") {
    Matrix samples(2, 3);
    samples << 1, 0, 1, 0, 1, 1;
    const HankelMatrix h = hankel(Signal(samples), 2);
    Matrix expected(4, 2);
    expected << 1, 0, 0, 1, 0, 1, 1, 1;
    CHECK(h.entries == expected);
}

TEST_CASE("hankel handles the degenerate single-column case") {
    const HankelMatrix h = hankel(Signal({7}), 1);
    CHECK(h.entries.rows() == 1);
    CHECK(h.entries.cols() == 1);
    CHECK(h.entries(0, 0) == 7);
}

TEST_CASE("hankel rejects bad depths") {
    const Signal x({1, 2, 3});
    CHECK_THROWS_AS(hankel(x, 0), ArgumentError);
    CHECK_THROWS_AS(hankel(x, 4), DimensionError);
}

TEST_CASE("window stacks samples in time order") {
    const Signal x({1, 2, 3});
    CHECK(x.window(0, 2) == Vector(Eigen::Vector3d(1, 2, 3)));
    CHECK(x.window(1, 1) == Vector(Eigen::Matrix<double, 1, 1>(2)));

    Matrix samples(2, 2);
    samples << 1, 3, 2, 4;
    CHECK(Signal(samples).window(0, 1) == Vector(Eigen::Vector4d(1, 2, 3, 4)));

    CHECK_THROWS_AS(x.window(2, 1), ArgumentError);
    CHECK_THROWS_AS(x.window(0, 3), ArgumentError);
}

TEST_CASE("alternating signal is not persistently exciting of order 2") {
    const PersistenceReport report = is_persistently_exciting(Signal({1, -1, 1, -1}), 2);
    CHECK_FALSE(report.is_pe);
    CHECK(report.numerical_rank == 1);
    CHECK(report.required_rank == 2);
}

TEST_CASE("short impulse-like signal is persistently exciting of order 2") {
    const PersistenceReport report = is_persistently_exciting(Signal({1, 0, 0, 1}), 2);
    CHECK(report.is_pe);
    CHECK(report.numerical_rank == 2);
}

TEST_CASE("long random signal is persistently exciting of high order") {
    // Independent oracle: build the Hankel matrix by hand and take the rank
    // from a pivoted LU instead of the SVD path used by the implementation.
    Rng rng(11);
    std::vector<double> values(1000);
    for (double& v : values) v = rng.uniform(-1.0, 1.0);

    const Index L = 54;
    const Index cols = 1000 - L + 1;
    Matrix reference(L, cols);
    for (Index i = 0; i < L; ++i) {
        for (Index j = 0; j < cols; ++j) {
            reference(i, j) = values[static_cast<std::size_t>(i + j)];
        }
    }
    Eigen::FullPivLU<Matrix> lu(reference);
    lu.setThreshold(1e-10);
    REQUIRE(lu.rank() == L);

    CHECK(is_persistently_exciting(Signal(values), L).is_pe);
}

TEST_CASE("persistence check validates its arguments") {
    const Signal x({1, 2, 3});
    CHECK_THROWS_AS(is_persistently_exciting(x, 0), ArgumentError);
    CHECK_THROWS_AS(is_persistently_exciting(x, 2, -1.0), ArgumentError);
}

TEST_CASE("signals shorter than (d+1)L-1 are never persistently exciting") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Index d = 1 + static_cast<Index>(rng.uniform(0, 3));
        const Index L = 2 + static_cast<Index>(rng.uniform(0, 6));
        const Index limit = (d + 1) * L - 1;
        const Index N = 1 + static_cast<Index>(rng.uniform(0, static_cast<double>(limit - 1)));
        REQUIRE(N < limit);
        CHECK_FALSE(is_persistently_exciting(random_signal(d, N, rng), L).is_pe);
    }
}

TEST_CASE("the zero signal has numerical rank zero at every depth") {
    for (Index L : {1, 2, 5}) {
        const PersistenceReport report = is_persistently_exciting(Signal::zero(2, 8), L);
        CHECK(report.numerical_rank == 0);
        CHECK_FALSE(report.is_pe);
    }
}

TEST_CASE("columns of a deeper Hankel matrix restrict to columns of the shallow one") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Index d = 1 + static_cast<Index>(rng.uniform(0, 2));
        const Index N = 6 + static_cast<Index>(rng.uniform(0, 10));
        const Index L = 1 + static_cast<Index>(rng.uniform(0, static_cast<double>(N - 2)));
        const Signal x = random_signal(d, N, rng);
        const HankelMatrix shallow = hankel(x, L);
        const HankelMatrix deep = hankel(x, L + 1);
        for (Index j = 0; j < deep.cols(); ++j) {
            CHECK(deep.entries.col(j).head(d * L) == shallow.entries.col(j));
        }
    }
}

TEST_CASE("persistence of excitation is monotone in the order") {
    Rng rng(7);
    int pe_cases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Index d = 1 + static_cast<Index>(rng.uniform(0, 2));
        const Index L = 2 + static_cast<Index>(rng.uniform(0, 4));
        const Index N = (d + 1) * (L + 1) + static_cast<Index>(rng.uniform(0, 20));
        const Signal x = random_signal(d, N, rng);
        if (is_persistently_exciting(x, L + 1).is_pe) {
            ++pe_cases;
            CHECK(is_persistently_exciting(x, L).is_pe);
        }
    }
    CHECK(pe_cases > 50);  // random signals of sufficient length are PE almost surely
}

TEST_CASE("constant nonzero signals are exciting of order 1 but not of order 2") {
    const Signal c({3, 3, 3, 3, 3, 3});
    CHECK(is_persistently_exciting(c, 1).is_pe);
    CHECK_FALSE(is_persistently_exciting(c, 2).is_pe);
}

TEST_CASE("from_stacked inverts window stacking") {
    Rng rng(13);
    const Signal x = random_signal(3, 7, rng);
    const Signal rebuilt = Signal::from_stacked(x.stacked(), 3);
    CHECK(rebuilt == x);
    CHECK_THROWS_AS(Signal::from_stacked(Vector::Ones(7), 3), DimensionError);
}

TEST_CASE("trajectory requires equal input and output lengths") {
    CHECK_THROWS_AS(Trajectory(Signal({1, 2}), Signal({1, 2, 3})), DimensionError);
    const Trajectory t(Signal({1, 2}), Signal({3, 4}));
    CHECK(t.length() == 2);
    CHECK(t.slice(1, 1).u().sample(0)(0) == 2);
}
