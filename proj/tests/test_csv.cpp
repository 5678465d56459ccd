#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "trajkit/csv.hpp"

using namespace trajkit;
using trajkit::testing::random_signal;

TEST_CASE("a small trajectory file parses into columns") {
    std::istringstream in("k,u_0,y_0\n0,1,2\n1,3,4\n2,5,6\n");
    const Trajectory traj = parse_trajectory_csv(in);
    CHECK(traj.length() == 3);
    CHECK(traj.u().data() == Matrix(Eigen::RowVector3d(1, 3, 5)));
    CHECK(traj.y().data() == Matrix(Eigen::RowVector3d(2, 4, 6)));
}

TEST_CASE("multi-channel headers determine the dimensions") {
    std::istringstream in("k,u_0,u_1,y_0\n0,1,2,3\n1,4,5,6\n");
    const Trajectory traj = parse_trajectory_csv(in);
    CHECK(traj.input_dim() == 2);
    CHECK(traj.output_dim() == 1);
    CHECK(traj.u().sample(1) == Vector(Eigen::Vector2d(4, 5)));
}

TEST_CASE("a missing time index is reported with the gap") {
    std::istringstream in("k,u_0,y_0\n0,1,2\n2,5,6\n");
    try {
        parse_trajectory_csv(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("expected k=1") != std::string::npos);
        CHECK(e.line() == 3);
    }
}

TEST_CASE("duplicate and out-of-order indices are rejected") {
    std::istringstream dup("k,u_0,y_0\n0,1,2\n0,1,2\n");
    CHECK_THROWS_AS(parse_trajectory_csv(dup), ParseError);
    std::istringstream backwards("k,u_0,y_0\n1,1,2\n0,1,2\n");
    CHECK_THROWS_AS(parse_trajectory_csv(backwards), ParseError);
}

TEST_CASE("malformed cells and headers are rejected with line numbers") {
    std::istringstream bad_header("time,u_0,y_0\n0,1,2\n");
    CHECK_THROWS_AS(parse_trajectory_csv(bad_header), ParseError);

    std::istringstream bad_width("k,u_0,y_0\n0,1\n");
    CHECK_THROWS_AS(parse_trajectory_csv(bad_width), ParseError);

    std::istringstream bad_cell("k,u_0,y_0\n0,abc,2\n");
    try {
        parse_trajectory_csv(bad_cell);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    std::istringstream empty("");
    CHECK_THROWS_AS(parse_trajectory_csv(empty), ParseError);
}

TEST_CASE("write then parse reproduces every value bit for bit") {
    Rng rng(120);
    for (int trial = 0; trial < 20; ++trial) {
        const Index m = 1 + static_cast<Index>(rng.uniform(0, 2));
        const Index p = 1 + static_cast<Index>(rng.uniform(0, 2));
        const Index N = 1 + static_cast<Index>(rng.uniform(0, 40));
        const Trajectory traj(random_signal(m, N, rng, 1e3), random_signal(p, N, rng, 1e-3));

        std::ostringstream out;
        write_trajectory_csv(out, traj);
        std::istringstream in(out.str());
        const Trajectory parsed = parse_trajectory_csv(in);
        CHECK(parsed == traj);
    }
}

TEST_CASE("format_double is shortest round-trip decimal") {
    CHECK(format_double(0.2) == "0.2");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
    CHECK(format_double(-0.0) == "-0");
}
