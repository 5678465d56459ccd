#pragma once

#include <cstdint>

#include "trajkit/ddsim.hpp"
#include "trajkit/oracle.hpp"

namespace trajkit {

/// End-to-end kernel simulation benchmark on the built-in reference system:
/// collect a noisy record from an open-loop run, then predict the response to
/// a fresh random input from rest using the squared-exponential kernel solver,
/// and compare against the noise-free simulator.
struct Example1Config {
    Index data_length = 1000;  // N
    double noise_ratio = 0.05;
    NoiseDistribution noise_distribution = NoiseDistribution::Uniform;
    std::uint64_t seed = 0;
    Index horizon = 50;      // L
    Index init_length = 4;   // nu, matches the system order
    double lambda = 10.0;
    double kernel_sigma = 1.0;
    double data_amplitude = 1.0;  // data input uniform on [-a, a]
    double test_amplitude = 0.3;  // test input uniform on [-a, a]
};

struct Example1Run {
    Trajectory data;          // measured record (noisy outputs)
    Signal test_input;        // fresh input, at rest over the initial window
    Signal true_output;       // noise-free simulator response
    Signal predicted_output;  // kernel data-driven estimate
    double relative_rms = 0.0;  // ||predicted - true|| / ||true||
};

Example1Run run_example1(const Example1Config& config);

/// ||a - b|| / ||b|| over all samples.
double relative_rms_error(const Signal& predicted, const Signal& truth);

}  // namespace trajkit
