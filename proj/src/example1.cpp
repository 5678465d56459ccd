#include "trajkit/example1.hpp"

#include "trajkit/rng.hpp"

namespace trajkit {

namespace {

Signal uniform_signal(Index length, double amplitude, std::uint64_t seed, Index rest = 0) {
    Rng rng(seed);
    Matrix samples(1, length);
    for (Index k = 0; k < length; ++k) {
        samples(0, k) = k < rest ? 0.0 : rng.uniform(-amplitude, amplitude);
    }
    return Signal(std::move(samples));
}

}  // namespace

double relative_rms_error(const Signal& predicted, const Signal& truth) {
    if (predicted.dim() != truth.dim() || predicted.length() != truth.length()) {
        throw DimensionError("relative_rms_error: signals have different shapes");
    }
    return (predicted.data() - truth.data()).norm() / truth.data().norm();
}

Example1Run run_example1(const Example1Config& config) {
    if (config.data_length < config.horizon) {
        throw ArgumentError("run_example1: data length must be at least the horizon");
    }

    // Independent streams for the record input, the measurement noise and the
    // test input, all derived from the one user-facing seed.
    const std::uint64_t data_seed = config.seed * 1000003 + 1;
    const std::uint64_t noise_seed = config.seed * 1000003 + 2;
    const std::uint64_t test_seed = config.seed * 1000003 + 3;

    const StateSpaceModel model = example1_model();
    const Vector rest = Vector::Zero(model.order());

    const Signal data_input =
        uniform_signal(config.data_length, config.data_amplitude, data_seed);
    const Signal clean_output = simulate(model, rest, data_input).y;
    const Signal measured_output = add_multiplicative_noise(
        clean_output,
        NoiseSpec{config.noise_ratio, noise_seed, config.noise_distribution});
    Trajectory data(data_input, measured_output);

    // The test run starts at rest: the first nu input samples are zero and the
    // initial output window is zero.
    const Signal test_input = uniform_signal(config.horizon, config.test_amplitude, test_seed,
                                             config.init_length);
    const Signal true_output = simulate(model, rest, test_input).y;
    const Trajectory initial_window(Signal::zero(1, config.init_length),
                                    Signal::zero(1, config.init_length));

    const DDSimResult result = ddsim_kernel(
        data, test_input, initial_window, config.lambda,
        Kernel::squared_exponential(config.kernel_sigma),
        Kernel::explicit_basis(BasisSet::identity()));

    Example1Run run{std::move(data), test_input, true_output, result.predicted_output,
                    relative_rms_error(result.predicted_output, true_output)};
    return run;
}

}  // namespace trajkit
