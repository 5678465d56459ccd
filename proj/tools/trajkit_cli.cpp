// Command-line front end: trajectory files in, verdicts and trajectory /
// plot-data files out. Exit codes: 0 success, 1 domain failure (negative
// verdict, weave or recovery failure), 2 usage or file-format error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trajkit/trajkit.hpp"

namespace {

using json = nlohmann::json;
using namespace trajkit;

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

void emit_error(const std::string& type, const std::string& message) {
    std::cerr << json{{"error", {{"type", type}, {"message", message}}}}.dump() << "\n";
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) {
        std::cout << "warning: " << w << "\n";
    }
}

Vector parse_vector(const std::string& text) {
    std::vector<double> values;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t pos = 0;
        values.push_back(std::stod(token, &pos));
        if (pos != token.size()) {
            throw ArgumentError("malformed number '" + token + "' in vector");
        }
    }
    return Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateOptions {
    std::string output;
    std::string input_file;
    Index random_length = 0;
    double amplitude = 1.0;
    std::uint64_t seed = 0;
    bool linear = false;
    std::string x0_text;
    double noise_ratio = 0.0;
    std::string noise_dist = "uniform";
    std::uint64_t noise_seed = 0;
};

int run_simulate(const SimulateOptions& opt) {
    StateSpaceModel model = example1_model();
    if (opt.linear) {
        model = model.linear_part();
    }

    Signal input = [&] {
        if (!opt.input_file.empty()) {
            return parse_trajectory_csv(opt.input_file).u();
        }
        if (opt.random_length < 1) {
            throw ArgumentError("simulate: give --input or --random-input N");
        }
        Rng rng(opt.seed);
        Matrix samples(1, opt.random_length);
        for (Index k = 0; k < opt.random_length; ++k) {
            samples(0, k) = rng.uniform(-opt.amplitude, opt.amplitude);
        }
        return Signal(std::move(samples));
    }();

    const Vector x0 = opt.x0_text.empty() ? Vector(Vector::Zero(model.order()))
                                          : parse_vector(opt.x0_text);
    Signal output = simulate(model, x0, input).y;
    if (opt.noise_ratio > 0.0) {
        const NoiseDistribution dist = opt.noise_dist == "normal" ? NoiseDistribution::Normal
                                                                  : NoiseDistribution::Uniform;
        output = add_multiplicative_noise(output, NoiseSpec{opt.noise_ratio, opt.noise_seed, dist});
    }
    write_trajectory_csv(opt.output, Trajectory(input, output));
    std::cout << "wrote " << input.length() << " samples to " << opt.output << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// check-pe

struct CheckPeOptions {
    std::string data_file;
    Index order = 0;
    std::string which = "u";
    double rank_tolerance = 1e-10;
};

int run_check_pe(const CheckPeOptions& opt) {
    const Trajectory data = parse_trajectory_csv(opt.data_file);
    const Signal& signal = opt.which == "y" ? data.y() : data.u();
    const PersistenceReport report =
        is_persistently_exciting(signal, opt.order, opt.rank_tolerance);
    std::cout << "signal: " << opt.which << " (dimension " << signal.dim() << ", length "
              << signal.length() << ")\n"
              << "order: " << opt.order << "\n"
              << "numerical rank: " << report.numerical_rank << " of " << report.required_rank
              << " required\n"
              << "persistently exciting: " << (report.is_pe ? "yes" : "no") << "\n";
    return report.is_pe ? kExitOk : kExitDomainFailure;
}

// ---------------------------------------------------------------------------
// membership

struct MembershipOptions {
    std::string data_file;
    std::string candidate_file;
    Index n_bound = 0;
    double tolerance = 1e-8;
};

int run_membership(const MembershipOptions& opt) {
    const Trajectory data = parse_trajectory_csv(opt.data_file);
    const Trajectory candidate = parse_trajectory_csv(opt.candidate_file);
    const TrajectoryBasis basis(data, candidate.length(), opt.n_bound);
    const MembershipResult result = basis.membership(candidate, opt.tolerance);

    if (!result.pe_verified) {
        std::cout << "warning: data input is not persistently exciting of order L + n_bound; "
                     "a negative verdict is inconclusive\n";
    }
    std::cout << "residual: " << format_double(result.residual) << "\n"
              << "member: " << (result.is_member ? "yes" : "no") << "\n";
    return result.is_member ? kExitOk : kExitDomainFailure;
}

// ---------------------------------------------------------------------------
// weave

struct WeaveOptions {
    std::string data_file;
    std::string target_file;
    Index horizon = 0;
    Index n_bound = 0;
    Index segments = 1;
    double tolerance = 1e-8;
    std::string output;
};

int run_weave(const WeaveOptions& opt) {
    const Trajectory data = parse_trajectory_csv(opt.data_file);
    const Trajectory target = parse_trajectory_csv(opt.target_file);
    const WeavePlan plan(TrajectoryBasis(data, opt.horizon, opt.n_bound), opt.segments);

    if (!plan.basis().pe_verified()) {
        std::cout << "warning: data input is not persistently exciting of order L + n_bound; "
                     "a negative verdict is inconclusive\n";
    }
    const WeaveSolution solution = solve_weave(plan, target, opt.tolerance);
    const JunctionReport junctions =
        check_weave_constraints(plan, solution.coefficients, opt.tolerance);
    std::cout << "extended horizon: " << plan.extended_horizon() << "\n"
              << "residual: " << format_double(solution.residual) << "\n";
    for (std::size_t i = 0; i < junctions.input_residuals.size(); ++i) {
        std::cout << "junction " << i + 1 << ": input "
                  << format_double(junctions.input_residuals[i]) << ", output "
                  << format_double(junctions.output_residuals[i]) << "\n";
    }
    std::cout << "target is a trajectory: " << (solution.within_tolerance ? "yes" : "no")
              << "\n";
    if (!opt.output.empty() && solution.within_tolerance) {
        write_trajectory_csv(opt.output, assemble(plan, solution.coefficients, opt.tolerance));
        std::cout << "wrote assembled trajectory to " << opt.output << "\n";
    }
    return solution.within_tolerance ? kExitOk : kExitDomainFailure;
}

// ---------------------------------------------------------------------------
// ddsim / ddsim-kernel

struct DDSimOptions {
    std::string data_file;
    std::string request_file;
    Index nu = 0;
    Index n_bound = 0;
    double lambda = 0.0;
    std::string output;
};

struct KernelOptions {
    std::string input_kind = "se";
    double sigma = 1.0;
    int degree = 2;
    double offset = 1.0;
    std::vector<std::string> input_basis;
    std::vector<std::string> output_basis = {"identity"};
};

Kernel make_kernel(const std::string& kind, const KernelOptions& opt, bool input_side) {
    if (kind == "se") {
        return Kernel::squared_exponential(opt.sigma);
    }
    if (kind == "poly") {
        return Kernel::polynomial(opt.degree, opt.offset);
    }
    if (kind == "explicit") {
        const std::vector<std::string>& tokens = input_side ? opt.input_basis : opt.output_basis;
        if (tokens.empty()) {
            throw ArgumentError("explicit kernel needs basis tokens (--input-basis)");
        }
        return Kernel::explicit_basis(BasisSet::from_names(tokens));
    }
    throw ArgumentError("unknown kernel kind '" + kind + "' (expected se, poly or explicit)");
}

int run_ddsim(const DDSimOptions& opt, const KernelOptions* kernel_opt) {
    const Trajectory data = parse_trajectory_csv(opt.data_file);
    const Trajectory request = parse_trajectory_csv(opt.request_file);
    if (opt.nu < 1 || opt.nu > request.length()) {
        throw ArgumentError("ddsim: --nu must be in [1, request length]");
    }
    const Signal& new_input = request.u();
    const Trajectory initial_window = request.slice(0, opt.nu - 1);

    DDSimResult result = [&] {
        if (kernel_opt == nullptr) {
            if (opt.lambda > 0.0) {
                return ddsim_regularized(
                    DDSimProblem(data, new_input, initial_window, opt.lambda));
            }
            return ddsim_exact(data, new_input, initial_window, opt.n_bound);
        }
        return ddsim_kernel(data, new_input, initial_window, opt.lambda,
                            make_kernel(kernel_opt->input_kind, *kernel_opt, true),
                            Kernel::explicit_basis(
                                BasisSet::from_names(kernel_opt->output_basis)));
    }();

    print_warnings(result.warnings);
    std::cout << "residual: " << format_double(result.residual) << "\n"
              << "objective: " << format_double(result.objective_value) << "\n";
    if (!opt.output.empty()) {
        write_trajectory_csv(opt.output, Trajectory(new_input, result.predicted_output));
        std::cout << "wrote predicted trajectory to " << opt.output << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// example1

struct Example1Options {
    Example1Config config;
    std::string output;
};

int run_example1_command(const Example1Options& opt) {
    const Example1Run run = run_example1(opt.config);
    std::cout << "relative rms error: " << format_double(run.relative_rms) << "\n";
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) {
            throw ParseError(opt.output + ": cannot open file for writing", 0);
        }
        out << "k,u,y_true,y_pred\n";
        for (Index k = 0; k < run.test_input.length(); ++k) {
            out << k << "," << format_double(run.test_input.data()(0, k)) << ","
                << format_double(run.true_output.data()(0, k)) << ","
                << format_double(run.predicted_output.data()(0, k)) << "\n";
        }
        std::cout << "wrote predicted-vs-true data to " << opt.output << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trajectory-based analysis and data-driven simulation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global options like --config after the subcommand
    app.set_config("--config", "", "Configuration file (INI; sections per subcommand)");
    app.allow_config_extras(CLI::config_extras_mode::ignore_all);

    SimulateOptions sim;
    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Simulate the built-in reference system");
    simulate_cmd->add_option("--output", sim.output, "Trajectory CSV to write")->required();
    simulate_cmd->add_option("--input", sim.input_file, "Trajectory CSV providing the input");
    simulate_cmd->add_option("--random-input", sim.random_length,
                             "Generate a random input of this length");
    simulate_cmd->add_option("--amplitude", sim.amplitude, "Random input lies in [-a, a]");
    simulate_cmd->add_option("--seed", sim.seed, "Seed for the random input")
        ->envname("TRAJKIT_SEED");
    simulate_cmd->add_flag("--linear", sim.linear, "Drop the input nonlinearity");
    simulate_cmd->add_option("--x0", sim.x0_text, "Initial state, comma separated (default 0)");
    simulate_cmd->add_option("--noise-ratio", sim.noise_ratio,
                             "Multiplicative output noise ratio");
    simulate_cmd->add_option("--noise-dist", sim.noise_dist, "uniform or normal")
        ->check(CLI::IsMember({"uniform", "normal"}));
    simulate_cmd->add_option("--noise-seed", sim.noise_seed, "Seed for the noise stream");

    CheckPeOptions pe;
    CLI::App* check_pe_cmd =
        app.add_subcommand("check-pe", "Check persistence of excitation of a signal");
    check_pe_cmd->add_option("--data", pe.data_file, "Trajectory CSV")->required();
    check_pe_cmd->add_option("--order", pe.order, "Excitation order L")->required();
    check_pe_cmd->add_option("--signal", pe.which, "Which signal to check: u or y")
        ->check(CLI::IsMember({"u", "y"}));
    check_pe_cmd->add_option("--rank-tolerance", pe.rank_tolerance, "Relative rank tolerance");

    MembershipOptions member;
    CLI::App* membership_cmd =
        app.add_subcommand("membership", "Test whether a candidate is a system trajectory");
    membership_cmd->add_option("--data", member.data_file, "Measured trajectory CSV")
        ->required();
    membership_cmd->add_option("--candidate", member.candidate_file, "Candidate trajectory CSV")
        ->required();
    membership_cmd->add_option("--n-bound", member.n_bound, "Upper bound on the system order")
        ->required();
    membership_cmd->add_option("--tolerance", member.tolerance, "Relative residual tolerance");

    WeaveOptions weave;
    CLI::App* weave_cmd =
        app.add_subcommand("weave", "Fit and assemble overlapping trajectory segments");
    weave_cmd->add_option("--data", weave.data_file, "Measured trajectory CSV")->required();
    weave_cmd->add_option("--target", weave.target_file, "Target trajectory CSV")->required();
    weave_cmd->add_option("--horizon", weave.horizon, "Segment horizon L")->required();
    weave_cmd->add_option("--n-bound", weave.n_bound, "Upper bound on the system order")
        ->required();
    weave_cmd->add_option("--segments", weave.segments, "Number of segments")->required();
    weave_cmd->add_option("--tolerance", weave.tolerance, "Residual tolerance");
    weave_cmd->add_option("--output", weave.output, "Write the assembled trajectory here");

    DDSimOptions ddsim_opt;
    CLI::App* ddsim_cmd = app.add_subcommand(
        "ddsim", "Data-driven simulation (exact or ridge-regularized)");
    ddsim_cmd->add_option("--data", ddsim_opt.data_file, "Measured trajectory CSV")->required();
    ddsim_cmd
        ->add_option("--request", ddsim_opt.request_file,
                     "Trajectory CSV of length L: inputs over the whole horizon, outputs "
                     "meaningful over the first nu rows")
        ->required();
    ddsim_cmd->add_option("--nu", ddsim_opt.nu, "Initial window length")->required();
    ddsim_cmd->add_option("--n-bound", ddsim_opt.n_bound, "Upper bound on the system order")
        ->required();
    ddsim_cmd->add_option("--lambda", ddsim_opt.lambda,
                          "Ridge weight; 0 gives the exact minimum-norm solve");
    ddsim_cmd->add_option("--output", ddsim_opt.output, "Write the predicted trajectory here");

    DDSimOptions kernel_sim_opt;
    KernelOptions kernel_opt;
    CLI::App* kernel_cmd =
        app.add_subcommand("ddsim-kernel", "Kernelized data-driven simulation");
    kernel_cmd->add_option("--data", kernel_sim_opt.data_file, "Measured trajectory CSV")
        ->required();
    kernel_cmd->add_option("--request", kernel_sim_opt.request_file, "Trajectory CSV of length L")
        ->required();
    kernel_cmd->add_option("--nu", kernel_sim_opt.nu, "Initial window length")->required();
    kernel_cmd->add_option("--lambda", kernel_sim_opt.lambda, "Ridge weight")->required();
    kernel_cmd->add_option("--input-kernel", kernel_opt.input_kind, "se, poly or explicit")
        ->check(CLI::IsMember({"se", "poly", "explicit"}));
    kernel_cmd->add_option("--sigma", kernel_opt.sigma, "Width of the se kernel");
    kernel_cmd->add_option("--degree", kernel_opt.degree, "Degree of the poly kernel");
    kernel_cmd->add_option("--offset", kernel_opt.offset, "Offset of the poly kernel");
    kernel_cmd->add_option("--input-basis", kernel_opt.input_basis,
                           "Basis tokens for an explicit input kernel");
    kernel_cmd->add_option("--output-basis", kernel_opt.output_basis,
                           "Basis tokens for the output lifting (default identity)");
    kernel_cmd->add_option("--output", kernel_sim_opt.output,
                           "Write the predicted trajectory here");

    Example1Options ex1;
    CLI::App* example1_cmd = app.add_subcommand(
        "example1", "End-to-end kernel simulation benchmark on the reference system");
    example1_cmd->add_option("--seed", ex1.config.seed, "Seed for data, noise and test input")
        ->envname("TRAJKIT_SEED");
    example1_cmd->add_option("--n", ex1.config.data_length, "Data record length");
    example1_cmd->add_option("--noise-ratio", ex1.config.noise_ratio, "Measurement noise ratio");
    example1_cmd->add_option("--lambda", ex1.config.lambda, "Ridge weight");
    example1_cmd->add_option("--sigma", ex1.config.kernel_sigma, "Width of the se kernel");
    example1_cmd->add_option("--horizon", ex1.config.horizon, "Prediction horizon L");
    example1_cmd->add_option("--nu", ex1.config.init_length, "Initial window length");
    example1_cmd->add_option("--output", ex1.output, "Write k,u,y_true,y_pred data here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (simulate_cmd->parsed()) return run_simulate(sim);
        if (check_pe_cmd->parsed()) return run_check_pe(pe);
        if (membership_cmd->parsed()) return run_membership(member);
        if (weave_cmd->parsed()) return run_weave(weave);
        if (ddsim_cmd->parsed()) return run_ddsim(ddsim_opt, nullptr);
        if (kernel_cmd->parsed()) return run_ddsim(kernel_sim_opt, &kernel_opt);
        if (example1_cmd->parsed()) return run_example1_command(ex1);
    } catch (const ParseError& e) {
        emit_error("ParseError", e.what());
        return kExitUsage;
    } catch (const ArgumentError& e) {
        emit_error("ArgumentError", e.what());
        return kExitUsage;
    } catch (const WeaveError& e) {
        emit_error("WeaveError", e.what());
        return kExitDomainFailure;
    } catch (const ObservabilityError& e) {
        emit_error("ObservabilityError", e.what());
        return kExitDomainFailure;
    } catch (const RecoveryError& e) {
        emit_error("RecoveryError", e.what());
        return kExitDomainFailure;
    } catch (const std::exception& e) {
        emit_error("Error", e.what());
        return kExitDomainFailure;
    }
    return kExitOk;
}
