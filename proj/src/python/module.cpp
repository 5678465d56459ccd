#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trajkit/trajkit.hpp"

namespace py = pybind11;
using namespace trajkit;

namespace {

// 1-D arrays become scalar signals; 2-D arrays are d x N sample matrices.
Signal signal_from_array(
    py::array_t<double, py::array::c_style | py::array::forcecast> samples) {
    if (samples.ndim() == 1) {
        Matrix values(1, samples.shape(0));
        auto view = samples.unchecked<1>();
        for (py::ssize_t k = 0; k < samples.shape(0); ++k) values(0, k) = view(k);
        return Signal(std::move(values));
    }
    if (samples.ndim() == 2) {
        Matrix values(samples.shape(0), samples.shape(1));
        auto view = samples.unchecked<2>();
        for (py::ssize_t i = 0; i < samples.shape(0); ++i) {
            for (py::ssize_t k = 0; k < samples.shape(1); ++k) values(i, k) = view(i, k);
        }
        return Signal(std::move(values));
    }
    throw ArgumentError("Signal: expected a 1-D or 2-D sample array");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trajectory-based representation and data-driven simulation of "
              "LTI and Hammerstein-Wiener systems";

    py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "TrajectoryParseError", PyExc_ValueError);
    py::register_exception<ObservabilityError>(m, "ObservabilityError", PyExc_RuntimeError);
    py::register_exception<WeaveError>(m, "WeaveError", PyExc_RuntimeError);
    py::register_exception<RecoveryError>(m, "RecoveryError", PyExc_RuntimeError);

    py::class_<Signal>(m, "Signal")
        .def(py::init(&signal_from_array), py::arg("samples"),
             "d x N sample matrix (column k is the sample at time k); "
             "1-D input is treated as a scalar signal")
        .def_static("zero", &Signal::zero, py::arg("dim"), py::arg("length"))
        .def_static("from_stacked", &Signal::from_stacked, py::arg("stacked"), py::arg("dim"))
        .def_property_readonly("dim", &Signal::dim)
        .def_property_readonly("length", &Signal::length)
        .def_property_readonly("values", [](const Signal& s) { return s.data(); })
        .def("sample", &Signal::sample, py::arg("k"))
        .def("window", &Signal::window, py::arg("a"), py::arg("b"))
        .def("stacked", &Signal::stacked)
        .def("slice", &Signal::slice, py::arg("a"), py::arg("b"))
        .def("__len__", &Signal::length)
        .def("__eq__", [](const Signal& a, const Signal& b) { return a == b; });

    py::class_<Trajectory>(m, "Trajectory")
        .def(py::init<Signal, Signal>(), py::arg("u"), py::arg("y"))
        .def_property_readonly("u", &Trajectory::u)
        .def_property_readonly("y", &Trajectory::y)
        .def_property_readonly("length", &Trajectory::length)
        .def_property_readonly("input_dim", &Trajectory::input_dim)
        .def_property_readonly("output_dim", &Trajectory::output_dim)
        .def("slice", &Trajectory::slice, py::arg("a"), py::arg("b"))
        .def("__len__", &Trajectory::length)
        .def("__eq__", [](const Trajectory& a, const Trajectory& b) { return a == b; });

    py::class_<HankelMatrix>(m, "HankelMatrix")
        .def_readonly("entries", &HankelMatrix::entries)
        .def_readonly("depth", &HankelMatrix::depth)
        .def_readonly("source_dim", &HankelMatrix::source_dim);

    m.def("hankel", &hankel, py::arg("x"), py::arg("depth"));

    py::class_<PersistenceReport>(m, "PersistenceReport")
        .def_readonly("is_pe", &PersistenceReport::is_pe)
        .def_readonly("numerical_rank", &PersistenceReport::numerical_rank)
        .def_readonly("required_rank", &PersistenceReport::required_rank)
        .def_readonly("singular_values", &PersistenceReport::singular_values)
        .def("__bool__", [](const PersistenceReport& r) { return r.is_pe; });

    m.def("is_persistently_exciting", &is_persistently_exciting, py::arg("x"), py::arg("order"),
          py::arg("rank_tolerance") = 1e-10);

    py::class_<StateSpaceModel>(m, "StateSpaceModel")
        .def(py::init<Matrix, Matrix, Matrix, Matrix>(), py::arg("A"), py::arg("B"),
             py::arg("C"), py::arg("D"))
        .def(py::init<Matrix, Matrix, Matrix, Matrix, VectorMap, Index, VectorMap, Index>(),
             py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"), py::arg("input_map"),
             py::arg("input_dim"), py::arg("output_map"), py::arg("output_dim"))
        .def_property_readonly("A", &StateSpaceModel::A)
        .def_property_readonly("B", &StateSpaceModel::B)
        .def_property_readonly("C", &StateSpaceModel::C)
        .def_property_readonly("D", &StateSpaceModel::D)
        .def_property_readonly("order", &StateSpaceModel::order)
        .def_property_readonly("input_dim", &StateSpaceModel::input_dim)
        .def_property_readonly("output_dim", &StateSpaceModel::output_dim)
        .def_property_readonly("is_linear", &StateSpaceModel::is_linear)
        .def("linear_part", &StateSpaceModel::linear_part);

    py::class_<SimulationResult>(m, "SimulationResult")
        .def_readonly("y", &SimulationResult::y)
        .def_readonly("states", &SimulationResult::states);

    m.def("simulate", &simulate, py::arg("model"), py::arg("x0"), py::arg("u"));
    m.def("example1_model", &example1_model);

    py::enum_<NoiseDistribution>(m, "NoiseDistribution")
        .value("Uniform", NoiseDistribution::Uniform)
        .value("Normal", NoiseDistribution::Normal);

    py::class_<NoiseSpec>(m, "NoiseSpec")
        .def(py::init([](double ratio, std::uint64_t seed, NoiseDistribution distribution) {
                 return NoiseSpec{ratio, seed, distribution};
             }),
             py::arg("ratio"), py::arg("seed") = 0,
             py::arg("distribution") = NoiseDistribution::Uniform)
        .def_readwrite("ratio", &NoiseSpec::ratio)
        .def_readwrite("seed", &NoiseSpec::seed)
        .def_readwrite("distribution", &NoiseSpec::distribution);

    m.def("add_multiplicative_noise", &add_multiplicative_noise, py::arg("y"), py::arg("spec"));

    py::class_<InitialStateEstimate>(m, "InitialStateEstimate")
        .def_readonly("x0", &InitialStateEstimate::x0)
        .def_readonly("residual", &InitialStateEstimate::residual);

    m.def("reconstruct_initial_state", &reconstruct_initial_state, py::arg("model"),
          py::arg("traj"));

    m.def("max_horizon", &max_horizon, py::arg("N"), py::arg("m"), py::arg("n_bound"));

    py::class_<MembershipResult>(m, "MembershipResult")
        .def_readonly("is_member", &MembershipResult::is_member)
        .def_readonly("alpha", &MembershipResult::alpha)
        .def_readonly("residual", &MembershipResult::residual)
        .def_readonly("pe_verified", &MembershipResult::pe_verified);

    py::class_<TrajectoryBasis>(m, "TrajectoryBasis")
        .def(py::init<Trajectory, Index, Index, double>(), py::arg("data"), py::arg("horizon"),
             py::arg("n_bound"), py::arg("rank_tolerance") = 1e-10)
        .def_property_readonly("data", &TrajectoryBasis::data)
        .def_property_readonly("horizon", &TrajectoryBasis::horizon)
        .def_property_readonly("n_bound", &TrajectoryBasis::n_bound)
        .def_property_readonly("column_count", &TrajectoryBasis::column_count)
        .def_property_readonly("pe_verified", &TrajectoryBasis::pe_verified)
        .def_property_readonly("pe_report", &TrajectoryBasis::pe_report)
        .def_property_readonly("input_hankel", &TrajectoryBasis::input_hankel)
        .def_property_readonly("output_hankel", &TrajectoryBasis::output_hankel)
        .def("realize", &TrajectoryBasis::realize, py::arg("alpha"))
        .def("membership", &TrajectoryBasis::membership, py::arg("candidate"),
             py::arg("residual_tolerance") = 1e-8);

    m.def("state_consistency_check", &state_consistency_check, py::arg("basis"),
          py::arg("alpha"), py::arg("model"), py::arg("tolerance") = 1e-6);

    py::class_<WeavePlan>(m, "WeavePlan")
        .def(py::init<TrajectoryBasis, Index>(), py::arg("basis"), py::arg("segment_count"))
        .def_property_readonly("basis", &WeavePlan::basis)
        .def_property_readonly("segment_count", &WeavePlan::segment_count)
        .def_property_readonly("extended_horizon", &WeavePlan::extended_horizon);

    py::class_<JunctionReport>(m, "JunctionReport")
        .def_readonly("ok", &JunctionReport::ok)
        .def_readonly("input_residuals", &JunctionReport::input_residuals)
        .def_readonly("output_residuals", &JunctionReport::output_residuals)
        .def("worst", &JunctionReport::worst)
        .def("__bool__", [](const JunctionReport& r) { return r.ok; });

    m.def("check_weave_constraints", &check_weave_constraints, py::arg("plan"),
          py::arg("coefficients"), py::arg("tolerance") = 1e-8);
    m.def("assemble", &assemble, py::arg("plan"), py::arg("coefficients"),
          py::arg("tolerance") = 1e-8);

    py::class_<WeaveSolution>(m, "WeaveSolution")
        .def_readonly("coefficients", &WeaveSolution::coefficients)
        .def_readonly("residual", &WeaveSolution::residual)
        .def_readonly("within_tolerance", &WeaveSolution::within_tolerance);

    m.def("solve_weave", &solve_weave, py::arg("plan"), py::arg("target"),
          py::arg("tolerance") = 1e-8);

    py::class_<BasisSet>(m, "BasisSet")
        .def(py::init<std::vector<ScalarFunction>, std::vector<std::string>>(),
             py::arg("functions"), py::arg("names") = std::vector<std::string>{})
        .def_static("identity", &BasisSet::identity)
        .def_static("monomials", &BasisSet::monomials, py::arg("max_degree"),
                    py::arg("include_constant") = true)
        .def_static("from_names", &BasisSet::from_names, py::arg("names"))
        .def_property_readonly("count", &BasisSet::count)
        .def_property_readonly("names", &BasisSet::names)
        .def("evaluate", &BasisSet::evaluate, py::arg("i"), py::arg("x"))
        .def("lift", &BasisSet::lift, py::arg("x"))
        .def_property_readonly("is_identity", &BasisSet::is_identity);

    m.def("lift_input", &lift_input, py::arg("u"), py::arg("basis"));
    m.def("lift_output", &lift_output, py::arg("y"), py::arg("basis"));

    py::class_<Kernel>(m, "Kernel")
        .def_static("squared_exponential", &Kernel::squared_exponential, py::arg("sigma"))
        .def_static("polynomial", &Kernel::polynomial, py::arg("degree"),
                    py::arg("offset") = 1.0)
        .def_static("explicit_basis", &Kernel::explicit_basis, py::arg("basis"))
        .def("__call__", &Kernel::evaluate, py::arg("x1"), py::arg("x2"))
        .def_property_readonly("is_identity_basis", &Kernel::is_identity_basis);

    m.def("kernel_eval", &kernel_eval, py::arg("kernel"), py::arg("x1"), py::arg("x2"));
    m.def("gram", &gram, py::arg("kernel"), py::arg("xs"), py::arg("ys"));

    py::class_<DDSimProblem>(m, "DDSimProblem")
        .def(py::init<Trajectory, const Signal&, const Trajectory&, double>(), py::arg("data"),
             py::arg("new_input"), py::arg("initial_window"), py::arg("lambda_"))
        .def_property_readonly("horizon", &DDSimProblem::horizon)
        .def_property_readonly("init_length", &DDSimProblem::init_length)
        .def_property_readonly("lambda_", &DDSimProblem::lambda)
        .def_property_readonly("mixed_matrix", &DDSimProblem::mixed_matrix)
        .def_property_readonly("target", &DDSimProblem::target);

    py::class_<DDSimResult>(m, "DDSimResult")
        .def_readonly("alpha", &DDSimResult::alpha)
        .def_readonly("predicted_output", &DDSimResult::predicted_output)
        .def_readonly("predicted_lifted", &DDSimResult::predicted_lifted)
        .def_readonly("residual", &DDSimResult::residual)
        .def_readonly("objective_value", &DDSimResult::objective_value)
        .def_readonly("warnings", &DDSimResult::warnings);

    m.def("ddsim_exact", &ddsim_exact, py::arg("data"), py::arg("new_input"),
          py::arg("initial_window"), py::arg("n_bound"));
    m.def("ddsim_regularized", &ddsim_regularized, py::arg("problem"));
    m.def("ddsim_kernel", &ddsim_kernel, py::arg("data"), py::arg("new_input"),
          py::arg("initial_window"), py::arg("lambda_"), py::arg("input_kernel"),
          py::arg("output_kernel"), py::arg("decoder") = nullptr);
    m.def("objective_value", &objective_value, py::arg("problem"), py::arg("alpha"));

    py::class_<Example1Config>(m, "Example1Config")
        .def(py::init<>())
        .def_readwrite("data_length", &Example1Config::data_length)
        .def_readwrite("noise_ratio", &Example1Config::noise_ratio)
        .def_readwrite("noise_distribution", &Example1Config::noise_distribution)
        .def_readwrite("seed", &Example1Config::seed)
        .def_readwrite("horizon", &Example1Config::horizon)
        .def_readwrite("init_length", &Example1Config::init_length)
        .def_readwrite("lambda_", &Example1Config::lambda)
        .def_readwrite("kernel_sigma", &Example1Config::kernel_sigma)
        .def_readwrite("data_amplitude", &Example1Config::data_amplitude)
        .def_readwrite("test_amplitude", &Example1Config::test_amplitude);

    py::class_<Example1Run>(m, "Example1Run")
        .def_readonly("data", &Example1Run::data)
        .def_readonly("test_input", &Example1Run::test_input)
        .def_readonly("true_output", &Example1Run::true_output)
        .def_readonly("predicted_output", &Example1Run::predicted_output)
        .def_readonly("relative_rms", &Example1Run::relative_rms);

    m.def("run_example1", &run_example1, py::arg("config"));
    m.def("relative_rms_error", &relative_rms_error, py::arg("predicted"), py::arg("truth"));

    m.def("parse_trajectory_csv",
          py::overload_cast<const std::string&>(&parse_trajectory_csv), py::arg("path"));
    m.def("write_trajectory_csv",
          py::overload_cast<const std::string&, const Trajectory&>(&write_trajectory_csv),
          py::arg("path"), py::arg("traj"));
}
