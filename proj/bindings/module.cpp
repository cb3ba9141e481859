#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tsu11/figures.hpp"
#include "tsu11/gauss.hpp"
#include "tsu11/metrology.hpp"
#include "tsu11/montecarlo.hpp"
#include "tsu11/schemes.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
    using namespace tsu11;

    m.doc() = "Gaussian simulator and closed-form sensitivities for truncated "
              "SU(1,1) sensor networks";

    // Gaussian layer -------------------------------------------------------
    py::class_<GaussianState>(m, "GaussianState")
        .def_readonly("n_modes", &GaussianState::n_modes)
        .def_readonly("d", &GaussianState::d)
        .def_readonly("sigma", &GaussianState::sigma)
        .def("dim", &GaussianState::dim);

    m.def("vacuum", &vacuum, py::arg("n_modes"));
    m.def("displace", &displace, py::arg("state"), py::arg("mode"), py::arg("amplitude"));
    m.def("two_mode_squeeze", &two_mode_squeeze, py::arg("state"), py::arg("mode_a"),
          py::arg("mode_b"), py::arg("gain"));
    m.def("phase_shift", &phase_shift, py::arg("state"), py::arg("mode"), py::arg("phi"));
    m.def("beam_splitter", &beam_splitter, py::arg("state"), py::arg("mode_a"),
          py::arg("mode_b"), py::arg("transmissivity"), py::arg("phase") = 0.0);
    m.def("loss", &loss, py::arg("state"), py::arg("mode"), py::arg("eta"));
    m.def("balanced_split", &balanced_split, py::arg("state"), py::arg("mode"),
          py::arg("d_ways"));
    m.def("attach_vacuum", &attach_vacuum, py::arg("state"), py::arg("k"));
    m.def("keep_modes", &keep_modes, py::arg("state"), py::arg("modes"));
    m.def("mean_photons", &mean_photons, py::arg("state"), py::arg("mode"));
    m.def("hermiticity_defect", &hermiticity_defect, py::arg("state"));
    m.def("conjugate_symmetry_defect", &conjugate_symmetry_defect, py::arg("state"));

    // Homodyne estimators and bounds ---------------------------------------
    py::class_<HomodyneChannel>(m, "HomodyneChannel")
        .def(py::init([](int mode, double theta, double weight) {
                 return HomodyneChannel{mode, theta, weight};
             }),
             py::arg("mode"), py::arg("theta") = 0.0, py::arg("weight") = 1.0)
        .def_readwrite("mode", &HomodyneChannel::mode)
        .def_readwrite("theta", &HomodyneChannel::theta)
        .def_readwrite("weight", &HomodyneChannel::weight);

    py::class_<QuadratureStats>(m, "QuadratureStats")
        .def_readonly("mean", &QuadratureStats::mean)
        .def_readonly("variance", &QuadratureStats::variance)
        .def_readonly("channel_means", &QuadratureStats::channel_means)
        .def_readonly("cross_covariance", &QuadratureStats::cross_covariance);

    m.def("joint_quadrature_stats", &joint_quadrature_stats, py::arg("state"),
          py::arg("channels"));
    m.def("lod", &lod, py::arg("slope"), py::arg("variance"));

    py::class_<FisherMatrix>(m, "FisherMatrix")
        .def_readonly("entries", &FisherMatrix::entries)
        .def("dim", &FisherMatrix::dim);

    m.def("qfi_matrix", &qfi_matrix, py::arg("state_at"), py::arg("phases"),
          py::arg("step") = 1e-6);
    m.def("qcrb", &qcrb, py::arg("fisher"), py::arg("beta"));
    m.def("snr", &snr, py::arg("slope"), py::arg("variance"), py::arg("delta_phi_sq"));
    m.def("snr_correct_db", &snr_correct_db, py::arg("measured_dbm"), py::arg("noise_dbm"));
    m.def("db", &db, py::arg("ratio"));
    m.def("undb", &undb, py::arg("value"));

    // Schemes ---------------------------------------------------------------
    py::enum_<Scheme>(m, "Scheme")
        .value("tsu_distributed", Scheme::tsu_distributed)
        .value("tsu_separable", Scheme::tsu_separable)
        .value("classical_distributed", Scheme::classical_distributed)
        .value("classical_separable", Scheme::classical_separable)
        .value("multi_classical", Scheme::multi_classical)
        .value("multi_separable", Scheme::multi_separable)
        .value("multi_entangled", Scheme::multi_entangled);

    m.def("scheme_name", &scheme_name, py::arg("scheme"));
    m.def("scheme_from_name", &scheme_from_name, py::arg("name"));

    py::class_<InterferometerParams>(m, "InterferometerParams")
        .def(py::init<>())
        .def_readwrite("gain", &InterferometerParams::gain)
        .def_readwrite("alpha_sq", &InterferometerParams::alpha_sq)
        .def_readwrite("eta", &InterferometerParams::eta)
        .def_readwrite("g", &InterferometerParams::g)
        .def_readwrite("phi1", &InterferometerParams::phi1)
        .def_readwrite("phi2", &InterferometerParams::phi2)
        .def("validate", &InterferometerParams::validate)
        .def("bright_beam", &InterferometerParams::bright_beam);

    py::class_<BetaWeights>(m, "BetaWeights")
        .def_readonly("beta1", &BetaWeights::beta1)
        .def_readonly("beta2", &BetaWeights::beta2);

    py::class_<MultiPhaseParams>(m, "MultiPhaseParams")
        .def(py::init<>())
        .def_readwrite("m_phases", &MultiPhaseParams::m_phases)
        .def_readwrite("n_per_phase", &MultiPhaseParams::n_per_phase)
        .def_readwrite("gain", &MultiPhaseParams::gain)
        .def_readwrite("alpha_sq", &MultiPhaseParams::alpha_sq);

    py::class_<LodResult>(m, "LodResult")
        .def_readonly("scheme", &LodResult::scheme)
        .def_readonly("delta_phi_sq", &LodResult::delta_phi_sq)
        .def_readonly("bright_beam", &LodResult::bright_beam);

    m.def("beta_weights", &beta_weights, py::arg("gain"), py::arg("g"));
    m.def("two_phase_slope", &two_phase_slope, py::arg("params"));
    m.def("two_phase_variance", &two_phase_variance, py::arg("params"));
    m.def("lod_tsu_distributed", &lod_tsu_distributed, py::arg("params"));
    m.def("lod_tsu_separable", &lod_tsu_separable, py::arg("params"));
    m.def("lod_classical_distributed", &lod_classical_distributed, py::arg("params"));
    m.def("lod_classical_separable", &lod_classical_separable, py::arg("params"));
    m.def("qcrb_tsu", &qcrb_tsu, py::arg("params"));
    m.def("advantage_g_window", &advantage_g_window, py::arg("gain"), py::arg("eta"));
    m.def("n_total", &n_total, py::arg("gain"), py::arg("alpha_sq"));
    m.def("lod_multi_classical", &lod_multi_classical, py::arg("m_phases"),
          py::arg("n_per_phase"));
    m.def("lod_multi_separable", &lod_multi_separable, py::arg("m_phases"),
          py::arg("n_per_phase"));
    m.def("lod_multi_entangled_raw", &lod_multi_entangled_raw, py::arg("gain"),
          py::arg("alpha_sq"));
    m.def("lod_multi_entangled_optimal", &lod_multi_entangled_optimal,
          py::arg("m_phases"), py::arg("n_per_phase"));

    py::class_<EntangledOptimum>(m, "EntangledOptimum")
        .def_readonly("gain", &EntangledOptimum::gain)
        .def_readonly("alpha_sq", &EntangledOptimum::alpha_sq)
        .def_readonly("delta_phi_sq", &EntangledOptimum::delta_phi_sq);

    m.def(
        "optimize_entangled",
        [](int m_phases, double n_per_phase) {
            return optimize_entangled(m_phases, n_per_phase);
        },
        py::arg("m_phases"), py::arg("n_per_phase"));
    m.def("eta_for_noise_reduction_db", &eta_for_noise_reduction_db, py::arg("gain"),
          py::arg("g"), py::arg("target_db"));

    m.def("build_tsu_distributed", &build_tsu_distributed, py::arg("params"));
    m.def("build_tsu_separable", &build_tsu_separable, py::arg("params"));
    m.def("build_classical_distributed", &build_classical_distributed, py::arg("params"));
    m.def("build_classical_separable", &build_classical_separable, py::arg("params"));
    m.def("two_phase_channels", &two_phase_channels, py::arg("scheme"), py::arg("g"));

    py::class_<MultiEntangledNetwork>(m, "MultiEntangledNetwork")
        .def_readonly("state", &MultiEntangledNetwork::state)
        .def_readonly("sensor_modes", &MultiEntangledNetwork::sensor_modes);

    m.def("build_multi_entangled", &build_multi_entangled, py::arg("m_phases"),
          py::arg("gain"), py::arg("alpha_sq"), py::arg("phases"));
    m.def("multi_entangled_channels", &multi_entangled_channels, py::arg("network"));
    m.def("multi_entangled_slope", &multi_entangled_slope, py::arg("m_phases"),
          py::arg("gain"), py::arg("alpha_sq"));

    // Monte Carlo ------------------------------------------------------------
    py::class_<McConfig>(m, "McConfig")
        .def(py::init<>())
        .def_readwrite("samples", &McConfig::samples)
        .def_readwrite("seed", &McConfig::seed);

    py::class_<McResult>(m, "McResult")
        .def_readonly("empirical_lod", &McResult::empirical_lod)
        .def_readonly("standard_error", &McResult::standard_error)
        .def_readonly("analytic_lod", &McResult::analytic_lod)
        .def_readonly("z_score", &McResult::z_score)
        .def_readonly("rng", &McResult::rng);

    m.def("uniform_stream", &uniform_stream, py::arg("seed"), py::arg("counter"));
    m.def("normal_stream", &normal_stream, py::arg("seed"), py::arg("counter"));
    m.def("sample_quadratures", &sample_quadratures, py::arg("state"), py::arg("channels"),
          py::arg("n_samples"), py::arg("seed"));
    m.def("estimate_phase", &estimate_phase, py::arg("samples"), py::arg("channels"),
          py::arg("slope"));
    m.def("mc_lod", &mc_lod, py::arg("scheme"), py::arg("params"), py::arg("config"));
    m.def("mc_lod_multi_entangled", &mc_lod_multi_entangled, py::arg("m_phases"),
          py::arg("gain"), py::arg("alpha_sq"), py::arg("config"));

    // Figures ----------------------------------------------------------------
    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("variable", &SweepSpec::variable)
        .def_readwrite("start", &SweepSpec::start)
        .def_readwrite("stop", &SweepSpec::stop)
        .def_readwrite("count", &SweepSpec::count)
        .def_readwrite("log_spaced", &SweepSpec::log_spaced)
        .def("grid", &SweepSpec::grid);

    py::class_<Fig2cSpec>(m, "Fig2cSpec")
        .def(py::init<>())
        .def_readwrite("g", &Fig2cSpec::g)
        .def_readwrite("etas", &Fig2cSpec::etas)
        .def_readwrite("sweep", &Fig2cSpec::sweep);

    py::class_<Fig2dSpec>(m, "Fig2dSpec")
        .def(py::init<>())
        .def_readwrite("gain", &Fig2dSpec::gain)
        .def_readwrite("etas", &Fig2dSpec::etas)
        .def_readwrite("sweep", &Fig2dSpec::sweep);

    py::class_<Fig5dSpec>(m, "Fig5dSpec")
        .def(py::init<>())
        .def_readwrite("n_per_phase", &Fig5dSpec::n_per_phase)
        .def_readwrite("m_max", &Fig5dSpec::m_max);

    m.def("format_sci", &format_sci, py::arg("value"));
    m.def("fig2c_csv", &fig2c_csv, py::arg("spec") = Fig2cSpec{});
    m.def("fig2d_csv", &fig2d_csv, py::arg("spec") = Fig2dSpec{});
    m.def("fig5d_csv", &fig5d_csv, py::arg("spec") = Fig5dSpec{});
}
