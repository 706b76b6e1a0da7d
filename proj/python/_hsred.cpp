#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsred/basis.hpp"
#include "hsred/criticality.hpp"
#include "hsred/eigensolver.hpp"
#include "hsred/error.hpp"
#include "hsred/hamiltonian.hpp"
#include "hsred/observables.hpp"
#include "hsred/reduction.hpp"

namespace py = pybind11;
using namespace hsred;

namespace {

std::vector<std::uint64_t> sector_bits(int L, double m_tot, std::size_t cap) {
  const SpinBasis b = enumerate_sector(L, HalfInt::from_double(m_tot), cap);
  std::vector<std::uint64_t> out;
  out.reserve(b.size());
  for (const SpinConfig& c : b.configs()) out.push_back(c.bits);
  return out;
}

// (rows, cols, values) of a stored matrix
py::tuple coordinates(const SparseSymmetricMatrix& m) {
  std::vector<std::size_t> rows, cols;
  std::vector<double> vals;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    const auto c = m.row_cols(r);
    const auto v = m.row_values(r);
    for (std::size_t i = 0; i < c.size(); ++i) {
      rows.push_back(r);
      cols.push_back(c[i]);
      vals.push_back(v[i]);
    }
  }
  return py::make_tuple(rows, cols, vals);
}

}  // namespace

PYBIND11_MODULE(_hsred, m) {
  m.doc() = "Hilbert-space reduction for H0 + g H1 on the frustrated spin ladder";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, py::make_tuple(std::string(to_string(e.code())), e.what()));
    }
  });

  py::enum_<Boundary>(m, "Boundary")
      .value("open", Boundary::open)
      .value("periodic", Boundary::periodic);

  py::class_<LadderConfig>(m, "LadderConfig")
      .def(py::init<>())
      .def(py::init([](int L, double jt, double jl, double jc, Boundary b, double m_tot) {
             LadderConfig c;
             c.sites_per_leg = L;
             c.j_rung = jt;
             c.j_leg = jl;
             c.j_cross = jc;
             c.boundary = b;
             c.m_tot = HalfInt::from_double(m_tot);
             return c;
           }),
           py::arg("L") = 6, py::arg("J_t") = 15.0, py::arg("J_l") = 5.0, py::arg("J_c") = 3.0,
           py::arg("boundary") = Boundary::open, py::arg("M_tot") = 0.0)
      .def_readwrite("L", &LadderConfig::sites_per_leg)
      .def_readwrite("J_t", &LadderConfig::j_rung)
      .def_readwrite("J_l", &LadderConfig::j_leg)
      .def_readwrite("J_c", &LadderConfig::j_cross)
      .def_readwrite("boundary", &LadderConfig::boundary)
      .def_property(
          "M_tot", [](const LadderConfig& c) { return c.m_tot.value(); },
          [](LadderConfig& c, double v) { c.m_tot = HalfInt::from_double(v); });

  m.def("enumerate_sector", &sector_bits, py::arg("L"), py::arg("M_tot") = 0.0,
        py::arg("cap") = kDefaultDimensionCap,
        "Bit patterns of the fixed-magnetization sector in ascending order.");
  m.def("sector_size", [](int L, double m_tot) {
    return enumerate_sector(L, HalfInt::from_double(m_tot)).size();
  }, py::arg("L"), py::arg("M_tot") = 0.0);

  py::class_<CouplingHamiltonian>(m, "CouplingHamiltonian")
      .def_property_readonly("dim", &CouplingHamiltonian::dim)
      .def_property_readonly("labels", [](const CouplingHamiltonian& h) {
        return std::vector<std::size_t>(h.labels().begin(), h.labels().end());
      })
      .def("apply", [](const CouplingHamiltonian& h, double g, const std::vector<double>& v) {
        return h.apply(g, v);
      })
      .def("diagonal", &CouplingHamiltonian::diagonal)
      .def("restrict", [](const CouplingHamiltonian& h, const std::vector<std::size_t>& keep) {
        return h.restrict(keep);
      })
      .def("h0_coo", [](const CouplingHamiltonian& h) { return coordinates(h.h0()); })
      .def("h1_coo", [](const CouplingHamiltonian& h) { return coordinates(h.h1()); })
      .def("dense", [](const CouplingHamiltonian& h, double g) { return dense_matrix(h, g); },
           "Row-major dense copy of h0 + g h1.");

  m.def("build_ladder", [](const LadderConfig& cfg) { return build_ladder(cfg).hamiltonian; },
        py::arg("config"));

  py::class_<EigenOptions>(m, "EigenOptions")
      .def(py::init<>())
      .def_readwrite("k", &EigenOptions::k)
      .def_readwrite("tol", &EigenOptions::tol)
      .def_readwrite("max_iter", &EigenOptions::max_iter)
      .def_readwrite("seed", &EigenOptions::seed)
      .def_readwrite("verify_multiplicity", &EigenOptions::verify_multiplicity);

  py::class_<EigenResult>(m, "EigenResult")
      .def_readonly("values", &EigenResult::values)
      .def_readonly("vectors", &EigenResult::vectors)
      .def_readonly("residuals", &EigenResult::residuals)
      .def_readonly("iterations", &EigenResult::iterations)
      .def_readonly("degenerate", &EigenResult::degenerate);

  m.def("lowest_k", &lowest_k, py::arg("h"), py::arg("g"), py::arg("options") = EigenOptions{});
  m.def("dense_spectrum", &dense_spectrum, py::arg("h"), py::arg("g"));

  m.def("energy_per_site", &energy_per_site, py::arg("lam"), py::arg("L"));
  m.def("accuracy_loss", &accuracy_loss, py::arg("e_ref"), py::arg("e_now"));
  m.def("ground_entropy", [](const std::vector<double>& v, int L) { return ground_entropy(v, L); },
        py::arg("ground"), py::arg("L"));

  py::enum_<RootMethod>(m, "RootMethod")
      .value("automatic", RootMethod::automatic)
      .value("closed_form", RootMethod::closed_form)
      .value("bracketed", RootMethod::bracketed);

  py::class_<ReductionOptions>(m, "ReductionOptions")
      .def(py::init<>())
      .def_readwrite("n_min", &ReductionOptions::n_min)
      .def_readwrite("p_max", &ReductionOptions::p_max)
      .def_readwrite("batch", &ReductionOptions::batch)
      .def_readwrite("g_bracket_factor", &ReductionOptions::g_bracket_factor)
      .def_readwrite("lambda_tol_rel", &ReductionOptions::lambda_tol_rel)
      .def_readwrite("root_method", &ReductionOptions::root_method)
      .def_readwrite("coarse_fraction", &ReductionOptions::coarse_fraction)
      .def_readwrite("coarse_above", &ReductionOptions::coarse_above);

  py::class_<ReductionStep>(m, "ReductionStep")
      .def_readonly("n", &ReductionStep::n)
      .def_readonly("g", &ReductionStep::g)
      .def_readonly("lambdas", &ReductionStep::lambdas)
      .def_readonly("per_site", &ReductionStep::per_site)
      .def_readonly("p", &ReductionStep::p)
      .def_readonly("entropy", &ReductionStep::entropy)
      .def_readonly("eliminated", &ReductionStep::eliminated)
      .def_readonly("eliminated_amplitude", &ReductionStep::eliminated_amplitude)
      .def_readonly("root_iterations", &ReductionStep::root_iterations);

  py::class_<ReductionTrajectory>(m, "ReductionTrajectory")
      .def_readonly("steps", &ReductionTrajectory::steps)
      .def_readonly("sites_per_leg", &ReductionTrajectory::sites_per_leg)
      .def_readonly("g_initial", &ReductionTrajectory::g_initial)
      .def_property_readonly("stop_reason", [](const ReductionTrajectory& t) {
        return std::string(to_string(t.stop_reason));
      })
      .def_readonly("stop_detail", &ReductionTrajectory::stop_detail)
      .def_readonly("surviving", &ReductionTrajectory::surviving);

  m.def("run_reduction", &run_reduction, py::arg("config"),
        py::arg("eigen") = EigenOptions{}, py::arg("reduction") = ReductionOptions{});
  m.def("reduce", &reduce, py::arg("h"), py::arg("g_initial"), py::arg("L"),
        py::arg("eigen") = EigenOptions{}, py::arg("reduction") = ReductionOptions{});

  py::enum_<ScanParameter>(m, "ScanParameter")
      .value("leg_and_cross", ScanParameter::leg_and_cross)
      .value("leg", ScanParameter::leg)
      .value("cross", ScanParameter::cross)
      .value("rung", ScanParameter::rung);

  py::class_<ScanSpec>(m, "ScanSpec")
      .def(py::init<>())
      .def_readwrite("parameter", &ScanSpec::parameter)
      .def_readwrite("start", &ScanSpec::from)
      .def_readwrite("stop", &ScanSpec::to)
      .def_readwrite("points", &ScanSpec::points)
      .def_readwrite("rel_tol", &ScanSpec::rel_tol);

  py::class_<GapPoint>(m, "GapPoint")
      .def_readonly("param", &GapPoint::param)
      .def_readonly("lambda1", &GapPoint::lambda1)
      .def_readonly("lambda2", &GapPoint::lambda2)
      .def_readonly("gap", &GapPoint::gap);

  py::class_<CrossingReport>(m, "CrossingReport")
      .def_readonly("parameter_path", &CrossingReport::parameter_path)
      .def_readonly("g_e", &CrossingReport::g_e)
      .def_readonly("min_gap", &CrossingReport::min_gap)
      .def_readonly("lambda1", &CrossingReport::lambda1)
      .def_readonly("bracket", &CrossingReport::bracket)
      .def_readonly("ratio", &CrossingReport::ratio)
      .def_readonly("true_crossing", &CrossingReport::true_crossing)
      .def_readonly("curve", &CrossingReport::curve);

  m.def("scan_crossing", &scan_crossing, py::arg("config"), py::arg("scan"),
        py::arg("eigen") = EigenOptions{});

  py::class_<FixedPointCheck>(m, "FixedPointCheck")
      .def_readonly("drift", &FixedPointCheck::drift)
      .def_readonly("n_floor", &FixedPointCheck::n_floor)
      .def_readonly("window_steps", &FixedPointCheck::window_steps);

  m.def("fixed_point_drift", &fixed_point_drift, py::arg("trajectory"), py::arg("n_floor"));
}
