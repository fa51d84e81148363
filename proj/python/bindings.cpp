#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "torusfs/error.hpp"
#include "torusfs/grid.hpp"
#include "torusfs/kernels.hpp"
#include "torusfs/means.hpp"
#include "torusfs/norms.hpp"
#include "torusfs/spectral.hpp"
#include "torusfs/version.hpp"

namespace py = pybind11;
using namespace torusfs;

namespace {

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

// (ny, nx) array view of a field, copied.
ComplexArray to_numpy(const SampledField& f) {
  ComplexArray out({f.grid().ny(), f.grid().nx()});
  std::memcpy(out.mutable_data(), f.values().data(), sizeof(cplx) * f.size());
  return out;
}

SampledField from_numpy(const TorusGrid& grid, const ComplexArray& values) {
  if (values.ndim() != 2 || values.shape(0) != grid.ny() || values.shape(1) != grid.nx())
    throw GridMismatchError("values must have shape (ny, nx)");
  std::vector<cplx> v(values.data(), values.data() + values.size());
  return SampledField(grid, std::move(v));
}

ComplexArray line_to_numpy(const LineField& f) {
  ComplexArray out(f.n());
  std::memcpy(out.mutable_data(), f.values().data(), sizeof(cplx) * f.n());
  return out;
}

}  // namespace

PYBIND11_MODULE(_torusfs, m) {
  m.doc() = "Double Fourier series on the torus: partial sums, summability means and Orlicz functionals";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<SizingError>(m, "SizingError", base.ptr());
  py::register_exception<SamplingError>(m, "SamplingError", base.ptr());
  py::register_exception<AliasingError>(m, "AliasingError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<ResolutionError>(m, "ResolutionError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<GridMismatchError>(m, "GridMismatchError", base.ptr());
  py::register_exception<DivergenceError>(m, "DivergenceError", base.ptr());

  py::class_<TorusGrid>(m, "TorusGrid")
      .def(py::init<int, int>(), py::arg("nx"), py::arg("ny"))
      .def_property_readonly("nx", &TorusGrid::nx)
      .def_property_readonly("ny", &TorusGrid::ny)
      .def_property_readonly("hx", &TorusGrid::hx)
      .def_property_readonly("hy", &TorusGrid::hy)
      .def("x", &TorusGrid::x)
      .def("y", &TorusGrid::y);
  m.def("make_grid", &make_grid, py::arg("nx"), py::arg("ny"));

  py::class_<SampledField>(m, "SampledField")
      .def(py::init(&from_numpy), py::arg("grid"), py::arg("values"))
      .def_property_readonly("grid", &SampledField::grid)
      .def("values", &to_numpy)
      .def("interpolate", &SampledField::interpolate);

  m.def("sample", &sample, py::arg("f"), py::arg("grid"),
        "Evaluate f(x, y) at every grid node. f must return a number.");
  m.def("quad_integral", py::overload_cast<const SampledField&>(&quad_integral));

  py::class_<ConjugacyFlag>(m, "ConjugacyFlag")
      .def(py::init<int, int>(), py::arg("a") = 0, py::arg("b") = 0)
      .def_readonly("a", &ConjugacyFlag::a)
      .def_readonly("b", &ConjugacyFlag::b);

  py::class_<SpectralField>(m, "SpectralField")
      .def_property_readonly("mx", &SpectralField::mx)
      .def_property_readonly("my", &SpectralField::my)
      .def_property_readonly("grid", &SpectralField::grid)
      .def("__call__", [](const SpectralField& s, int j, int k) { return s(j, k); });

  m.def("coefficients", &coefficients, py::arg("field"), py::arg("mx"), py::arg("my"));
  m.def("partial_sum", &partial_sum, py::arg("spec"), py::arg("n"), py::arg("m"));
  m.def("conjugate_partial_sum", &conjugate_partial_sum, py::arg("spec"), py::arg("n"), py::arg("m"),
        py::arg("flag"));
  m.def("modified_partial_sum", &modified_partial_sum, py::arg("spec"), py::arg("n"), py::arg("m"),
        py::arg("modified_x"), py::arg("modified_y"), py::arg("flag") = ConjugacyFlag{});
  m.def("oracle_partial_sum", &oracle_partial_sum, py::arg("field"), py::arg("n"), py::arg("m"),
        py::arg("flag") = ConjugacyFlag{}, py::arg("modified_x") = false, py::arg("modified_y") = false);

  m.def("dirichlet", &dirichlet, py::arg("n"), py::arg("u"));
  m.def("conjugate_dirichlet", &conjugate_dirichlet, py::arg("m"), py::arg("u"));
  m.def("modified_dirichlet", &modified_dirichlet, py::arg("n"), py::arg("u"));

  py::enum_<MeanFamily>(m, "MeanFamily")
      .value("NorlundLogLinear", MeanFamily::NorlundLogLinear)
      .value("NorlundLogStrong", MeanFamily::NorlundLogStrong)
      .value("RieszLogStrong", MeanFamily::RieszLogStrong)
      .value("FejerStrong", MeanFamily::FejerStrong);

  m.def("harmonic_sum", [](int n) { return harmonic_sum(n).l; }, py::arg("n"));
  m.def("norlund_log_mean", &norlund_log_mean, py::arg("spec"), py::arg("n"), py::arg("m"));
  m.def(
      "strong_mean",
      [](const SpectralField& spec, int n, int m, MeanFamily family, ConjugacyFlag flag,
         std::optional<SampledField> center) { return strong_mean(spec, n, m, MeanKind{family, flag, center}); },
      py::arg("spec"), py::arg("n"), py::arg("m"), py::arg("family") = MeanFamily::NorlundLogStrong,
      py::arg("flag") = ConjugacyFlag{}, py::arg("center") = py::none());
  m.def(
      "strong_mean_1d",
      [](const ComplexArray& values, int cutoff, int n, MeanFamily family, bool conjugate) {
        LineField line(std::vector<cplx>(values.data(), values.data() + values.size()));
        return line_to_numpy(strong_mean_1d(line_coefficients(line, cutoff), n, LineMeanKind{family, conjugate}));
      },
      py::arg("values"), py::arg("cutoff"), py::arg("n"), py::arg("family") = MeanFamily::NorlundLogStrong,
      py::arg("conjugate") = false);

  py::class_<ResidualReport>(m, "ResidualReport")
      .def_readonly("sup", &ResidualReport::sup)
      .def_readonly("l2", &ResidualReport::l2);
  py::class_<Decomposition2dReport>(m, "Decomposition2dReport")
      .def_readonly("factorization", &Decomposition2dReport::factorization)
      .def_readonly("expansion", &Decomposition2dReport::expansion)
      .def_readonly("i1_expansion", &Decomposition2dReport::i1_expansion);

  m.def("hardy_identity_residual", &hardy_identity_residual, py::arg("spec"), py::arg("n"), py::arg("m"),
        py::arg("flag") = ConjugacyFlag{});
  m.def(
      "decomposition_residual_1d",
      [](const ComplexArray& values, int cutoff, int n, int k) {
        LineField line(std::vector<cplx>(values.data(), values.data() + values.size()));
        return decomposition_residual_1d(line_coefficients(line, cutoff), n, k);
      },
      py::arg("values"), py::arg("cutoff"), py::arg("n"), py::arg("k"));
  m.def("decomposition_residual_2d", &decomposition_residual_2d, py::arg("spec"), py::arg("n"), py::arg("m"),
        py::arg("i"), py::arg("j"));

  m.def("lp_quasinorm", &lp_quasinorm, py::arg("field"), py::arg("p"));
  m.def("llogl_modular", &llogl_modular, py::arg("field"));
  m.def(
      "luxemburg_norm_llogl", [](const SampledField& f, double scale) {
        return luxemburg_norm(f, u_log_plus_u().scaled(scale));
      },
      py::arg("field"), py::arg("scale") = 1.0, "Luxemburg norm under scale * u log+ u.");
  m.def(
      "exceedance_measure",
      [](const SampledField& f, double eps) {
        ExceedanceReport r = exceedance_measure(f, eps);
        return py::dict(py::arg("epsilon") = r.epsilon, py::arg("node_fraction") = r.node_fraction,
                        py::arg("measure") = r.measure);
      },
      py::arg("field"), py::arg("epsilon"));

  m.attr("__version__") = kVersion;
}
