#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "seqnorm/interpolation.hpp"
#include "seqnorm/report.hpp"
#include "seqnorm/snumbers.hpp"
#include "seqnorm/summing.hpp"

namespace py = pybind11;
using namespace seqnorm;

namespace {

Vector to_vector(const std::vector<double>& x) { return Vector(x); }

const char* tag(Certification c) {
  return c == Certification::Exact ? "exact" : "numerical";
}

py::dict norm_dict(const NormResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["certification"] = tag(r.certification);
  d["tolerance"] = r.tolerance;
  return d;
}

py::dict bound_dict(const BoundPair& b) {
  py::dict d;
  d["lower"] = b.lower;
  d["upper"] = b.upper;
  if (b.witness) d["witness"] = b.witness->entries();
  return d;
}

}  // namespace

PYBIND11_MODULE(_seqnorm, m) {
  m.doc() = "symmetric sequence-space norms, duality, K-functionals and "
            "s-number checks";

  py::register_exception<InvalidDescriptorError>(m, "InvalidDescriptorError",
                                                 PyExc_ValueError);
  py::register_exception<DimensionMismatchError>(m, "DimensionMismatchError",
                                                 PyExc_ValueError);
  py::register_exception<MissingAttestationError>(m, "MissingAttestationError",
                                                  PyExc_ValueError);

  m.def("simplify", [](const std::string& expr) {
    return print_space(simplify(parse_space(expr)));
  }, py::arg("space"), "Catalog rewrite of a descriptor expression.");

  m.def("norm", [](const std::string& expr, const std::vector<double>& x) {
    return norm_dict(norm(parse_space(expr), to_vector(x)));
  }, py::arg("space"), py::arg("x"));

  m.def("dual_norm", [](const std::string& expr, const std::vector<double>& x) {
    return norm_dict(kothe_dual_norm(parse_space(expr), to_vector(x)));
  }, py::arg("space"), py::arg("x"));

  m.def("fundamental", [](const std::string& expr, std::size_t n) {
    return norm_dict(fundamental(parse_space(expr), n));
  }, py::arg("space"), py::arg("n"));

  m.def("multiplier_norm",
        [](const std::string& from, const std::string& to,
           const std::vector<double>& mvec) {
          return bound_dict(
              multiplier_norm(parse_space(from), parse_space(to), to_vector(mvec)));
        },
        py::arg("from_space"), py::arg("to_space"), py::arg("m"));

  m.def("identity_norm",
        [](const std::string& from, const std::string& to, std::size_t n) {
          return bound_dict(identity_norm(parse_space(from), parse_space(to), n));
        },
        py::arg("from_space"), py::arg("to_space"), py::arg("n"));

  m.def("k_functional",
        [](const std::string& e0, const std::string& e1, double t,
           const std::vector<double>& x) {
          KFunctionalResult r =
              k_functional(parse_space(e0), parse_space(e1), t, to_vector(x));
          py::dict d = norm_dict(r.value);
          d["x0"] = r.split.x0.entries();
          d["x1"] = r.split.x1.entries();
          return d;
        },
        py::arg("e0"), py::arg("e1"), py::arg("t"), py::arg("x"));

  m.def("approx_bounds",
        [](const std::string& expr, std::size_t n, std::size_t k) {
          return bound_dict(approx_bounds(parse_space(expr), n, k));
        },
        py::arg("space"), py::arg("n"), py::arg("k"));

  m.def("weyl_check",
        [](const Matrix& a, const std::string& expr) {
          WeylReport r = weyl_check(a, parse_space(expr));
          py::dict d;
          d["multiplicative_ok"] = r.multiplicative_ok;
          d["norm_form_ok"] = r.norm_form_ok;
          d["worst_product_ratio"] = r.worst_product_ratio;
          d["norm_form_ratio"] = r.norm_form_ratio;
          d["eigen_moduli"] = r.eigen_moduli.entries();
          d["singular_values"] = r.singular_values.entries();
          return d;
        },
        py::arg("matrix"), py::arg("space"));

  m.def("concavity_estimate",
        [](const std::string& expr, std::size_t n, int trials, std::uint64_t seed) {
          return bound_dict(concavity_estimate(parse_space(expr), n, trials, seed));
        },
        py::arg("space"), py::arg("n"), py::arg("trials") = 200,
        py::arg("seed") = 0);

  m.def("report_all",
        [](std::uint64_t seed, const std::string& out_dir, bool quick) {
          ReportOptions opt;
          opt.seed = seed;
          opt.out_dir = out_dir;
          opt.quick = quick;
          py::list out;
          for (const auto& r : report_all(opt)) {
            py::dict d;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("seed") = 42, py::arg("out_dir") = "seqnorm-report",
        py::arg("quick") = false);
}
