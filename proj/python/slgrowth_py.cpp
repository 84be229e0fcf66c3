#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "slgrowth/energy.hpp"
#include "slgrowth/errors.hpp"
#include "slgrowth/growth.hpp"
#include "slgrowth/runner.hpp"
#include "slgrowth/torus.hpp"
#include "slgrowth/trace_lab.hpp"
#include "slgrowth/vandermonde.hpp"

namespace py = pybind11;
using namespace slgrowth;

namespace {

Matrix matrix_from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  const PrimeField F(p);
  const int n = static_cast<int>(rows.size());
  Matrix m(n, F);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) throw StructuralError("matrix rows must be square");
    for (int j = 0; j < n; ++j) m(i, j) = F.reduce(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

std::vector<std::vector<Residue>> rows_of(const Matrix& m) {
  std::vector<std::vector<Residue>> rows(static_cast<std::size_t>(m.n()));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
  return rows;
}

ExpandOptions options(std::size_t max_elements, unsigned workers) {
  ExpandOptions o;
  o.budget.max_elements = max_elements;
  o.workers = workers;
  return o;
}

py::dict torus_report_dict(const TorusReport& r) {
  py::dict d;
  d["witness_kappa"] = r.witness_kappa.coeffs;
  d["witness"] = rows_of(r.witness);
  d["torus_order"] = r.torus_order;
  d["split"] = r.split;
  d["intersection_sizes"] = r.intersection_sizes;
  d["richness_ratio"] = r.richness_ratio;
  d["regular_count"] = r.regular_count;
  return d;
}

}  // namespace

PYBIND11_MODULE(_slgrowth, m) {
  m.doc() = "Exact growth experiments in SL_n(F_p)";
  m.attr("__version__") = kVersion;

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<StructuralError>(m, "StructuralError", error);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", error);
  py::register_exception<NotInGroup>(m, "NotInGroup", error);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error);
  py::register_exception<Indeterminate>(m, "Indeterminate", error);
  py::register_exception<InvalidWitness>(m, "InvalidWitness", error);
  py::register_exception<UnsupportedTorus>(m, "UnsupportedTorus", error);
  py::register_exception<NoBins>(m, "NoBins", error);
  py::register_exception<GenerationFailed>(m, "GenerationFailed", error);
  py::register_exception<ConfigError>(m, "ConfigError", error);

  py::class_<Matrix>(m, "Matrix")
      .def(py::init(&matrix_from_rows), py::arg("p"), py::arg("rows"))
      .def_static("identity", [](int n, std::uint32_t p) { return Matrix::identity(n, PrimeField(p)); })
      .def_property_readonly("n", &Matrix::n)
      .def_property_readonly("p", &Matrix::p)
      .def("rows", &rows_of)
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
      .def("__matmul__", &mat_mul)
      .def("__repr__", [](const Matrix& a) { return "Matrix(p=" + std::to_string(a.p()) + ", " + a.to_string() + ")"; });

  m.def("mat_mul", &mat_mul);
  m.def("mat_inv", &mat_inv);
  m.def("mat_pow", &mat_pow);
  m.def("determinant", py::overload_cast<const Matrix&>(&determinant));
  m.def("trace", &trace);
  m.def("char_poly", [](const Matrix& g) { return char_poly(g).coeffs; },
        "Coefficients (a_{n-1}, ..., a_1) of det(xI - g).");
  m.def("classify_semisimple", [](const Matrix& g) { return std::string(to_string(classify_semisimple(g))); });
  m.def("is_split", &is_split);
  m.def("canonical_encode", [](const Matrix& g) {
    const auto bytes = canonical_encode(g);
    return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  });
  m.def("canonical_decode", [](int n, std::uint32_t p, py::bytes data) {
    const std::string s = data;
    return canonical_decode(n, PrimeField(p), std::vector<std::uint8_t>(s.begin(), s.end()));
  });

  py::class_<ElementSet>(m, "ElementSet")
      .def(py::init([](int n, std::uint32_t p) { return ElementSet(n, PrimeField(p)); }), py::arg("n"), py::arg("p"))
      .def(py::init([](const std::vector<Matrix>& members) {
             if (members.empty()) throw StructuralError("ElementSet needs at least one member to infer (n, p)");
             return ElementSet::from_matrices(members.front().n(), members.front().field(), members);
           }),
           py::arg("members"))
      .def("insert", &ElementSet::insert)
      .def("__contains__", &ElementSet::contains)
      .def("__len__", &ElementSet::size)
      .def_property_readonly("n", &ElementSet::n)
      .def_property_readonly("p", &ElementSet::p)
      .def("members", &ElementSet::members)
      .def("sorted", &ElementSet::sorted)
      .def("same_members", &ElementSet::same_members)
      .def("is_subset_of", &ElementSet::is_subset_of)
      .def("dump", &ElementSet::dump)
      .def_static("parse_dump", &ElementSet::parse_dump);

  m.def("group_order", &group_order);
  m.def("standard_generators", [](int n, std::uint32_t p) { return standard_generators(n, PrimeField(p)); });
  m.def("full_group", [](int n, std::uint32_t p, std::size_t max_elements) {
    return full_group(n, PrimeField(p), options(max_elements, 1));
  }, py::arg("n"), py::arg("p"), py::arg("max_elements") = Budget{}.max_elements);
  m.def("word_ball", [](const ElementSet& a, int r, std::size_t max_elements, unsigned workers) {
    return word_ball(a, r, options(max_elements, workers));
  }, py::arg("a"), py::arg("r"), py::arg("max_elements") = Budget{}.max_elements, py::arg("workers") = 1);
  m.def("triple_product", [](const ElementSet& a, std::size_t max_elements) {
    return triple_product(a, options(max_elements, 1));
  }, py::arg("a"), py::arg("max_elements") = Budget{}.max_elements);
  m.def("generates", [](const ElementSet& a, std::size_t max_elements) {
    return generates(a, options(max_elements, 1));
  }, py::arg("a"), py::arg("max_elements") = Budget{}.max_elements);
  m.def("growth_scan", [](const ElementSet& a, const std::vector<int>& ks) {
    return py::module_::import("json").attr("loads")(growth_scan(a, ks).to_json());
  }, py::arg("a"), py::arg("ks") = std::vector<int>{});

  m.def("centralizer_torus", &centralizer_torus);
  m.def("torus_order", [](const Matrix& g0) { return TorusHandle(g0).order(); });
  m.def("rich_torus_scan", [](const ElementSet& a, const std::vector<int>& ks) {
    py::list out;
    for (const auto& r : rich_torus_scan(a, ks)) out.append(torus_report_dict(r));
    return out;
  });
  m.def("character_kernel_members", [](const ElementSet& t, const std::vector<int>& exponents, const Matrix& g0) {
    return character_kernel_members(t, CharacterSpec(exponents), g0);
  });
  m.def("count_semisimple_classes", [](const ElementSet& b) {
    const auto c = count_semisimple_classes(b);
    return py::make_tuple(c.regular_class_count, c.nonregular_ss_count);
  });

  m.def("trace_tuple", [](const Matrix& g, const Matrix& t, int i) { return trace_tuple(g, t, i).values; });
  m.def("wealth", py::overload_cast<const Matrix&, int, Residue, const ElementSet&>(&wealth));
  m.def("dyadic_bins", [](const Matrix& t, const ElementSet& pool) {
    py::list out;
    for (const auto& b : dyadic_bins(t, pool)) {
      py::dict d;
      d["jvec"] = b.jvec;
      d["members"] = b.members;
      out.append(d);
    }
    return out;
  });
  m.def("f_of", [](const Matrix& t) { return f_of(t).r; });
  m.def("fiber_bound_check", [](const ElementSet& s) {
    const auto fb = fiber_bound_check(s);
    return py::make_tuple(fb.image_size, fb.set_size, fb.n_factorial, fb.holds());
  });
  m.def("lindep_check", [](const Matrix& t) {
    const auto r = lindep_check(t);
    py::dict d;
    d["dependent_all"] = r.dependent_all;
    d["independent_subsets"] = r.independent_subsets;
    d["subset_independent"] = r.subset_independent;
    d["eigenvalues"] = r.eigenvalues;
    d["symmetric"] = r.symmetric;
    d["outside_w"] = r.outside_w;
    return d;
  });

  m.def("elementary_symmetric", [](std::uint32_t p, const std::vector<Residue>& s, int k) {
    return elementary_symmetric(PrimeField(p), s, k);
  });
  m.def("generalized_vandermonde_det", [](std::uint32_t p, const std::vector<Residue>& s, int i) {
    return generalized_vandermonde_det(PrimeField(p), s, i);
  });
  m.def("verify_vander_identity", [](std::uint32_t p, const std::vector<Residue>& s, int i) {
    return verify_vander_identity(PrimeField(p), s, i);
  });
  m.def("cyclic_product_coordinates", [](std::uint32_t p, const std::vector<Residue>& r, int l) {
    return cyclic_product_coordinates(PrimeField(p), r, l);
  });
  m.def("additive_energy", [](std::uint32_t p, const std::vector<Residue>& x, const std::vector<Residue>& y) {
    const PrimeField F(p);
    return additive_energy(ScalarSet(F, x), ScalarSet(F, y));
  });

  m.def("run", [](const std::string& subcommand, const py::dict& config) {
    ExperimentConfig cfg;
    cfg.merge_json(nlohmann::json::parse(py::module_::import("json").attr("dumps")(config).cast<std::string>()));
    std::ostringstream console;
    const RunManifest manifest = run(cfg, subcommand, console);
    py::object loads = py::module_::import("json").attr("loads");
    return py::make_tuple(console.str(), loads(manifest.to_json()));
  }, py::arg("subcommand"), py::arg("config") = py::dict(),
        "Runs a CLI subcommand in-process; returns (report text, manifest dict).");
}
