#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phihex/construction.hpp"
#include "phihex/fibonacci.hpp"
#include "phihex/render.hpp"
#include "phihex/serialize.hpp"

namespace py = pybind11;
using namespace phihex;

namespace {

Rounding parse_rounding(const std::string& name) {
  if (name == "truncate") return Rounding::kTruncate;
  if (name == "half-even") return Rounding::kHalfEven;
  throw std::invalid_argument("rounding must be 'truncate' or 'half-even'");
}

// JSON crosses the boundary as text; the Python side decodes it.
std::string verify(const std::string& vertex, const std::string& side, int digits) {
  return to_json(make_report(build_cluster(parse_vertex(vertex), parse_rational(side)), digits)).dump();
}

std::vector<std::pair<std::string, bool>> scan(int radius, const std::string& side) {
  const Rational s = parse_rational(side);
  std::vector<std::pair<std::string, bool>> out;
  for (const auto& v : enumerate_vertices(radius)) {
    const PhiReport r = make_report(build_cluster(v, s));
    out.emplace_back(to_string(v), r.phi_exact_ok && r.equal_lengths_ok);
  }
  return out;
}

std::string render(const std::string& vertex, const std::string& side, int digits, bool labels) {
  const Cluster c = build_cluster(parse_vertex(vertex), parse_rational(side));
  RenderOptions opts;
  opts.frac_digits = digits;
  opts.show_labels = labels;
  return render_svg(make_report(c), c, opts);
}

}  // namespace

PYBIND11_MODULE(_phihex, m) {
  py::register_exception<NotRepresentable>(m, "NotRepresentable", PyExc_ArithmeticError);

  m.def("phi_decimal", [](int digits, const std::string& rounding) {
    return to_decimal(QuadExt::phi(), digits, parse_rounding(rounding));
  }, py::arg("digits") = 10, py::arg("rounding") = "half-even");
  m.def("verify", &verify, py::arg("vertex") = "0,0,0", py::arg("side") = "1", py::arg("digits") = 10);
  m.def("scan", &scan, py::arg("radius"), py::arg("side") = "1");
  m.def("enumerate_vertices", [](int radius) {
    std::vector<std::string> out;
    for (const auto& v : enumerate_vertices(radius)) out.push_back(to_string(v));
    return out;
  }, py::arg("radius"));
  m.def("fib", [](int n) { return fib(n).str(); }, py::arg("n"));
  m.def("convergent", [](int n, int digits, const std::string& rounding) {
    return convergent_json(convergent(n), digits, parse_rounding(rounding)).dump();
  }, py::arg("n"), py::arg("digits") = 10, py::arg("rounding") = "truncate");
  m.def("assess", [](const std::string& ratio, int digits) {
    return convergent_json(assess_nearest(ratio), digits, Rounding::kHalfEven).dump();
  }, py::arg("ratio"), py::arg("digits") = 10);
  m.def("render_svg", &render, py::arg("vertex") = "0,0,0", py::arg("side") = "1", py::arg("digits") = 12,
        py::arg("labels") = true);
}
