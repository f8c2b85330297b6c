#include "phihex/serialize.hpp"

namespace phihex {

Json to_json(const QuadExt& x) {
  return Json{{"a", to_fraction_string(x.a())},
              {"b", to_fraction_string(x.b())},
              {"c", to_fraction_string(x.c())},
              {"d", to_fraction_string(x.d())},
              {"decimal", to_decimal(x, kJsonDecimalDigits)}};
}

Json to_json(const Point& p) { return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(const PhiSegment& seg) {
  return Json{{"k", seg.k},        {"hex", to_string(seg.hex)}, {"A", to_json(seg.a)},     {"B", to_json(seg.b)},
              {"ao2", to_json(seg.ao2)}, {"ob2", to_json(seg.ob2)}, {"ab2", to_json(seg.ab2)}};
}

Json to_json(const PhiReport& report) {
  Json segments = Json::array();
  for (std::size_t i = 0; i < report.segments.size(); ++i) {
    Json s = to_json(report.segments[i]);
    s["ratio1_ok"] = report.checks[i].ratio1_ok;
    s["ratio2_ok"] = report.checks[i].ratio2_ok;
    segments.push_back(std::move(s));
  }
  Json fib = nullptr;
  if (report.fib_assessment) {
    const Convergent& c = *report.fib_assessment;
    fib = Json{{"n", c.n},
               {"ratio", to_decimal(QuadExt(c.ratio), report.frac_digits)},
               {"variance", variance(c.n, report.frac_digits)}};
  }
  return Json{{"vertex", to_string(report.vertex)},
              {"side", to_fraction_string(report.side)},
              {"segments", std::move(segments)},
              {"phi_exact_ok", report.phi_exact_ok},
              {"equal_lengths_ok", report.equal_lengths_ok},
              {"ratio_decimal", report.ratio_decimal},
              {"fibonacci", std::move(fib)},
              {"note", kDecimalSeparatorNote}};
}

Json convergent_json(const Convergent& c, int frac_digits, Rounding mode) {
  return Json{{"n", c.n},
              {"fn", c.fn.str()},
              {"fn_1", c.fn_1.str()},
              {"ratio", to_decimal(QuadExt(c.ratio), frac_digits, mode)},
              {"variance", variance(c.n, frac_digits, mode)}};
}

}  // namespace phihex
