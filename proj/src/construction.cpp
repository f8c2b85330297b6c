#include "phihex/construction.hpp"

#include <algorithm>
#include <stdexcept>

namespace phihex {
namespace {

const QuadExt& phi_squared() {
  static const QuadExt kPhi2 = QuadExt::phi() * QuadExt::phi();
  return kPhi2;
}

// Picks the single intersection parameter satisfying pred.
template <typename Pred>
QuadExt pick_parameter(const std::vector<QuadExt>& ts, Pred pred, const char* what) {
  const QuadExt* found = nullptr;
  for (const auto& t : ts) {
    if (!pred(t)) continue;
    if (found != nullptr) throw std::invalid_argument(what);
    found = &t;
  }
  if (found == nullptr) throw std::invalid_argument(what);
  return *found;
}

}  // namespace

CircleTriple make_circle_triple(const HexIndex& hex, const Rational& side) {
  const Point center = hex_center(hex, side);
  return CircleTriple{hex, Circle(center, QuadExt(Rational(side / 2))), Circle(center, QuadExt(side)),
                      Circle(center, QuadExt(Rational(side * 2)))};
}

Cluster build_cluster(const VertexRef& v, const Rational& side) {
  if (side <= 0) throw std::invalid_argument("build_cluster: side must be positive");
  const VertexRef canonical = canonicalize(v);
  const auto hexes = incident_hexagons(canonical);
  return Cluster{vertex_point(canonical, side), canonical, side,
                 {make_circle_triple(hexes[0], side), make_circle_triple(hexes[1], side),
                  make_circle_triple(hexes[2], side)}};
}

std::vector<PhiSegment> construct_segments(const Cluster& c) {
  std::vector<PhiSegment> out;
  out.reserve(6);
  for (const auto& triple : c.triples) {
    auto lines = tangent_lines_from_point(c.o, triple.small);
    std::sort(lines.begin(), lines.end(),
              [](const ParamLine& l1, const ParamLine& l2) { return angle_less(l1.dir(), l2.dir()); });
    for (auto& line : lines) {
      // O is on the middle circle, so one middle crossing is t = 0.
      QuadExt t_a = pick_parameter(
          line_circle_intersections(line, triple.middle), [](const QuadExt& t) { return !t.is_zero(); },
          "construct_segments: O must lie on every middle circle");
      const int side_a = sign(t_a);
      QuadExt t_b = pick_parameter(
          line_circle_intersections(line, triple.large),
          [side_a](const QuadExt& t) { return sign(t) == -side_a; },
          "construct_segments: no large-circle crossing opposite A");

      PhiSegment seg{0, triple.hex, line, t_a, t_b, line.at(t_a), line.at(t_b), {}, {}, {}};
      seg.ao2 = squared_distance(seg.a, c.o);
      seg.ob2 = squared_distance(c.o, seg.b);
      seg.ab2 = squared_distance(seg.a, seg.b);
      seg.k = static_cast<int>(out.size()) + 1;
      out.push_back(std::move(seg));
    }
  }
  return out;
}

PhiCheck verify_phi(const PhiSegment& seg) {
  return {seg.ab2 == phi_squared() * seg.ao2, seg.ao2 == phi_squared() * seg.ob2};
}

PhiReport make_report(const Cluster& c, int frac_digits) {
  if (frac_digits < 1) throw std::invalid_argument("make_report: frac_digits must be >= 1");
  PhiReport report;
  report.vertex = c.vertex;
  report.side = c.side;
  report.frac_digits = frac_digits;
  report.segments = construct_segments(c);

  report.phi_exact_ok = !report.segments.empty();
  for (const auto& seg : report.segments) {
    report.checks.push_back(verify_phi(seg));
    report.phi_exact_ok = report.phi_exact_ok && report.checks.back().ok();
  }
  report.equal_lengths_ok = std::all_of(report.segments.begin(), report.segments.end(), [&](const PhiSegment& s) {
    return s.ab2 == report.segments.front().ab2;
  });

  if (report.phi_exact_ok) {
    // Each verified ratio is exactly Phi.
    report.ratio_decimal = to_decimal(QuadExt::phi(), frac_digits);
    report.fib_assessment = assess_nearest(report.ratio_decimal);
  }
  return report;
}

}  // namespace phihex
