#pragma once

/// \file
/// \brief The three-hexagon cluster at a tiling vertex O and its six
/// golden-section segments.
///
/// Each hexagon of side s carries concentric circles of radii s/2, s and 2s.
/// The two tangents from O to a hexagon's small circle each meet the middle
/// circle again at A and the large circle, on the far side of O, at B. O then
/// divides AB in the golden ratio: AB/AO = AO/OB = Phi.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "phihex/exact.hpp"
#include "phihex/fibonacci.hpp"
#include "phihex/geometry.hpp"
#include "phihex/tessellation.hpp"

namespace phihex {

struct CircleTriple {
  HexIndex hex;
  Circle small;
  Circle middle;
  Circle large;

  const Point& center() const { return middle.center(); }
};

/// Radii s/2, s, 2s about the center of `hex`.
CircleTriple make_circle_triple(const HexIndex& hex, const Rational& side);

struct Cluster {
  Point o;
  VertexRef vertex;
  Rational side;
  /// Sorted by hexagon (q, r).
  std::array<CircleTriple, 3> triples;
};

struct PhiSegment {
  int k = 0;
  HexIndex hex;
  /// Through O with unit direction; A = line.at(t_a), B = line.at(t_b).
  ParamLine line;
  QuadExt t_a;
  QuadExt t_b;
  Point a;
  Point b;
  QuadExt ao2;
  QuadExt ob2;
  QuadExt ab2;
};

struct PhiCheck {
  /// AB^2 == Phi^2 * AO^2
  bool ratio1_ok = false;
  /// AO^2 == Phi^2 * OB^2
  bool ratio2_ok = false;

  bool ok() const { return ratio1_ok && ratio2_ok; }
};

struct PhiReport {
  VertexRef vertex;
  Rational side;
  int frac_digits = 10;
  std::vector<PhiSegment> segments;
  std::vector<PhiCheck> checks;
  bool phi_exact_ok = false;
  bool equal_lengths_ok = false;
  /// Phi at frac_digits; empty unless phi_exact_ok.
  std::string ratio_decimal;
  /// Nearest Fibonacci convergent to ratio_decimal; set with it.
  std::optional<Convergent> fib_assessment;
};

/// Throws std::invalid_argument unless side > 0.
Cluster build_cluster(const VertexRef& v, const Rational& side);

/// Segments numbered k = 1..6 by hexagon order, then tangent direction angle.
/// Throws std::invalid_argument if O is not on a middle circle or a tangent
/// line misses the large circle on the far side of O.
std::vector<PhiSegment> construct_segments(const Cluster& c);

PhiCheck verify_phi(const PhiSegment& seg);

PhiReport make_report(const Cluster& c, int frac_digits = 10);

}  // namespace phihex
