#pragma once

/// \file
/// \brief The regular hexagonal tiling {6;3} in flat-top axial coordinates.
///
/// Hexagon (q, r) of side s is centered at q*U + r*V with
/// U = (3s/2, s*sqrt3/2) and V = (0, s*sqrt3). Corner k sits at angle 60k
/// degrees from its center, so corner 0 is at center + (s, 0).

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phihex/exact.hpp"
#include "phihex/geometry.hpp"

namespace phihex {

struct HexIndex {
  std::int64_t q = 0;
  std::int64_t r = 0;

  friend auto operator<=>(const HexIndex&, const HexIndex&) = default;
};

/// A hexagon corner. Each tiling vertex has three aliases, one per incident
/// hexagon; the canonical alias is the lexicographically smallest (q, r, corner).
struct VertexRef {
  HexIndex hex;
  int corner = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

Point hex_center(const HexIndex& h, const Rational& side);
Point vertex_point(const VertexRef& v, const Rational& side);

/// The three hexagons sharing the vertex, sorted by (q, r).
std::array<HexIndex, 3> incident_hexagons(const VertexRef& v);

/// All three (hex, corner) names of the vertex, sorted.
std::array<VertexRef, 3> vertex_aliases(const VertexRef& v);

VertexRef canonicalize(const VertexRef& v);

/// Canonical vertices of every hexagon with |q|, |r|, |q + r| <= radius,
/// strictly increasing.
std::vector<VertexRef> enumerate_vertices(int radius);

/// Parses "q,r,c" and canonicalizes. Throws ParseError on malformed text or a
/// corner outside 0..5.
VertexRef parse_vertex(std::string_view text);

/// "q,r,c".
std::string to_string(const VertexRef& v);
/// "q,r".
std::string to_string(const HexIndex& h);

}  // namespace phihex
