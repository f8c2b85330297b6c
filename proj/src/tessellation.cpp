#include "phihex/tessellation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace phihex {
namespace {

// Axial offset of the neighbor across edge j, whose center lies at angle
// 30 + 60j degrees.
constexpr std::array<std::array<int, 2>, 6> kNeighbors = {{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

// (cos 60k, sin 60k) as (rational, coefficient of sqrt3).
struct UnitCorner {
  Rational cos;
  Rational sin_sqrt3;
};

UnitCorner corner_direction(int k) {
  switch (k) {
    case 0: return {1, 0};
    case 1: return {Rational(1, 2), Rational(1, 2)};
    case 2: return {Rational(-1, 2), Rational(1, 2)};
    case 3: return {-1, 0};
    case 4: return {Rational(-1, 2), Rational(-1, 2)};
    case 5: return {Rational(1, 2), Rational(-1, 2)};
  }
  throw std::out_of_range("corner must be in 0..5");
}

HexIndex neighbor(const HexIndex& h, int j) {
  return {h.q + kNeighbors[j][0], h.r + kNeighbors[j][1]};
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed vertex '" + std::string(whole) + "', expected q,r,c");
  }
  return value;
}

}  // namespace

Point hex_center(const HexIndex& h, const Rational& side) {
  // x = 3s/2 q, y = s*sqrt3 (q/2 + r).
  Rational x = Rational(3, 2) * side * h.q;
  Rational y_sqrt3 = side * (Rational(h.q, 2) + h.r);
  return {QuadExt(x), QuadExt(0, y_sqrt3, 0, 0)};
}

Point vertex_point(const VertexRef& v, const Rational& side) {
  const UnitCorner u = corner_direction(v.corner);
  const Vector offset{QuadExt(Rational(side * u.cos)), QuadExt(0, side * u.sin_sqrt3, 0, 0)};
  return hex_center(v.hex, side) + offset;
}

std::array<VertexRef, 3> vertex_aliases(const VertexRef& v) {
  corner_direction(v.corner);  // range check
  // Corner k lies between the neighbors across edges k and k-1. Seen from
  // the neighbor across edge k it is corner k+4; from edge k-1, corner k+2.
  const int k = v.corner;
  std::array<VertexRef, 3> out = {
      v,
      VertexRef{neighbor(v.hex, k), (k + 4) % 6},
      VertexRef{neighbor(v.hex, (k + 5) % 6), (k + 2) % 6},
  };
  std::sort(out.begin(), out.end());
  return out;
}

std::array<HexIndex, 3> incident_hexagons(const VertexRef& v) {
  const auto aliases = vertex_aliases(v);
  return {aliases[0].hex, aliases[1].hex, aliases[2].hex};
}

VertexRef canonicalize(const VertexRef& v) { return vertex_aliases(v).front(); }

std::vector<VertexRef> enumerate_vertices(int radius) {
  if (radius < 0) throw std::invalid_argument("enumerate_vertices: radius must be >= 0");
  std::set<VertexRef> seen;
  for (std::int64_t q = -radius; q <= radius; ++q) {
    for (std::int64_t r = -radius; r <= radius; ++r) {
      if (std::abs(q + r) > radius) continue;
      for (int k = 0; k < 6; ++k) seen.insert(canonicalize({{q, r}, k}));
    }
  }
  return {seen.begin(), seen.end()};
}

VertexRef parse_vertex(std::string_view text) {
  const auto c1 = text.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
  if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos) {
    throw ParseError("malformed vertex '" + std::string(text) + "', expected q,r,c");
  }
  const std::int64_t q = parse_int(text.substr(0, c1), text);
  const std::int64_t r = parse_int(text.substr(c1 + 1, c2 - c1 - 1), text);
  const std::int64_t c = parse_int(text.substr(c2 + 1), text);
  if (c < 0 || c > 5) {
    throw ParseError("vertex corner " + std::to_string(c) + " out of range 0..5");
  }
  return canonicalize({{q, r}, static_cast<int>(c)});
}

std::string to_string(const VertexRef& v) {
  return std::to_string(v.hex.q) + "," + std::to_string(v.hex.r) + "," + std::to_string(v.corner);
}

std::string to_string(const HexIndex& h) {
  return std::to_string(h.q) + "," + std::to_string(h.r);
}

}  // namespace phihex
