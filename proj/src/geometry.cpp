#include "phihex/geometry.hpp"

namespace phihex {
namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Vector& u) {
  const int sy = sign(u.y);
  if (sy > 0) return 0;
  if (sy < 0) return 1;
  return sign(u.x) > 0 ? 0 : 1;
}

QuadExt checked_sqrt(const QuadExt& value) {
  if (!value.is_rational()) {
    throw NotRepresentable("square root of an irrational field element is not supported");
  }
  return sqrt_exact(value.a());
}

}  // namespace

bool angle_less(const Vector& u, const Vector& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return sign(cross(u, v)) > 0;
}

ParamLine::ParamLine(Point origin, Vector dir) : origin_(std::move(origin)), dir_(std::move(dir)) {
  if (sign(dir_.x) == 0 && sign(dir_.y) == 0) {
    throw std::invalid_argument("ParamLine: direction must be nonzero");
  }
}

Circle::Circle(Point center, QuadExt radius) : center_(std::move(center)), radius_(std::move(radius)) {
  if (sign(radius_) <= 0) throw std::invalid_argument("Circle: radius must be positive");
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw std::invalid_argument("Segment: endpoints must differ");
}

QuadExt squared_distance(const Point& p, const Point& q) {
  Vector d = p - q;
  return dot(d, d);
}

QuadExt squared_distance_point_line(const Point& p, const ParamLine& l) {
  QuadExt c = cross(l.dir(), p - l.origin());
  return c * c / dot(l.dir(), l.dir());
}

bool is_tangent(const ParamLine& l, const Circle& c) {
  return squared_distance_point_line(c.center(), l) == c.radius() * c.radius();
}

std::vector<QuadExt> line_circle_intersections(const ParamLine& l, const Circle& c) {
  // |w + t*dir|^2 = r^2 with w = origin - center:
  //   A t^2 + 2 H t + C = 0,  A = |dir|^2, H = dir.w, C = |w|^2 - r^2.
  const Vector w = l.origin() - c.center();
  const QuadExt a = dot(l.dir(), l.dir());
  const QuadExt h = dot(l.dir(), w);
  const QuadExt cc = dot(w, w) - c.radius() * c.radius();
  const QuadExt disc = h * h - a * cc;

  const int s = sign(disc);
  if (s < 0) return {};
  const QuadExt inv_a = a.inverse();
  if (s == 0) return {-h * inv_a};
  const QuadExt root = checked_sqrt(disc);
  return {(-h - root) * inv_a, (-h + root) * inv_a};
}

std::vector<ParamLine> tangent_lines_from_point(const Point& p, const Circle& c) {
  // Rotating the unit direction w/|w| by +-theta, where cos = L/|w| and
  // sin = r/|w|, gives (L*w +- r*perp(w)) / |w|^2 with L the tangent length.
  const Vector w = c.center() - p;
  const QuadExt d2 = dot(w, w);
  const QuadExt r2 = c.radius() * c.radius();
  const QuadExt l2 = d2 - r2;

  const int s = sign(l2);
  if (s < 0) throw PointInsideCircle("tangent_lines_from_point: point lies inside the circle");
  const QuadExt inv_d2 = d2.inverse();
  const Vector side = perp(w) * c.radius();
  if (s == 0) return {ParamLine(p, side * inv_d2)};

  const Vector along = w * checked_sqrt(l2);
  return {ParamLine(p, (along + side) * inv_d2), ParamLine(p, (along - side) * inv_d2)};
}

}  // namespace phihex
