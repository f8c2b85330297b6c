#pragma once

/// \file
/// \brief Points, lines and circles with QuadExt coordinates, plus the exact
/// tangency and intersection predicates used by the cluster construction.

#include <stdexcept>
#include <vector>

#include "phihex/exact.hpp"

namespace phihex {

/// The query point lies strictly inside the circle; no tangent exists.
class PointInsideCircle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Vector {
  QuadExt x;
  QuadExt y;

  friend bool operator==(const Vector&, const Vector&) = default;
  friend Vector operator+(const Vector& u, const Vector& v) { return {u.x + v.x, u.y + v.y}; }
  friend Vector operator-(const Vector& u, const Vector& v) { return {u.x - v.x, u.y - v.y}; }
  friend Vector operator*(const Vector& u, const QuadExt& k) { return {u.x * k, u.y * k}; }
  friend Vector operator*(const QuadExt& k, const Vector& u) { return u * k; }
};

struct Point {
  QuadExt x;
  QuadExt y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Vector operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator+(const Point& p, const Vector& v) { return {p.x + v.x, p.y + v.y}; }
};

inline QuadExt dot(const Vector& u, const Vector& v) { return u.x * v.x + u.y * v.y; }
inline QuadExt cross(const Vector& u, const Vector& v) { return u.x * v.y - u.y * v.x; }
/// Counter-clockwise quarter turn.
inline Vector perp(const Vector& u) { return {-u.y, u.x}; }

/// Strict weak order of nonzero vectors by polar angle in [0, 2pi).
bool angle_less(const Vector& u, const Vector& v);

/// origin + t * dir. The direction is not normalized, so a parameter t is a
/// length only when |dir| = 1.
class ParamLine {
 public:
  ParamLine(Point origin, Vector dir);

  const Point& origin() const { return origin_; }
  const Vector& dir() const { return dir_; }
  Point at(const QuadExt& t) const { return origin_ + dir_ * t; }

 private:
  Point origin_;
  Vector dir_;
};

class Circle {
 public:
  /// Throws std::invalid_argument unless radius > 0.
  Circle(Point center, QuadExt radius);

  const Point& center() const { return center_; }
  const QuadExt& radius() const { return radius_; }

 private:
  Point center_;
  QuadExt radius_;
};

class Segment {
 public:
  /// Throws std::invalid_argument if a == b.
  Segment(Point a, Point b);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }

 private:
  Point a_;
  Point b_;
};

QuadExt squared_distance(const Point& p, const Point& q);

/// cross(dir, p - origin)^2 / |dir|^2.
QuadExt squared_distance_point_line(const Point& p, const ParamLine& l);

bool is_tangent(const ParamLine& l, const Circle& c);

/// Parameters t (ascending) where l meets c; 0, 1 (tangent) or 2 values.
/// Throws NotRepresentable when the discriminant has no square root in the
/// field.
std::vector<QuadExt> line_circle_intersections(const ParamLine& l, const Circle& c);

/// Lines through p tangent to c, with unit directions. Two lines (rotated by
/// +theta then -theta from the direction to the center) when p is outside,
/// one when p is on the circle. Throws PointInsideCircle or NotRepresentable.
std::vector<ParamLine> tangent_lines_from_point(const Point& p, const Circle& c);

}  // namespace phihex
