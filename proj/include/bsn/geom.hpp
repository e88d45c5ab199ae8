#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace bsn {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend auto operator<=>(const Point2&, const Point2&) = default;
};

struct Circle {
  Point2 center;
  double radius = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

double squared_distance(Point2 p, Point2 q);
double distance(Point2 p, Point2 q);
Point2 midpoint(Point2 p, Point2 q);

bool is_finite(Point2 p);

// Length tolerance for an instance: 1e-9 times its bounding-box diagonal.
// Falls back to 1e-9 for a degenerate (single point) box.
double geometric_tolerance(std::span<const Point2> points);

double bounding_box_diagonal(std::span<const Point2> points);

// Centre of the circle through three points. Empty when the points are
// collinear, i.e. twice the signed area is at most `eps` times the longest
// side. A negative `eps` selects 1e-9 times the longest side.
std::optional<Point2> circumcenter(Point2 p1, Point2 p2, Point2 p3, double eps = -1.0);

// Real roots of c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, ascending, with
// repeated roots collapsed. Leading zero coefficients reduce the degree.
std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0);

}  // namespace bsn
