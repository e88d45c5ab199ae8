#include "bsn/geom.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace bsn {

double squared_distance(Point2 p, Point2 q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy;
}

double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

Point2 midpoint(Point2 p, Point2 q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double bounding_box_diagonal(std::span<const Point2> points) {
  if (points.empty()) return 0.0;
  double lo_x = points[0].x, hi_x = points[0].x;
  double lo_y = points[0].y, hi_y = points[0].y;
  for (const Point2& p : points) {
    lo_x = std::min(lo_x, p.x);
    hi_x = std::max(hi_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_y = std::max(hi_y, p.y);
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

double geometric_tolerance(std::span<const Point2> points) {
  const double diag = bounding_box_diagonal(points);
  return 1e-9 * (diag > 0.0 ? diag : 1.0);
}

std::optional<Point2> circumcenter(Point2 p1, Point2 p2, Point2 p3, double eps) {
  const Point2 b = p2 - p1;
  const Point2 c = p3 - p1;
  const double longest =
      std::sqrt(std::max({dot(b, b), dot(c, c), squared_distance(p2, p3)}));
  if (eps < 0.0) eps = 1e-9 * longest;
  const double d = 2.0 * cross(b, c);
  if (std::abs(d) <= 2.0 * eps * longest || d == 0.0) return std::nullopt;
  const double bb = dot(b, b);
  const double cc = dot(c, c);
  const double ux = (c.y * bb - b.y * cc) / d;
  const double uy = (b.x * cc - c.x * bb) / d;
  return Point2{p1.x + ux, p1.y + uy};
}

namespace {

// Horner evaluation of value and derivative; coefficients lowest degree first.
std::pair<double, double> eval_poly(std::span<const double> c, double x) {
  double value = 0.0;
  double deriv = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    deriv = deriv * x + value;
    value = value * x + c[i];
  }
  return {value, deriv};
}

double poly_scale(std::span<const double> c, double x) {
  double s = 0.0;
  double xp = 1.0;
  for (double ci : c) {
    s += std::abs(ci) * xp;
    xp *= std::abs(x);
  }
  return s;
}

double newton_polish(std::span<const double> c, double x) {
  for (int it = 0; it < 8; ++it) {
    const auto [v, d] = eval_poly(c, x);
    if (v == 0.0 || d == 0.0) break;
    const double step = v / d;
    const double next = x - step;
    if (!std::isfinite(next)) break;
    // Keep the step only when it reduces the residual.
    if (std::abs(eval_poly(c, next).first) > std::abs(v)) break;
    x = next;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

}  // namespace

std::vector<double> real_quartic_roots(double c4, double c3, double c2, double c1, double c0) {
  std::array<double, 5> coeff{c0, c1, c2, c3, c4};
  double cmax = 0.0;
  for (double v : coeff) cmax = std::max(cmax, std::abs(v));
  if (cmax == 0.0) throw std::invalid_argument("real_quartic_roots: zero polynomial");

  int degree = 4;
  while (degree > 0 && std::abs(coeff[degree]) <= 1e-13 * cmax) --degree;
  std::span<const double> c(coeff.data(), static_cast<std::size_t>(degree) + 1);

  std::vector<double> roots;
  if (degree == 0) return roots;
  if (degree == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
  for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -c[i] / c[degree];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const Eigen::VectorXcd eig = solver.eigenvalues();

  for (int i = 0; i < eig.size(); ++i) {
    const std::complex<double> z = eig[i];
    const double mag = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) > 1e-5 * mag) continue;
    const double x = newton_polish(c, z.real());
    const double residual = std::abs(eval_poly(c, x).first);
    const bool real_eigen = std::abs(z.imag()) <= 1e-9 * mag;
    // Pairs with a small imaginary part survive only when the polynomial
    // vanishes on the real axis there (a near-multiple real root).
    if (residual <= 1e-9 * poly_scale(c, x) || (real_eigen && residual <= 1e-7 * poly_scale(c, x))) {
      roots.push_back(x);
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (!unique.empty() && std::abs(r - unique.back()) <= 1e-7 * std::max(1.0, std::abs(r))) {
      // keep the one with the smaller residual
      if (std::abs(eval_poly(c, r).first) < std::abs(eval_poly(c, unique.back()).first))
        unique.back() = r;
      continue;
    }
    unique.push_back(r);
  }
  return unique;
}

}  // namespace bsn
