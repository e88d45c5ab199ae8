#include "bsn/scsd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bsn {

std::size_t ColorSystem::point_count() const {
  std::size_t m = 0;
  for (const auto& c : classes) m += c.size();
  return m;
}

void ColorSystem::add_class(std::vector<Site> sites) {
  if (sites.empty()) throw std::invalid_argument("ColorSystem: empty class");
  classes.push_back(std::move(sites));
}

namespace {

void validate(const ColorSystem& cs) {
  if (cs.classes.empty()) throw std::invalid_argument("colour system has no classes");
  for (const auto& c : cs.classes)
    if (c.empty()) throw std::invalid_argument("colour system has an empty class");
}

std::vector<Point2> distinct_positions(const ColorSystem& cs) {
  std::vector<Point2> pts;
  for (const auto& c : cs.classes)
    for (const Site& s : c) pts.push_back(s.pos);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <class Fn>
void for_each_candidate(const std::vector<Point2>& pts, Fn&& fn) {
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) fn(pts[i]);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) fn(midpoint(pts[i], pts[j]));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if (auto c = circumcenter(pts[i], pts[j], pts[k])) fn(*c);
}

double tie_tolerance(const std::vector<Point2>& pts) { return 1e-3 * geometric_tolerance(pts); }

// Keeps the smallest value; near-ties go to the lexicographically smaller key.
template <class Key>
struct Incumbent {
  double value = std::numeric_limits<double>::infinity();
  Key key{};
  double tie = 0.0;

  bool offer(double v, const Key& k) {
    if (v < value - tie || (v <= value + tie && k < key)) {
      value = v;
      key = k;
      return true;
    }
    return false;
  }
};

}  // namespace

double color_radius(Point2 x, const ColorSystem& cs, double cutoff) {
  const double cut2 = cutoff * cutoff;
  double worst = 0.0;
  for (const auto& c : cs.classes) {
    double best = std::numeric_limits<double>::infinity();
    for (const Site& s : c) {
      best = std::min(best, squared_distance(x, s.pos));
      if (best <= worst) break;
    }
    worst = std::max(worst, best);
    if (worst >= cut2) return std::sqrt(worst);
  }
  return std::sqrt(worst);
}

std::vector<Site> nearest_per_color(Point2 x, const ColorSystem& cs) {
  std::vector<Site> out;
  out.reserve(cs.classes.size());
  for (const auto& c : cs.classes) {
    const Site* best = &c.front();
    double bd = squared_distance(x, best->pos);
    for (const Site& s : c) {
      const double d = squared_distance(x, s.pos);
      if (d < bd || (d == bd && std::pair(s.pos, s.id) < std::pair(best->pos, best->id))) {
        best = &s;
        bd = d;
      }
    }
    out.push_back(*best);
  }
  return out;
}

std::vector<Point2> scsd_candidates(const ColorSystem& cs) {
  std::vector<Point2> out;
  for_each_candidate(distinct_positions(cs), [&](Point2 z) { out.push_back(z); });
  return out;
}

ScsdResult smallest_color_spanning_disk(const ColorSystem& cs) {
  validate(cs);
  const auto pts = distinct_positions(cs);
  Incumbent<Point2> inc;
  inc.tie = tie_tolerance(pts);
  for_each_candidate(pts, [&](Point2 z) {
    const double r = color_radius(z, cs, inc.value + inc.tie);
    inc.offer(r, z);
  });

  ScsdResult res;
  res.disk = {inc.key, inc.value};
  res.nearest = nearest_per_color(inc.key, cs);
  const double tol = geometric_tolerance(pts);
  for (const Site& s : res.nearest) {
    if (distance(s.pos, inc.key) < inc.value - tol) continue;
    const bool dup = std::any_of(res.determinators.begin(), res.determinators.end(),
                                 [&](const Site& d) { return d.pos == s.pos; });
    if (!dup) res.determinators.push_back(s);
  }
  if (res.determinators.empty()) res.determinators.push_back(res.nearest.front());
  return res;
}

double scsd_radius(const ColorSystem& cs, double cutoff) {
  validate(cs);
  const auto pts = distinct_positions(cs);
  double best = cutoff;
  bool found = false;
  for_each_candidate(pts, [&](Point2 z) {
    const double r = color_radius(z, cs, best);
    if (r < best) {
      best = r;
      found = true;
    }
  });
  return found ? best : std::numeric_limits<double>::infinity();
}

double coupled_objective(Point2 s1, Point2 s2, const ColorSystem& cs1, const ColorSystem& cs2,
                         double cutoff) {
  double v = distance(s1, s2);
  if (v >= cutoff) return v;
  v = std::max(v, color_radius(s1, cs1, cutoff));
  if (v >= cutoff) return v;
  return std::max(v, color_radius(s2, cs2, cutoff));
}

namespace {

struct Scored {
  double f;
  Point2 z;
};

std::vector<Scored> scored_candidates(const ColorSystem& cs) {
  std::vector<Scored> out;
  for_each_candidate(distinct_positions(cs), [&](Point2 z) { out.push_back({color_radius(z, cs), z}); });
  std::sort(out.begin(), out.end(), [](const Scored& a, const Scored& b) {
    return a.f < b.f || (a.f == b.f && a.z < b.z);
  });
  return out;
}

using PairKey = std::pair<Point2, Point2>;

class CoupledSearch {
 public:
  CoupledSearch(const ColorSystem& cs1, const ColorSystem& cs2) : cs1_(cs1), cs2_(cs2) {
    p1_ = distinct_positions(cs1);
    p2_ = distinct_positions(cs2);
    std::vector<Point2> all = p1_;
    all.insert(all.end(), p2_.begin(), p2_.end());
    inc_.tie = tie_tolerance(all);
  }

  CoupledResult run() {
    const auto c1 = scored_candidates(cs1_);
    const auto c2 = scored_candidates(cs2_);
    offer(c1.front().z, c2.front().z);
    anchored(c1, c2, p2_, cs2_, false);
    anchored(c2, c1, p1_, cs1_, true);
    trisections();
    one_two(p1_, p2_, false);
    one_two(p2_, p1_, true);
    two_two();
    return {inc_.key.first, inc_.key.second, inc_.value};
  }

 private:
  void offer(Point2 s1, Point2 s2) {
    if (!is_finite(s1) || !is_finite(s2)) return;
    const double v = coupled_objective(s1, s2, cs1_, cs2_, inc_.value + inc_.tie);
    inc_.offer(v, {s1, s2});
  }

  void offer_ordered(Point2 own, Point2 other, bool swapped) {
    if (swapped) offer(other, own);
    else offer(own, other);
  }

  // One centre at a candidate of its own system; the partner either at a
  // candidate of its system or anchored to the first (it becomes one more
  // determinator of the partner's disk).
  void anchored(const std::vector<Scored>& own, const std::vector<Scored>& other,
                const std::vector<Point2>& other_pts, const ColorSystem& other_cs, bool swapped) {
    for (const Scored& y : own) {
      if (y.f >= inc_.value + inc_.tie) break;
      offer_ordered(y.z, y.z, swapped);
      for (const Scored& z : other) {
        if (z.f >= inc_.value + inc_.tie) break;
        if (distance(y.z, z.z) >= inc_.value + inc_.tie) continue;
        offer_ordered(y.z, z.z, swapped);
      }
      const std::size_t m = other_pts.size();
      for (std::size_t i = 0; i < m; ++i) {
        const Point2 mid = midpoint(y.z, other_pts[i]);
        if (color_radius(mid, other_cs, inc_.value + inc_.tie) < inc_.value + inc_.tie)
          offer_ordered(y.z, mid, swapped);
        for (std::size_t j = i + 1; j < m; ++j) {
          if (auto c = circumcenter(y.z, other_pts[i], other_pts[j])) {
            if (distance(*c, y.z) >= inc_.value + inc_.tie) continue;
            offer_ordered(y.z, *c, swapped);
          }
        }
      }
    }
  }

  // One tight point per centre: both centres on the segment a-b.
  void trisections() {
    for (Point2 a : p1_)
      for (Point2 b : p2_) {
        if (distance(a, b) / 3.0 >= inc_.value + inc_.tie) continue;
        offer(a + (1.0 / 3.0) * (b - a), a + (2.0 / 3.0) * (b - a));
      }
  }

  // One tight point a for the first centre, two (c, d) for the second:
  // s1 = mid(a, s2) and s2 on the bisector of cd with |s2 a| = 2 |s2 c|.
  void one_two(const std::vector<Point2>& pa, const std::vector<Point2>& pb, bool swapped) {
    const std::size_t m = pb.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        const Point2 c = pb[i], d = pb[j];
        const double h = 0.5 * distance(c, d);
        if (h >= inc_.value + inc_.tie) continue;
        const Point2 mc = midpoint(c, d);
        const Point2 dir = d - c;
        const Point2 u = (1.0 / (2.0 * h)) * Point2{-dir.y, dir.x};
        for (Point2 a : pa) {
          const Point2 w = mc - a;
          const double qq = dot(w, u);
          for (double mu : real_quartic_roots(0.0, 0.0, 3.0, -2.0 * qq, 4.0 * h * h - dot(w, w))) {
            const Point2 s2 = mc + mu * u;
            offer_ordered(midpoint(a, s2), s2, swapped);
          }
        }
      }
  }

  // Two tight points per centre plus the s1 s2 edge: a quartic in the
  // bisector parameter of the first centre.
  void two_two() {
    const std::size_t m1 = p1_.size(), m2 = p2_.size();
    for (std::size_t i = 0; i < m1; ++i)
      for (std::size_t j = i + 1; j < m1; ++j) {
        const double h1 = 0.5 * distance(p1_[i], p1_[j]);
        if (h1 >= inc_.value + inc_.tie) continue;
        const Point2 m1p = midpoint(p1_[i], p1_[j]);
        const Point2 d1 = p1_[j] - p1_[i];
        const Point2 u1 = (1.0 / (2.0 * h1)) * Point2{-d1.y, d1.x};
        for (std::size_t k = 0; k < m2; ++k)
          for (std::size_t l = k + 1; l < m2; ++l) {
            const double h2 = 0.5 * distance(p2_[k], p2_[l]);
            if (h2 >= inc_.value + inc_.tie) continue;
            const Point2 m2p = midpoint(p2_[k], p2_[l]);
            const Point2 d2 = p2_[l] - p2_[k];
            const Point2 u2 = (1.0 / (2.0 * h2)) * Point2{-d2.y, d2.x};
            solve_two_two(m1p, u1, h1, m2p, u2, h2);
          }
      }
  }

  void solve_two_two(Point2 m1, Point2 u1, double h1, Point2 m2, Point2 u2, double h2) {
    const Point2 w = m1 - m2;
    const double p = dot(w, u1);
    const double q = dot(w, u2);
    const double c = dot(u1, u2);
    const double delta = h1 * h1 - h2 * h2;
    const double kk = dot(w, w) + delta - h1 * h1;
    const double c4 = 1.0 - 4.0 * c * c;
    const double c3 = 4.0 * p - 8.0 * c * q;
    const double c2 = 4.0 * p * p + 2.0 * kk - 4.0 * q * q - 4.0 * c * c * delta;
    const double c1 = 4.0 * p * kk - 8.0 * c * q * delta;
    const double c0 = kk * kk - 4.0 * q * q * delta;
    if (c4 == 0.0 && c3 == 0.0 && c2 == 0.0 && c1 == 0.0 && c0 == 0.0) return;
    for (double lambda : real_quartic_roots(c4, c3, c2, c1, c0)) {
      const double a = lambda * lambda + 2.0 * p * lambda + kk;
      const double b = 2.0 * q + 2.0 * c * lambda;
      const Point2 s1 = m1 + lambda * u1;
      if (std::abs(b) > 1e-12 * (1.0 + std::abs(a))) {
        offer(s1, m2 + (a / b) * u2);
      } else {
        const double mu2 = lambda * lambda + delta;
        if (mu2 < 0.0) continue;
        const double mu = std::sqrt(mu2);
        offer(s1, m2 + mu * u2);
        offer(s1, m2 + (-mu) * u2);
      }
    }
  }

  const ColorSystem& cs1_;
  const ColorSystem& cs2_;
  std::vector<Point2> p1_, p2_;
  Incumbent<PairKey> inc_;
};

}  // namespace

CoupledResult coupled_two_disk(const ColorSystem& cs1, const ColorSystem& cs2) {
  validate(cs1);
  validate(cs2);
  return CoupledSearch(cs1, cs2).run();
}

}  // namespace bsn
