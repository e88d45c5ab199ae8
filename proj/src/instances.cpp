#include "bsn/instances.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace bsn {

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return Distribution::Uniform;
  if (name == "clusters") return Distribution::Clusters;
  throw std::invalid_argument("unknown distribution: " + name);
}

namespace {

// Maps raw 64-bit output to [0, 1) without the library distributions, whose
// results differ between standard library implementations.
double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

double normal(std::mt19937_64& g) {
  const double u1 = 1.0 - unit(g), u2 = unit(g);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::acos(-1.0) * u2);
}

}  // namespace

std::vector<Point2> generate_instance(int n, std::uint64_t seed, Distribution dist) {
  if (n < 2) throw std::invalid_argument("generate_instance: n must be at least 2");
  std::mt19937_64 g(seed);
  std::vector<Point2> pts;
  std::set<Point2> seen;
  auto push = [&](Point2 p) {
    if (seen.insert(p).second) pts.push_back(p);
  };
  if (dist == Distribution::Uniform) {
    while (static_cast<int>(pts.size()) < n) push({unit(g), unit(g)});
    return pts;
  }
  const int group = (n + 3) / 4;
  const double sigma = 0.03;
  Point2 centre{};
  while (static_cast<int>(pts.size()) < n) {
    if (pts.size() % group == 0) centre = {unit(g), unit(g)};
    push({centre.x + sigma * normal(g), centre.y + sigma * normal(g)});
  }
  return pts;
}

}  // namespace bsn
