#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bsn/geom.hpp"

namespace bsn {

enum class Distribution { Uniform, Clusters };

Distribution parse_distribution(const std::string& name);

// Deterministic for fixed arguments on any platform. Uniform draws from the
// unit square; Clusters places groups of ceil(n/4) points around random
// centres. Points are pairwise distinct. Requires n >= 2.
std::vector<Point2> generate_instance(int n, std::uint64_t seed, Distribution dist);

}  // namespace bsn
