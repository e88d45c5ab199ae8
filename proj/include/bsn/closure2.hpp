#pragma once

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bsn/geom.hpp"
#include "bsn/graph.hpp"

namespace bsn {

enum class CaseTag { Block, Case1, Case2, Case2_1, Case2_2, Case3 };

std::string to_string(CaseTag tag);

// Leaf blocks (indices into BlockCutForest::blocks) assigned to s1 and s2.
struct Partition {
  std::vector<int> y1;
  std::vector<int> y2;
};

// Block path of M0 with 0-based indices: cells[i] is B_{i+1}.
struct BlockPath {
  std::vector<std::vector<int>> blocks;  // M0 vertex sets in path order
  std::vector<int> tau;                  // tau[i] joins blocks i and i+1
  std::vector<std::vector<int>> cells;   // partition of V(M0)
  std::vector<int> cell_of;              // cell index per M0 vertex
  bool j1 = false;                       // first block is a single edge
  bool j2 = false;                       // last block is a single edge
  std::vector<int> i0;                   // admissible cell indices

  int size() const { return static_cast<int>(blocks.size()); }
};

// M0 uses vertices 0..n-1 for G, n for s1 and n+1 for s2.
struct CriticalTopology {
  Partition partition;
  std::vector<int> isolated_blocks;  // associated with both Steiner points
  std::vector<char> independent;     // per isolated block: needs distinct endpoints
  std::vector<int> rep1;             // representative interior vertex per y1 block
  std::vector<int> rep2;
  std::vector<int> covered1;         // component ids that are s1-covered
  std::vector<int> covered2;
  Graph m0;
  CaseTag tag = CaseTag::Case1;
  std::optional<BlockPath> path;     // Case2 only
};

// Steiner part of an embedded 2-block closure.
struct Closure2 {
  Point2 s1;
  Point2 s2;
  std::vector<int> n1;  // terminal neighbours of s1
  std::vector<int> n2;
  bool s1s2 = false;
  double radius = std::numeric_limits<double>::infinity();  // longest Steiner edge
  CaseTag tag = CaseTag::Case1;
  int chosen_index = -1;  // Case2_1: cell index a (0-based)

  bool valid() const { return radius < std::numeric_limits<double>::infinity(); }
};

// Unordered 2-partitions of the leaf blocks. Both sides are nonempty when
// `connected`; otherwise one side may be empty.
std::vector<Partition> enumerate_partitions(const BlockCutForest& bcf, bool connected);

// Builds M0 for a partition. A negative representative selects the smallest
// interior vertex of the block. Throws std::logic_error if M0 has an
// unexpected structure.
CriticalTopology classify(const Graph& g, const BlockCutForest& bcf, const Partition& p,
                          int rep1 = -1, int rep2 = -1);

// Case1 and Case3: exact search over the endpoints used in non-vertex
// isolated blocks.
Closure2 locate_case1(const Graph& g, std::span<const Point2> points, const BlockCutForest& bcf,
                      const CriticalTopology& topo);
Closure2 locate_case3(const Graph& g, std::span<const Point2> points, const BlockCutForest& bcf,
                      const CriticalTopology& topo);

enum class IndexSearch { Binary, Scan };

// Case2_1: path topology without an s1 s2 edge.
Closure2 locate_case2_1(std::span<const Point2> points, const BlockCutForest& bcf,
                        const CriticalTopology& topo, IndexSearch mode = IndexSearch::Scan);
// Case2_2: path topology with an s1 s2 edge.
Closure2 locate_case2_2(std::span<const Point2> points, const BlockCutForest& bcf,
                        const CriticalTopology& topo);
// Cheaper of the two subcases.
Closure2 locate_case2(std::span<const Point2> points, const BlockCutForest& bcf,
                      const CriticalTopology& topo, IndexSearch mode = IndexSearch::Scan);

// Per-partition and per-case results, for inspection.
struct CandidateClosure {
  Partition partition;
  Closure2 closure;
};

// Optimal 2-block closure over all partitions and cases.
Closure2 optimal_2block_closure(const Graph& g, std::span<const Point2> points,
                                std::vector<CandidateClosure>* candidates = nullptr,
                                IndexSearch mode = IndexSearch::Scan);

// g plus s1 (index n), s2 (index n+1) and the Steiner edges, with lengths.
Graph embed_closure2(const Graph& g, std::span<const Point2> points, const Closure2& c);

// Moves coincident Steiner points (with each other or with a terminal) by
// `eps` in the direction that least increases their longest edge, then
// recomputes the radius.
void separate_steiner_points(Closure2& c, std::span<const Point2> points, double eps);

}  // namespace bsn
