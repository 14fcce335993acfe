#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vqh/topology.hpp"

namespace vqh {

/// Exhaustive all-pairs metrics refuse to run above this dimension unless a
/// larger cap is passed explicitly.
inline constexpr int kDefaultMetricsCap = 14;

/// Hop counts from one source to every vertex, indexed by label bits.
struct DistanceTable {
  VertexLabel source;
  std::vector<std::uint32_t> dist;
};

DistanceTable bfs_distances(const Graph& g, const VertexLabel& source);

int distance(const Graph& g, const VertexLabel& x, const VertexLabel& y);

/// Deterministic shortest path: BFS with vertices scanned in ascending label
/// order, each vertex keeping its first discovered parent.
std::vector<VertexLabel> shortest_path(const Graph& g, const VertexLabel& x,
                                       const VertexLabel& y);

int diameter(const Graph& g, int cap = kDefaultMetricsCap);

/// Exact reduced fraction.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Mean distance over ordered pairs of distinct vertices.
Fraction avg_distance(const Graph& g, int cap = kDefaultMetricsCap);

/// Distance inside the induced half of the varietal hypercube. Both labels
/// must lie in that half; the result always equals the whole-graph distance.
int half_distance(int n, Half half, const VertexLabel& x, const VertexLabel& y);

/// d_left(x, y) - d_right(partner(x), partner(y)) for a pair in the left
/// half. Zero whenever n is not a multiple of 3; within [-2, 2] otherwise.
int mirror_distance_delta(int n, const VertexLabel& x_left, const VertexLabel& y_left);

struct SplitWitness {
  VertexLabel u_left, u_right;
  int left_dist = 0;
  int right_dist = 0;
  int total() const { return left_dist + 1 + right_dist; }
};

/// Matching edge (u_left, u_right) minimizing d_L(x, u_left) + 1 +
/// d_R(u_right, y) for x in the left half and y in the right half. The
/// minimum equals the whole-graph distance; ties break to the smallest
/// u_left by label value.
SplitWitness shortest_split(int n, const VertexLabel& x, const VertexLabel& y);

}  // namespace vqh
