#include "vqh/metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vqh {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void require_cap(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw std::out_of_range("exhaustive metrics capped at n=" + std::to_string(cap) +
                            "; raise the cap to force");
  }
}

// BFS over the block spanned by bit positions 1..k around `source`; all
// visited labels share the bits above k. Returns distances indexed by the
// low k bits.
std::vector<std::uint32_t> bfs_block(int k, const VertexLabel& source) {
  const std::uint32_t size = 1u << k;
  std::vector<std::uint32_t> dist(size, kUnreached);
  std::deque<std::uint32_t> queue;
  const std::uint32_t mask = size - 1;
  dist[source.bits() & mask] = 0;
  queue.push_back(source.bits() & mask);
  const std::uint32_t prefix = source.bits() & ~mask;
  const int dim = source.dimension();
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    VertexLabel v(dim, prefix | cur);
    for (int m = 1; m <= k; ++m) {
      std::uint32_t next = transversal_neighbor(v, m).bits() & mask;
      if (dist[next] == kUnreached) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

void require_in_half(int n, Half half, const VertexLabel& v, const char* what) {
  if (v.dimension() != n) throw std::invalid_argument("label dimension does not match n");
  if (half_of(v) != half) {
    throw std::invalid_argument(std::string(what) + " is not in the requested half");
  }
}

}  // namespace

DistanceTable bfs_distances(const Graph& g, const VertexLabel& source) {
  if (source.dimension() != g.n()) {
    throw std::invalid_argument("label dimension does not match graph");
  }
  DistanceTable table;
  table.source = source;
  table.dist.assign(g.vertex_count(), kUnreached);
  std::deque<std::uint32_t> queue;
  table.dist[source.bits()] = 0;
  queue.push_back(source.bits());
  while (!queue.empty()) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    VertexLabel v = g.label(cur);
    for (int m = 1; m <= g.n(); ++m) {
      std::uint32_t next = g.neighbor(v, m).bits();
      if (table.dist[next] == kUnreached) {
        table.dist[next] = table.dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return table;
}

int distance(const Graph& g, const VertexLabel& x, const VertexLabel& y) {
  if (x == y) {
    if (x.dimension() != g.n()) throw std::invalid_argument("label dimension does not match graph");
    return 0;
  }
  DistanceTable t = bfs_distances(g, x);
  std::uint32_t d = t.dist[y.bits()];
  if (d == kUnreached) throw std::logic_error("graph is not connected");
  return static_cast<int>(d);
}

std::vector<VertexLabel> shortest_path(const Graph& g, const VertexLabel& x,
                                       const VertexLabel& y) {
  if (x.dimension() != g.n() || y.dimension() != g.n()) {
    throw std::invalid_argument("label dimension does not match graph");
  }
  if (x == y) return {x};
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreached);
  std::vector<std::uint32_t> parent(g.vertex_count(), 0);
  std::deque<std::uint32_t> queue;
  dist[x.bits()] = 0;
  queue.push_back(x.bits());
  while (!queue.empty() && dist[y.bits()] == kUnreached) {
    std::uint32_t cur = queue.front();
    queue.pop_front();
    for (const VertexLabel& nb : g.neighbors(g.label(cur))) {
      if (dist[nb.bits()] == kUnreached) {
        dist[nb.bits()] = dist[cur] + 1;
        parent[nb.bits()] = cur;
        queue.push_back(nb.bits());
      }
    }
  }
  if (dist[y.bits()] == kUnreached) throw std::logic_error("graph is not connected");
  std::vector<VertexLabel> path;
  for (std::uint32_t v = y.bits();; v = parent[v]) {
    path.push_back(g.label(v));
    if (v == x.bits()) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int diameter(const Graph& g, int cap) {
  require_cap(g, cap);
  std::uint32_t best = 0;
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    DistanceTable t = bfs_distances(g, g.label(static_cast<std::uint32_t>(v)));
    for (std::uint32_t d : t.dist) best = std::max(best, d);
  }
  return static_cast<int>(best);
}

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Fraction avg_distance(const Graph& g, int cap) {
  require_cap(g, cap);
  std::uint64_t sum = 0;
  for (std::uint64_t v = 0; v < g.vertex_count(); ++v) {
    DistanceTable t = bfs_distances(g, g.label(static_cast<std::uint32_t>(v)));
    for (std::uint32_t d : t.dist) sum += d;
  }
  std::uint64_t pairs = g.vertex_count() * (g.vertex_count() - 1);
  std::uint64_t gcd = std::gcd(sum, pairs);
  return Fraction{sum / gcd, pairs / gcd};
}

int half_distance(int n, Half half, const VertexLabel& x, const VertexLabel& y) {
  if (n < 2 || n > kMaxDimension) throw std::out_of_range("n out of range");
  require_in_half(n, half, x, "first endpoint");
  require_in_half(n, half, y, "second endpoint");
  if (x == y) return 0;
  auto dist = bfs_block(n - 1, x);
  std::uint32_t mask = (1u << (n - 1)) - 1;
  std::uint32_t d = dist[y.bits() & mask];
  if (d == kUnreached) throw std::logic_error("half subgraph is not connected");
  return static_cast<int>(d);
}

int mirror_distance_delta(int n, const VertexLabel& x_left, const VertexLabel& y_left) {
  require_in_half(n, Half::Left, x_left, "first endpoint");
  require_in_half(n, Half::Left, y_left, "second endpoint");
  int d_left = half_distance(n, Half::Left, x_left, y_left);
  int d_right = half_distance(n, Half::Right, transversal_neighbor(x_left, n),
                              transversal_neighbor(y_left, n));
  return d_left - d_right;
}

SplitWitness shortest_split(int n, const VertexLabel& x, const VertexLabel& y) {
  require_in_half(n, Half::Left, x, "first endpoint");
  require_in_half(n, Half::Right, y, "second endpoint");
  auto from_x = bfs_block(n - 1, x);
  auto from_y = bfs_block(n - 1, y);
  const std::uint32_t mask = (1u << (n - 1)) - 1;
  SplitWitness best;
  int best_total = std::numeric_limits<int>::max();
  for (std::uint32_t u = 0; u < (1u << (n - 1)); ++u) {
    VertexLabel u_left(n, u);  // left half: top bit is 0
    VertexLabel u_right = transversal_neighbor(u_left, n);
    int total = static_cast<int>(from_x[u]) + 1 + static_cast<int>(from_y[u_right.bits() & mask]);
    if (total < best_total) {
      best_total = total;
      best = SplitWitness{u_left, u_right, static_cast<int>(from_x[u]),
                          static_cast<int>(from_y[u_right.bits() & mask])};
    }
  }
  return best;
}

}  // namespace vqh
