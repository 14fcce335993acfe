#include "vqh/oracle.hpp"

#include "vqh/metrics.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <random>
#include <stdexcept>

#include <json.hpp>

namespace vqh {

namespace {

std::array<int, 64> bfs_all(const DenseGraph& g, int src) {
  std::array<int, 64> dist;
  dist.fill(-1);
  std::deque<int> queue;
  dist[static_cast<std::size_t>(src)] = 0;
  queue.push_back(src);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    std::uint64_t nbrs = g.adjacency(cur);
    while (nbrs) {
      int v = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(cur)] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

struct PathSearch {
  const DenseGraph& g;
  int target;
  bool parity_prune;
  std::array<int, 64> dist_to_target;
  std::vector<int> walk;

  bool run(int cur, std::uint64_t visited, int remaining) {
    if (remaining == 0) return cur == target;
    const int d = dist_to_target[static_cast<std::size_t>(cur)];
    if (d < 0 || d > remaining) return false;
    if (parity_prune && ((remaining - d) & 1)) return false;
    // The rest of the walk needs `remaining` fresh vertices reachable
    // without touching the visited set.
    std::uint64_t blocked = visited & ~(std::uint64_t{1} << cur);
    std::uint64_t reach = std::uint64_t{1} << cur;
    std::uint64_t frontier = reach;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.adjacency(v);
      }
      next &= ~blocked & ~reach;
      reach |= next;
      frontier = next;
    }
    if (!((reach >> target) & 1u)) return false;
    if (std::popcount(reach) - 1 < remaining) return false;

    std::uint64_t nbrs = g.adjacency(cur) & ~visited;
    while (nbrs) {
      int v = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (v == target && remaining > 1) continue;
      walk.push_back(v);
      if (run(v, visited | (std::uint64_t{1} << v), remaining - 1)) return true;
      walk.pop_back();
    }
    return false;
  }
};

std::optional<std::vector<int>> search_path(const DenseGraph& g, int x, int y, int length) {
  if (length == 0) return x == y ? std::optional<std::vector<int>>{{x}} : std::nullopt;
  if (x == y) return std::nullopt;  // positive-length closed walks are cycles, not paths
  if (length > g.size() - 1) return std::nullopt;
  PathSearch search{g, y, g.bipartite(), bfs_all(g, y), {x}};
  if (search.run(x, std::uint64_t{1} << x, length)) return search.walk;
  return std::nullopt;
}

int checked_vertex(const DenseGraph& g, const VertexLabel& v) {
  if (v.dimension() != g.n()) throw std::invalid_argument("label dimension does not match graph");
  return static_cast<int>(v.bits());
}

std::uint64_t splitmix_uniform(std::mt19937_64& rng, std::uint64_t bound) {
  // Masked rejection keeps the draw uniform and engine-portable.
  if (bound <= 1) return 0;
  const int bits = std::bit_width(bound - 1);
  const std::uint64_t mask = bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  for (;;) {
    std::uint64_t r = rng() & mask;
    if (r < bound) return r;
  }
}

}  // namespace

DenseGraph::DenseGraph(const Graph& g, bool force)
    : family_(g.family()), n_(g.n()), size_(1 << g.n()), bipartite_(true) {
  if (n_ > kOracleHardCap) {
    throw std::out_of_range("the search oracle supports n <= " + std::to_string(kOracleHardCap));
  }
  if (n_ > kOracleDefaultCap && !force) {
    throw std::out_of_range("oracle queries above n = " + std::to_string(kOracleDefaultCap) +
                            " must be forced (raise the cap)");
  }
  for (int v = 0; v < size_; ++v) {
    for (const VertexLabel& nb : g.neighbors(g.label(static_cast<std::uint32_t>(v)))) {
      adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << nb.bits();
    }
  }
  std::array<int, 64> color;
  color.fill(-1);
  color[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    std::uint64_t nbrs = adj_[static_cast<std::size_t>(cur)];
    while (nbrs) {
      int v = std::countr_zero(nbrs);
      nbrs &= nbrs - 1;
      if (color[static_cast<std::size_t>(v)] < 0) {
        color[static_cast<std::size_t>(v)] = color[static_cast<std::size_t>(cur)] ^ 1;
        queue.push_back(v);
      } else if (color[static_cast<std::size_t>(v)] ==
                 color[static_cast<std::size_t>(cur)]) {
        bipartite_ = false;
      }
    }
  }
}

std::optional<PathSeq> oracle_find_path(const DenseGraph& g, const VertexLabel& x,
                                        const VertexLabel& y, int length) {
  if (length < 0) return std::nullopt;
  auto walk = search_path(g, checked_vertex(g, x), checked_vertex(g, y), length);
  if (!walk) return std::nullopt;
  std::vector<VertexLabel> verts;
  verts.reserve(walk->size());
  for (int v : *walk) verts.push_back(g.label(v));
  return PathSeq(std::move(verts));
}

bool oracle_exists_path(const DenseGraph& g, const VertexLabel& x, const VertexLabel& y,
                        int length) {
  return oracle_find_path(g, x, y, length).has_value();
}

std::optional<CycleSeq> oracle_find_cycle_through(const DenseGraph& g, const VertexLabel& x,
                                                  const VertexLabel& y, int length) {
  if (!g.adjacent(checked_vertex(g, x), checked_vertex(g, y))) {
    throw std::invalid_argument("cycle anchor is not an edge");
  }
  if (length < 3) return std::nullopt;
  // A length-(l-1) path between the endpoints cannot reuse the anchor edge,
  // so closing it yields the cycle.
  auto walk = search_path(g, checked_vertex(g, x), checked_vertex(g, y), length - 1);
  if (!walk) return std::nullopt;
  std::vector<VertexLabel> verts;
  verts.reserve(walk->size());
  for (int v : *walk) verts.push_back(g.label(v));
  return CycleSeq(std::move(verts));
}

bool oracle_exists_cycle_through(const DenseGraph& g, const VertexLabel& x,
                                 const VertexLabel& y, int length) {
  return oracle_find_cycle_through(g, x, y, length).has_value();
}

namespace {

bool extend_isomorphism(const DenseGraph& g1, const DenseGraph& g2, std::vector<int>& map,
                        std::uint64_t used, int next) {
  if (next == g1.size()) return true;
  for (int cand = 0; cand < g2.size(); ++cand) {
    if ((used >> cand) & 1u) continue;
    bool consistent = true;
    for (int prev = 0; prev < next; ++prev) {
      if (g1.adjacent(prev, next) != g2.adjacent(map[static_cast<std::size_t>(prev)], cand)) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    map[static_cast<std::size_t>(next)] = cand;
    if (extend_isomorphism(g1, g2, map, used | (std::uint64_t{1} << cand), next + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const DenseGraph& g1, const DenseGraph& g2) {
  if (g1.size() != g2.size()) return std::nullopt;
  std::vector<int> map(static_cast<std::size_t>(g1.size()), -1);
  if (extend_isomorphism(g1, g2, map, 0, 0)) return map;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Theorem sweeps.
// ---------------------------------------------------------------------------

namespace {

struct SweepState {
  VerificationReport report;
  std::optional<DenseGraph> dense;  // exhaustive mode only

  void fail(const EmbedRequest& req, std::string reason, std::string witness = "") {
    report.failures.push_back(SweepFailure{to_cli_string(req), std::move(reason),
                                           std::move(witness)});
  }
};

std::string render(const std::vector<VertexLabel>& verts) {
  std::string out;
  for (const auto& v : verts) {
    if (!out.empty()) out.push_back(' ');
    out += v.str();
  }
  return out;
}

void check_cycle_request(SweepState& state, const VertexLabel& x, const VertexLabel& y,
                         int len) {
  EmbedRequest req{EmbedKind::CycleThroughEdge, x, y, len};
  ++state.report.total_checked;
  auto result = cycle_through_edge(x, y, len);
  if (!result.ok()) {
    state.fail(req, "constructor refused: " + result.error().reason);
    return;
  }
  const CycleSeq& cycle = result.value();
  SeqCheck check = validate_cycle(cycle);
  if (!check.ok) {
    state.fail(req, std::string("invalid cycle: ") + std::string(seq_defect_name(check.defect)),
               render(cycle.vertices()));
    return;
  }
  if (static_cast<int>(cycle.length()) != len) {
    state.fail(req, "wrong length", render(cycle.vertices()));
    return;
  }
  if (!(cycle.vertices().front() == x && cycle.vertices().back() == y)) {
    state.fail(req, "anchor edge not on the cycle", render(cycle.vertices()));
  }
}

void check_cycle_refusal(SweepState& state, const VertexLabel& x, const VertexLabel& y, int len,
                         bool oracle_should_confirm_absent) {
  EmbedRequest req{EmbedKind::CycleThroughEdge, x, y, len};
  ++state.report.total_checked;
  auto result = cycle_through_edge(x, y, len);
  if (result.ok()) {
    state.fail(req, "constructor built a cycle on an excluded length",
               render(result.value().vertices()));
    return;
  }
  if (oracle_should_confirm_absent && state.dense) {
    auto witness = oracle_find_cycle_through(*state.dense, x, y, len);
    if (witness) {
      state.fail(req, "oracle found a cycle the theory says cannot exist",
                 render(witness->vertices()));
    }
  }
}

void check_path_request(SweepState& state, const VertexLabel& x, const VertexLabel& y, int len) {
  EmbedRequest req{EmbedKind::PathBetween, x, y, len};
  ++state.report.total_checked;
  auto result = path_between(x, y, len);
  if (!result.ok()) {
    state.fail(req, "constructor refused: " + result.error().reason);
    return;
  }
  const PathSeq& path = result.value();
  SeqCheck check = validate_path(path);
  if (!check.ok) {
    state.fail(req, std::string("invalid path: ") + std::string(seq_defect_name(check.defect)),
               render(path.vertices()));
    return;
  }
  if (static_cast<int>(path.length()) != len) {
    state.fail(req, "wrong length", render(path.vertices()));
    return;
  }
  if (!(path.vertices().front() == x && path.vertices().back() == y)) {
    state.fail(req, "endpoints do not match the request", render(path.vertices()));
  }
}

void check_path_refusal(SweepState& state, const VertexLabel& x, const VertexLabel& y, int len,
                        bool oracle_should_confirm_absent) {
  EmbedRequest req{EmbedKind::PathBetween, x, y, len};
  ++state.report.total_checked;
  auto result = path_between(x, y, len);
  if (result.ok()) {
    state.fail(req, "constructor built a path on an excluded length",
               render(result.value().vertices()));
    return;
  }
  if (oracle_should_confirm_absent && state.dense) {
    auto witness = oracle_find_path(*state.dense, x, y, len);
    if (witness) {
      state.fail(req, "oracle found a path the theory says cannot exist",
                 render(witness->vertices()));
    }
  }
}

void require_sweep_dimension(int n, const SweepOptions& opts) {
  if (opts.exhaustive) {
    if (n < 2 || n > 4) throw std::out_of_range("exhaustive sweeps support 2 <= n <= 4");
  } else {
    if (n < 3 || n > 12) throw std::out_of_range("sampled sweeps support 3 <= n <= 12");
  }
}

}  // namespace

SweepOptions default_sweep_options(int n) {
  SweepOptions opts;
  opts.exhaustive = n <= 4;
  return opts;
}

VerificationReport sweep_theorem31(int n) { return sweep_theorem31(n, default_sweep_options(n)); }
VerificationReport sweep_theorem32(int n) { return sweep_theorem32(n, default_sweep_options(n)); }

VerificationReport sweep_theorem31(int n, const SweepOptions& opts) {
  require_sweep_dimension(n, opts);
  const auto start = std::chrono::steady_clock::now();
  Graph g(Family::VQ, n);
  SweepState state;
  state.report.scope = "theorem-3.1";
  state.report.n = n;
  state.report.exhaustive = opts.exhaustive;
  state.report.seed = opts.seed;

  if (opts.exhaustive) {
    state.dense.emplace(g);
    const int full = 1 << n;
    g.for_each_edge([&](const VertexLabel& x, const VertexLabel& y) {
      const int level = edge_level(x, y);
      for (int len = 3; len <= full; ++len) {
        if (len == 3) {
          check_cycle_refusal(state, x, y, len, /*oracle_should_confirm_absent=*/true);
        } else if (len == 5 && level % 3 != 0) {
          // Nonexistence is only claimed for the top matching edges; lower
          // levels may carry five-cycles through coarser levels.
          check_cycle_refusal(state, x, y, len, /*oracle_should_confirm_absent=*/level == n);
        } else {
          check_cycle_request(state, x, y, len);
        }
      }
    });
  } else {
    std::mt19937_64 rng(opts.seed);
    const std::uint64_t verts = std::uint64_t{1} << n;
    const std::uint64_t domain = (std::uint64_t{1} << n) - 6 + 2;  // {4} plus [6, 2^n]
    for (int a = 0; a < opts.anchors; ++a) {
      VertexLabel x(n, static_cast<std::uint32_t>(splitmix_uniform(rng, verts)));
      int level = 1 + static_cast<int>(splitmix_uniform(rng, static_cast<std::uint64_t>(n)));
      VertexLabel y = transversal_neighbor(x, level);
      for (int t = 0; t < opts.lengths_per_anchor; ++t) {
        std::uint64_t idx = splitmix_uniform(rng, domain);
        int len = idx == 0 ? 4 : static_cast<int>(5 + idx);
        check_cycle_request(state, x, y, len);
      }
    }
  }

  state.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return state.report;
}

VerificationReport sweep_theorem32(int n, const SweepOptions& opts) {
  require_sweep_dimension(n, opts);
  if (opts.exhaustive && n < 3) throw std::out_of_range("path sweeps need n >= 3");
  const auto start = std::chrono::steady_clock::now();
  Graph g(Family::VQ, n);
  SweepState state;
  state.report.scope = "theorem-3.2";
  state.report.n = n;
  state.report.exhaustive = opts.exhaustive;
  state.report.seed = opts.seed;
  const int full = 1 << n;

  auto probe_pair = [&](const VertexLabel& x, const VertexLabel& y, int d, int len) {
    const bool adjacent_pair = d == 1;
    const int level = adjacent_pair ? edge_level(x, y) : 0;
    if (len < d) {
      check_path_refusal(state, x, y, len, /*oracle_should_confirm_absent=*/true);
    } else if (adjacent_pair && len == 2) {
      check_path_refusal(state, x, y, len, /*oracle_should_confirm_absent=*/true);
    } else if (adjacent_pair && len == 4 && level % 3 != 0) {
      check_path_refusal(state, x, y, len, /*oracle_should_confirm_absent=*/level == n);
    } else {
      check_path_request(state, x, y, len);
    }
  };

  if (opts.exhaustive) {
    state.dense.emplace(g);
    for (std::uint32_t xv = 0; xv < static_cast<std::uint32_t>(full); ++xv) {
      VertexLabel x(n, xv);
      DistanceTable table = bfs_distances(g, x);
      for (std::uint32_t yv = 0; yv < static_cast<std::uint32_t>(full); ++yv) {
        if (xv == yv) continue;
        VertexLabel y(n, yv);
        const int d = static_cast<int>(table.dist[yv]);
        for (int len = 1; len <= full - 1; ++len) probe_pair(x, y, d, len);
      }
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    const std::uint64_t verts = std::uint64_t{1} << n;
    for (int a = 0; a < opts.anchors; ++a) {
      VertexLabel x(n, static_cast<std::uint32_t>(splitmix_uniform(rng, verts)));
      VertexLabel y = x;
      while (y == x) {
        y = VertexLabel(n, static_cast<std::uint32_t>(splitmix_uniform(rng, verts)));
      }
      const int d = distance(g, x, y);
      for (int t = 0; t < opts.lengths_per_anchor; ++t) {
        int len = d + static_cast<int>(splitmix_uniform(
                          rng, static_cast<std::uint64_t>(full - 1 - d + 1)));
        probe_pair(x, y, d, len);
      }
    }
  }

  state.report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return state.report;
}

std::string to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["scope"] = report.scope;
  j["family"] = std::string(family_name(report.family));
  j["n"] = report.n;
  j["mode"] = report.exhaustive ? "exhaustive" : "sample";
  j["seed"] = report.seed;
  j["total_checked"] = report.total_checked;
  j["elapsed_seconds"] = report.elapsed_seconds;
  j["passed"] = report.passed();
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    j["failures"].push_back({{"request", f.request}, {"reason", f.reason}, {"witness", f.witness}});
  }
  return j.dump();
}

std::string summary_line(const VerificationReport& report) {
  std::string out = report.scope + " " + std::string(family_name(report.family)) +
                    " n=" + std::to_string(report.n) +
                    (report.exhaustive ? " exhaustive" : " sample seed=" + std::to_string(report.seed)) +
                    ": " + std::to_string(report.total_checked) + " checks, " +
                    std::to_string(report.failures.size()) + " failures";
  char buf[32];
  std::snprintf(buf, sizeof(buf), " (%.3fs)", report.elapsed_seconds);
  return out + buf;
}

}  // namespace vqh
