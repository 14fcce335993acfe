#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqh/embedding.hpp"
#include "vqh/topology.hpp"

namespace vqh {

/// Dimension ceiling for targeted oracle queries; raise with `force` up to
/// the bitmask limit of 6 (64 vertices).
inline constexpr int kOracleDefaultCap = 5;
inline constexpr int kOracleHardCap = 6;

/// Materialized adjacency for exhaustive search. Small on purpose: vertex
/// sets are bitmasks in a single 64-bit word.
class DenseGraph {
 public:
  explicit DenseGraph(const Graph& g, bool force = false);

  Family family() const { return family_; }
  int n() const { return n_; }
  int size() const { return size_; }
  bool bipartite() const { return bipartite_; }
  std::uint64_t adjacency(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1u; }
  VertexLabel label(int v) const { return VertexLabel(n_, static_cast<std::uint32_t>(v)); }

 private:
  Family family_;
  int n_;
  int size_;
  bool bipartite_;
  std::array<std::uint64_t, 64> adj_{};
};

/// Exact existence of a path with exactly `length` edges. Depth-first search
/// over distinct vertices with admissible pruning only (distance bound,
/// bipartite parity, reachable-count), so the answer is exact and the first
/// witness in ascending neighbor order is returned.
std::optional<PathSeq> oracle_find_path(const DenseGraph& g, const VertexLabel& x,
                                        const VertexLabel& y, int length);
bool oracle_exists_path(const DenseGraph& g, const VertexLabel& x, const VertexLabel& y,
                        int length);

/// Exact existence of a cycle of `length` edges containing the edge xy.
std::optional<CycleSeq> oracle_find_cycle_through(const DenseGraph& g, const VertexLabel& x,
                                                  const VertexLabel& y, int length);
bool oracle_exists_cycle_through(const DenseGraph& g, const VertexLabel& x,
                                 const VertexLabel& y, int length);

/// Exhaustive backtracking isomorphism search. Returns a vertex bijection
/// (indexed by g1 vertex, value in g2) or nothing.
std::optional<std::vector<int>> find_isomorphism(const DenseGraph& g1, const DenseGraph& g2);

struct SweepFailure {
  std::string request;  // replayable CLI invocation
  std::string reason;
  std::string witness;
};

struct VerificationReport {
  std::string scope;
  Family family = Family::VQ;
  int n = 0;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t total_checked = 0;
  std::vector<SweepFailure> failures;
  double elapsed_seconds = 0.0;
  bool passed() const { return failures.empty(); }
};

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct SweepOptions {
  bool exhaustive = true;
  std::uint64_t seed = kDefaultSeed;
  int anchors = 100;
  int lengths_per_anchor = 10;
};

/// Default mode for a dimension: exhaustive through n = 4, sampled beyond.
SweepOptions default_sweep_options(int n);

/// Edge-pancyclicity sweep: every guaranteed (edge, length) through the
/// constructors with structural validation; in exhaustive mode the excluded
/// lengths are cross-checked against the search oracle where nonexistence is
/// claimed.
VerificationReport sweep_theorem31(int n, const SweepOptions& opts);
VerificationReport sweep_theorem31(int n);

/// Panconnectivity sweep over ordered vertex pairs, same contract.
VerificationReport sweep_theorem32(int n, const SweepOptions& opts);
VerificationReport sweep_theorem32(int n);

std::string to_json(const VerificationReport& report);
std::string summary_line(const VerificationReport& report);

}  // namespace vqh
