#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vqh/topology.hpp"

namespace vqh {

/// A vertex sequence with all vertices distinct and consecutive vertices
/// adjacent; the length is the edge count (vertex count - 1).
class PathSeq {
 public:
  PathSeq() = default;
  explicit PathSeq(std::vector<VertexLabel> vertices) : verts_(std::move(vertices)) {}
  const std::vector<VertexLabel>& vertices() const { return verts_; }
  std::size_t length() const { return verts_.empty() ? 0 : verts_.size() - 1; }
  friend bool operator==(const PathSeq&, const PathSeq&) = default;

 private:
  std::vector<VertexLabel> verts_;
};

/// A cycle listed once, closure edge implicit between last and first vertex;
/// the length equals the vertex count. Constructors in this module emit
/// cycles in canonical form: the anchor edge is the closure edge, so the
/// vertex list doubles as the anchor-avoiding path between its endpoints.
class CycleSeq {
 public:
  CycleSeq() = default;
  explicit CycleSeq(std::vector<VertexLabel> vertices) : verts_(std::move(vertices)) {}
  const std::vector<VertexLabel>& vertices() const { return verts_; }
  std::size_t length() const { return verts_.size(); }
  friend bool operator==(const CycleSeq&, const CycleSeq&) = default;

 private:
  std::vector<VertexLabel> verts_;
};

enum class EmbedErrc {
  LengthExcluded,  // the requested length is outside the guaranteed domain
  NotGuaranteed,   // no construction exists at this level; existence unsettled
};

std::string_view embed_errc_name(EmbedErrc c);

struct EmbedError {
  EmbedErrc code;
  std::string reason;
};

/// Either a sequence or a typed refusal. Misuse (non-edges, dimension
/// mismatches, unsupported n) throws instead.
template <typename Seq>
class EmbedResult {
 public:
  EmbedResult(Seq seq) : state_(std::move(seq)) {}
  EmbedResult(EmbedError err) : state_(std::move(err)) {}

  bool ok() const { return std::holds_alternative<Seq>(state_); }
  explicit operator bool() const { return ok(); }

  const Seq& value() const {
    if (!ok()) throw std::logic_error("EmbedResult holds an error: " + error().reason);
    return std::get<Seq>(state_);
  }
  const EmbedError& error() const {
    if (ok()) throw std::logic_error("EmbedResult holds a value");
    return std::get<EmbedError>(state_);
  }

 private:
  std::variant<Seq, EmbedError> state_;
};

/// Four-cycle through any edge; n >= 2.
EmbedResult<CycleSeq> cycle4_through(const VertexLabel& x, const VertexLabel& y);

/// Five-cycle through an edge whose level is a multiple of 3. Other edges
/// get NotGuaranteed: no five-cycle crosses such an edge at its own level,
/// and this library does not search beyond the construction.
EmbedResult<CycleSeq> cycle5_through(const VertexLabel& x, const VertexLabel& y);

/// Six- or seven-cycle through a top-level matching edge (level == n), n >= 3.
EmbedResult<CycleSeq> cycle67_through(const VertexLabel& x, const VertexLabel& y, int length);

/// Path of length 2^n - 2 or 2^n - 1 between any distinct pair; n >= 3.
/// Throws std::invalid_argument for any other length.
EmbedResult<PathSeq> near_hamiltonian_path(const VertexLabel& x, const VertexLabel& y,
                                           int length);

/// Cycle of the requested length through the given edge. Guaranteed for
/// length 4 and every length in [6, 2^n]; length 5 is additionally honored
/// when the edge level is a multiple of 3.
EmbedResult<CycleSeq> cycle_through_edge(const VertexLabel& x, const VertexLabel& y, int length);

/// Path of the requested length between two distinct vertices at distance d.
/// Guaranteed for every length in [d, 2^n - 1] except 2 and 4 when d == 1;
/// length 4 is honored for adjacent pairs whose edge level is a multiple
/// of 3. Requires n >= 3.
EmbedResult<PathSeq> path_between(const VertexLabel& x, const VertexLabel& y, int length);

enum class SeqDefect {
  None,
  Empty,
  TooShort,
  DimensionMismatch,
  RepeatedVertex,
  NonAdjacentStep,
  BrokenClosure,
};

std::string_view seq_defect_name(SeqDefect d);

struct SeqCheck {
  bool ok = false;
  SeqDefect defect = SeqDefect::None;
  std::size_t at = 0;  // index of the offending vertex/step
};

SeqCheck validate_path(const PathSeq& path);
SeqCheck validate_cycle(const CycleSeq& cycle);

enum class EmbedKind { CycleThroughEdge, PathBetween };

struct EmbedRequest {
  EmbedKind kind = EmbedKind::CycleThroughEdge;
  VertexLabel a, b;
  int length = 0;
};

/// Replayable rendering, matching the CLI argument layout.
std::string to_cli_string(const EmbedRequest& r);

}  // namespace vqh
