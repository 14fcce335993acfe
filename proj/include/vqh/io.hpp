#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vqh/embedding.hpp"
#include "vqh/topology.hpp"

namespace vqh {

/// Edge-list text: a `# family=<F> n=<n>` header followed by one edge per
/// line, two MSB-first labels separated by a single space, lines sorted
/// lexicographically.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

struct ParsedEdgeList {
  Family family = Family::VQ;
  int n = 0;
  std::vector<std::pair<VertexLabel, VertexLabel>> edges;
};

/// Strict parser for the format above; throws std::invalid_argument on any
/// malformed, misordered, or duplicate line.
ParsedEdgeList parse_edge_list(std::istream& in);
ParsedEdgeList parse_edge_list(const std::string& text);

/// Graphviz text mirroring the edge-list ordering.
void write_dot(std::ostream& out, const Graph& g);

/// One-line structured record for a constructed embedding.
std::string embedding_record_json(Family family, const EmbedRequest& request,
                                  const std::vector<VertexLabel>& vertices);

std::string render_labels(const std::vector<VertexLabel>& vertices);  // "v0 v1 ... vk"

}  // namespace vqh
