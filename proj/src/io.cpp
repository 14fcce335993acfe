#include "vqh/io.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vqh {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# family=" << family_name(g.family()) << " n=" << g.n() << "\n";
  g.for_each_edge([&](const VertexLabel& x, const VertexLabel& y) {
    out << x.str() << ' ' << y.str() << "\n";
  });
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

ParsedEdgeList parse_edge_list(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("empty edge list");
  ParsedEdgeList parsed;
  {
    std::istringstream hs(header);
    std::string hash, fam_kv, n_kv;
    hs >> hash >> fam_kv >> n_kv;
    if (hash != "#" || fam_kv.rfind("family=", 0) != 0 || n_kv.rfind("n=", 0) != 0) {
      throw std::invalid_argument("bad edge-list header: " + header);
    }
    parsed.family = parse_family(fam_kv.substr(7));
    parsed.n = std::stoi(n_kv.substr(2));
    if (parsed.n < 1 || parsed.n > kMaxDimension) {
      throw std::invalid_argument("header dimension out of range");
    }
  }
  std::string line;
  std::string prev;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw std::invalid_argument("blank line " + std::to_string(lineno));
    auto space = line.find(' ');
    if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
      throw std::invalid_argument("malformed line " + std::to_string(lineno));
    }
    VertexLabel a = VertexLabel::parse(line.substr(0, space));
    VertexLabel b = VertexLabel::parse(line.substr(space + 1));
    if (a.dimension() != parsed.n || b.dimension() != parsed.n) {
      throw std::invalid_argument("label width mismatch on line " + std::to_string(lineno));
    }
    if (!(a.bits() < b.bits())) {
      throw std::invalid_argument("endpoints out of order on line " + std::to_string(lineno));
    }
    if (!prev.empty() && !(prev < line)) {
      throw std::invalid_argument("lines out of order at line " + std::to_string(lineno));
    }
    prev = line;
    parsed.edges.emplace_back(a, b);
  }
  return parsed;
}

ParsedEdgeList parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

void write_dot(std::ostream& out, const Graph& g) {
  out << "graph " << family_name(g.family()) << "_" << g.n() << " {\n";
  out << "  node [shape=circle];\n";
  g.for_each_edge([&](const VertexLabel& x, const VertexLabel& y) {
    out << "  \"" << x.str() << "\" -- \"" << y.str() << "\";\n";
  });
  out << "}\n";
}

std::string embedding_record_json(Family family, const EmbedRequest& request,
                                  const std::vector<VertexLabel>& vertices) {
  nlohmann::json j;
  j["family"] = std::string(family_name(family));
  j["n"] = request.a.dimension();
  j["kind"] = request.kind == EmbedKind::CycleThroughEdge ? "cycle" : "path";
  j["anchor"] = {request.a.str(), request.b.str()};
  j["length"] = request.length;
  auto verts = nlohmann::json::array();
  for (const auto& v : vertices) verts.push_back(v.str());
  j["vertices"] = std::move(verts);
  return j.dump();
}

std::string render_labels(const std::vector<VertexLabel>& vertices) {
  std::string out;
  for (const auto& v : vertices) {
    if (!out.empty()) out.push_back(' ');
    out += v.str();
  }
  return out;
}

}  // namespace vqh
